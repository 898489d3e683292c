#pragma once

// Assembled upper-bound pipeline for G(k), the least s such that every
// sufficiently large integer is a sum of s positive k-th powers, and for
// its almost-all counterpart G+(k).
//
// The chain is
//
//     G0(k) = min over v of  v + Delta_v / tau(k)
//     H(k)  = max{ floor(G0(k)) + 1, 2k+3 }   (4k instead of 2k+3
//                                              when k is a power of 2)
//     G+(k) <= ceil((H(k) + 1) / 2)
//
// together with the closed forms
//
//     ceil(k (log k + 4.20032))                   (integer bound)
//     k (log k + C1) + C2, C1 ~ 4.200189, C2 ~ 3.015478   (strict bound)
//
// and a small bundled table of the best published bounds for comparison.

#include <cstdint>
#include <string>
#include <vector>

#include "waring/exponents.hpp"

namespace waring {

// Minimum of v + Delta_v / tau(k) over available orders v, with the
// minimizing v.  Formula mode scans even v with the closed-form exponents;
// since Delta_v >= 0 the objective is >= v, so the scan stops once v
// exceeds the best value found.  Table mode minimizes over the table's rows
// for k.  Requires k >= 4.
struct GZeroResult {
    double value = 0.0;
    int v = 0;
};
GZeroResult g0(int k, ExponentSource source,
               const ExponentTable* table = nullptr);

// H(k) = max{ floor(G0(k)) + 1, 2k + 3 }, with 4k replacing 2k + 3 when k
// is a power of 2.
std::int64_t g_upper(int k, ExponentSource source,
                     const ExponentTable* table = nullptr);

// ceil(k (log k + 4.20032)), natural logarithm.  Requires k >= 1.
std::int64_t thm11_bound(std::int64_t k);

// k (log k + C1) + C2 with the solved constants.  The underlying inequality
// is strict, so the integer bound derived from a non-integral value is
// ceil(value) - 1; thm12_integer_bound applies that rule.
double thm12_value(std::int64_t k);
std::int64_t thm12_integer_bound(std::int64_t k);

// G+(k) <= ceil((h + 1) / 2) for h a valid G(k) bound.  For k in
// {4, 8, 16, 32} the exact value G+(k) = 4k is known and reported
// alongside, with the sharper almost-all thresholds H+(16) = 53 and
// H+(32) = 123 noted.
struct GPlusInfo {
    std::int64_t bound = 0;
    bool has_exact = false;
    std::int64_t exact_value = 0;
    std::string note;
};
GPlusInfo gplus_bound(std::int64_t k, std::int64_t h);

// nu = min{ 2 |Delta_s*| / k, 1 / (6k) }, positive exactly when the
// minor-arc exponent Delta_s* is negative.
double nu(int k, int s, double tau_val, const ExponentTable* table = nullptr);

// One row of the bundled best-published-bounds file (`k,bound,source`).
struct LiteratureBound {
    std::int64_t k = 0;
    std::int64_t bound = 0;
    std::string source;
};
std::vector<LiteratureBound> load_literature_bounds(const std::string& path);
const std::vector<LiteratureBound>& bundled_literature_bounds();

// Smallest known bound for G(k) among: the table-mode pipeline above (when
// the bundled exponent table covers k), the closed-form integer bound, and
// the bundled literature table.  Requires k >= 2.
struct BestKnown {
    std::int64_t bound = 0;
    std::string source;
};
BestKnown best_known(std::int64_t k);

// Everything above for one k, plus provenance.
struct BoundReport {
    int k = 0;
    double g0 = 0.0;
    int g0_minimizing_v = 0;
    std::int64_t thm62_bound = 0; // H(k)
    std::int64_t thm11_bound = 0;
    double thm12_value = 0.0;
    std::int64_t gplus_bound = 0;
    bool gplus_has_exact = false;
    std::int64_t gplus_exact_value = 0;
    std::string gplus_note;
    double nu = 0.0; // at s = H(k); 0 when unavailable
    std::int64_t best_known = 0;
    std::string best_source;
    ExponentSource source = ExponentSource::formula;
};
BoundReport bound_report(int k, ExponentSource source,
                         const ExponentTable* table = nullptr);

// Reports for k_lo..k_hi inclusive.  Table mode requires the table to
// cover the whole range.
std::vector<BoundReport> table_report(int k_lo, int k_hi,
                                      ExponentSource source,
                                      const ExponentTable* table = nullptr);

// CSV with header `k,G0,v,H,thm11,thm12,Gplus,best,source`.  Real fields
// are printed to 4 decimals rounded up in the final place, matching the
// convention of the published tables this reproduces.
std::string report_csv(const std::vector<BoundReport>& reports);

// Formats a real to 4 decimals, rounding up in the final decimal place.
std::string format_round_up_4(double value);

} // namespace waring
