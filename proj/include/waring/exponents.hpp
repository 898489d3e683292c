#pragma once

// Transcendental constants and admissible-exponent machinery.
//
// The quantities computed here all hang off two elementary equations:
//
//     omega - 2 - 1/omega = log omega           (omega ~ 3.548292)
//     x + log x = 1 - v/k,   Delta_v = k x      (exponent recursion, v >= 0)
//
// From the second equation one extracts
//
//     tau(k)     = max over even s of (k - 2 Delta_s) / s^2,
//     Delta_s*   = min over 0 <= t <= s-2 of (Delta_{s-t} - t tau),
//
// where the Delta values may be upgraded by a table of sharper published
// exponents.  The kappa optimization
//
//     kappa(xi) = (1 - xi - log xi + 2/k)^2 / (1 - 2 xi),  0 < xi < 1/2
//
// has a unique interior minimum whose large-k limit is
// omega^2 - 3 - 2/omega ~ 9.026725, the constant behind the closed-form
// bounds assembled in bounds.hpp.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace waring {

// One published admissible exponent: Delta_s for exponent k, moment order s.
// `source` is pure provenance (e.g. "VW2000"); selection logic never keys
// on it.
struct ExponentRow {
    int k = 0;
    int s = 0;
    double delta = 0.0;
    std::string source;
};

// Immutable collection of exponent rows, unique per (k, s, source), with
// 0 <= delta <= k and s >= 1 enforced at construction.
class ExponentTable {
  public:
    ExponentTable() = default;
    explicit ExponentTable(std::vector<ExponentRow> rows);

    const std::vector<ExponentRow>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }

    // Exact-match lookup; nullptr when no row has this (k, s).
    const ExponentRow* find(int k, int s) const;
    // All rows for a given k, in increasing s order.
    std::vector<ExponentRow> rows_for(int k) const;
    // True when at least one row exists for this k.
    bool covers(int k) const;

  private:
    std::vector<ExponentRow> rows_;
};

// Parses a CSV file with header `k,s,delta,source`.  Throws DataError with
// the offending line number on malformed input.
ExponentTable load_exponent_table(const std::string& path);

// Directory holding the bundled data files.  The WARING_DATA_DIR environment
// variable overrides the compiled-in default.
std::string data_dir();

// The bundled exponent table (data/exponents_vw2000.csv), loaded once.
const ExponentTable& bundled_exponent_table();

// Whether Delta values come from the closed-form recursion or from table
// rows.
enum class ExponentSource { formula, table };

// Root of omega - 2 - 1/omega = log omega in (3, 4); Newton iteration with
// verified sign-change bracket, residual < 1e-12.
double solve_omega();

// The derived constant pack.
//   C1    = 2 + log(omega^2 - 3 - 2/omega)            (~ 4.200189)
//   C2    = (omega^2 + 3 omega - 2)/(omega^2 - omega - 2)   (~ 3.015478)
//   delta_at_gamma1 solves delta + log delta + 1 = 0   (~ 0.2784645)
//   gamma_star = (1 - 1/omega + log omega) / 2         (~ 0.992320)
struct Constants {
    double omega = 0.0;
    double C1 = 0.0;
    double C2 = 0.0;
    double delta_at_gamma1 = 0.0;
    double gamma_star = 0.0;
};
Constants constants();

// Delta_v = k x where x + log x = 1 - v/k; the unique positive root, by
// safeguarded Newton with residual < 1e-12.  Strictly decreasing in v, with
// Delta_0 = k and Delta_{2k} = k * 0.2784645...  Requires k >= 4, v >= 0.
// The closed form is derived for even integer v; other arguments are
// computed on the same curve (callers that care should round up to even).
double solve_delta_formula(int k, double v);

// tau(k) = max over even moment orders s of (k - 2 Delta_s) / s^2.
struct TauEstimate {
    int k = 0;
    double tau = 0.0;
    int argmax_even_order = 0;
    ExponentSource source = ExponentSource::formula;
};

// Formula mode scans even s with solve_delta_formula; since Delta_s >= 0
// each term is at most k/s^2, so the scan halts once k/s^2 drops below the
// best value found.  Table mode maximizes over the table's rows for k
// (DataError when none exist).  Requires k >= 4.
TauEstimate tau(int k, ExponentSource source,
                const ExponentTable* table = nullptr);

// Minor-arc exponent Delta_s* = min over integer t, 0 <= t <= s-2, of
// Delta_{s-t} - t * tau_val.  Delta_{s-t} is taken from the table when an
// exact (k, s-t) row exists, otherwise from solve_delta_formula at the
// nearest even order >= s-t (a conservative fill, since Delta is
// decreasing).  `candidates` lists every (t, value) pair scanned.
struct DeltaStarResult {
    double value = 0.0;
    int t = 0;
    std::vector<std::pair<int, double>> candidates;
};
DeltaStarResult delta_star(int k, int s, double tau_val,
                           const ExponentTable* table = nullptr);

// kappa(xi) = (1 - xi - log xi + 2/k)^2 / (1 - 2 xi) on 0 < xi < 1/2.
double kappa(double xi, std::int64_t k);

// The large-k limit of kappa (the 2/k term dropped).
double kappa_limit(double xi);

// Interior minimum of kappa: Newton root of the stationarity equation
// xi - 1/xi + 2 + 2/k = log xi in (0, 1/2), residual < 1e-12.
// As k grows, xi_star -> 1/omega and kappa_min -> omega^2 - 3 - 2/omega.
struct KappaMinimum {
    double xi_star = 0.0;
    double kappa_min = 0.0;
};
KappaMinimum minimize_kappa(std::int64_t k);

} // namespace waring
