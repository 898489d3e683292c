#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

// Half-open interval [lo, hi) with exact rational endpoints.
struct RationalInterval {
    Rational lo;
    Rational hi;
};

// A finite union of disjoint, sorted, non-adjacent half-open intervals.
// All set operations and the measure are exact.
class IntervalUnion {
public:
    IntervalUnion() = default;

    // Normalises: drops empty intervals, sorts, merges overlaps/adjacency.
    static IntervalUnion from_parts(std::vector<RationalInterval> parts);

    const std::vector<RationalInterval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    Rational measure() const;

    // Half-open membership: some [lo, hi) with lo <= x < hi.
    bool contains(const Rational& x) const;

    IntervalUnion unite(const IntervalUnion& other) const;
    IntervalUnion intersect(const IntervalUnion& other) const;
    IntervalUnion subtract(const IntervalUnion& other) const;

    // [0,1) \ this; requires this to be contained in [0,1).
    IntervalUnion complement_in_unit() const;

    // CSV with header "num_lo,den_lo,num_hi,den_hi", one row per interval.
    std::string to_csv() const;
    static IntervalUnion from_csv(std::istream& in);

private:
    std::vector<RationalInterval> parts_;
};

// Major arcs M(Q,P) for exponent k: the union over q <= Q, 0 <= a <= q,
// gcd(a,q) = 1 of { alpha in [0,1) : |q*alpha - a| <= Q * P^-k }, stored as
// half-open subintervals of [0,1).  The two half-arcs at 0 and 1 are the
// wrap-around of the single arc centred at the integers.  Empty when Q < 1.
IntervalUnion major_arcs(const Rational& Q, std::int64_t P, int k);

// Same, with the height entering only through X = P^k passed as an exact
// rational; used for rescaled systems whose height P/w is not an integer.
IntervalUnion major_arcs_height(const Rational& Q, const Rational& P_to_k);

// The single-denominator system M_q(Q,P~): arcs at a/q only, 0 <= a <= q,
// gcd(a,q) = 1, half-width (Q / P_to_k) / q.  Empty when q > Q.
IntervalUnion major_arcs_for_q(std::int64_t q, const Rational& Q,
                               const Rational& P_to_k);

// Minor arcs m(Q,P) = [0,1) \ M(Q,P).
IntervalUnion minor_arcs(const Rational& Q, std::int64_t P, int k);

// Dyadic shell N(Q,P) = M(Q,P) \ M(Q/2,P).
IntervalUnion dyadic_shell(const Rational& Q, std::int64_t P, int k);

// Largest L with 4^L <= P^k, i.e. floor(k * log P / (2 log 2)), computed in
// exact integer arithmetic.
int dyadic_levels(std::int64_t P, int k);

// Membership witness for alpha in M(Q,P): the minimal q <= Q admitting some
// coprime a in [0, q] with |q*alpha - a| <= Q * P^-k (closed inequality, so
// boundary points count as inside).  height = P^k * |q*alpha - a|, the
// position of alpha within its arc (<= Q exactly when inside).
struct ArcLabel {
    std::int64_t q = 0;
    BigInt a = 0;
    Rational height;
};

struct ArcClassification {
    bool inside = false;
    ArcLabel label;
};

ArcClassification classify(const Rational& alpha, const Rational& Q,
                           std::int64_t P, int k);

// Upsilon(alpha) = (q + P^k |q*alpha - a|)^-1 when alpha lies in the arc at
// a/q of the disjoint system M(P^(k/2)/2, P) (membership decided by the
// exact comparisons 4 q^2 <= P^k and 4 P^k (q*alpha - a)^2 <= 1), else 0.
Rational upsilon(const Rational& alpha, std::int64_t P, int k);

// Assignment of samples to dyadic shells N(2^-j Q0, P), j = 0, 1, ...
// For each sample the unique shell index j with
//   alpha in M(2^-j Q0, P) and alpha not in M(2^-(j+1) Q0, P)
// is located by exact classification; the scan stops once the halved system
// is empty, so every alpha in M(Q0,P) is assigned.  With the default
// Q0 = ceil(P^(k/2)) the system covers all of [0,1); for odd k the deepest
// shell may sit one level below L = dyadic_levels(P,k).
struct ShellAssignment {
    Rational alpha;
    bool covered = false;
    int j = -1;
    ArcLabel label;
};

struct ShellCoverReport {
    std::int64_t P = 0;
    int k = 0;
    Rational Q0;
    int levels = 0;    // L = dyadic_levels(P, k)
    int max_j = -1;    // deepest shell index any sample needed
    bool all_covered = false;
    std::vector<ShellAssignment> samples;
};

ShellCoverReport shell_cover_check(std::int64_t P, int k,
                                   const std::vector<Rational>& samples,
                                   std::optional<Rational> Q0 = std::nullopt);

// Rescaling identity for a 1-periodic trigonometric polynomial
// F(beta) = sum_h c_h e(h beta):
//
//   integral over M_q(Q,P) of F(alpha w^k) d_alpha
//     = w^-k * integral over M_q(Q, P/w) of F(beta) d_beta
//
// under gcd(q,w) = 1, q <= Q, Q <= (P/w)^(k/2) / 2.  Both sides are
// evaluated in closed form (exact endpoints, per-frequency antiderivative).
struct Lemma23Check {
    Complex lhs;
    Complex rhs;
    double residual = 0.0;
    bool ok = false; // residual < 1e-12 * scale
};

Lemma23Check verify_lemma23(const std::map<long long, Complex>& coefficients,
                            std::int64_t q, std::int64_t w, const Rational& Q,
                            std::int64_t P, int k);

// Constant-F specialisation of the same identity, asserted exactly:
// measure(M_q(Q,P)) == w^-k * measure(M_q(Q,P/w)) as rationals.
bool verify_lemma23_constant_exact(std::int64_t q, std::int64_t w,
                                   const Rational& Q, std::int64_t P, int k);

// Closed-form integral of e(h * alpha) over an interval union.
Complex integrate_unit_phase(long long h, const IntervalUnion& region);

} // namespace waring
