#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "waring/arcs.hpp"
#include "waring/budget.hpp"
#include "waring/rational.hpp"
#include "waring/smooth.hpp"

namespace waring {

// Independent evaluations of the mean values U_s(P,R) = integral over [0,1)
// of |f(alpha; P, R)|^s and their restrictions to arc regions.  Three
// methods, coarsest to sharpest error model:
//   exact-even-count : U_{2t} counted as solutions of
//                      x_1^k+...+x_t^k = y_1^k+...+y_t^k over A(P,R)
//   fourier-exact    : |f|^{2t} expanded as a finite Fourier series and
//                      integrated per-frequency in closed form over exact
//                      rational intervals
//   quadrature       : adaptive bisection (Simpson panels, Richardson
//                      error estimate) for arbitrary real s >= 0
struct MomentResult {
    double value = 0.0;
    std::string method;
    double error_estimate = 0.0;
};

// U_{2t}(P,R) by exact solution counting (value is an integer).
MomentResult moment_complete_even(int t, const SmoothContext& ctx,
                                  OpBudget* budget = nullptr);

// integral over `region` of |f|^{2t}, evaluated exactly per frequency.
MomentResult moment_restricted_even(int t, const SmoothContext& ctx,
                                    const IntervalUnion& region,
                                    OpBudget* budget = nullptr);

// integral over `region` of |f|^s for any real s >= 0 by adaptive panels.
// error_estimate is the accumulated Richardson estimate; panels narrower
// than 1e-12 are accepted as-is (non-convergence shows up in the estimate).
MomentResult moment_quadrature(double s, const SmoothContext& ctx,
                               const IntervalUnion& region, double rtol,
                               OpBudget* budget = nullptr);

// The Fourier coefficients c_h of |f(alpha)|^{2t} = sum_h c_h e(h alpha)
// (finite: |h| <= t (P^k - 1)); c_h counts weighted solutions of
// sum x_i^k - sum y_i^k = h.
std::map<std::int64_t, double> even_power_fourier(int t, const SmoothContext& ctx,
                                                  OpBudget* budget = nullptr);

// R_{s,k}(n): ordered representations n = x_1^k + ... + x_s^k, x_i >= 1.
std::int64_t count_representations(std::int64_t n, int s, int k,
                                   OpBudget* budget = nullptr);

// Same with every x_i restricted to the smooth set A(P,R).
std::int64_t count_smooth_representations(std::int64_t n, int s,
                                          const SmoothContext& ctx,
                                          OpBudget* budget = nullptr);

// Complete Gauss sum S(q,a) = sum_{r=1..q} e(a r^k / q); the angle a r^k is
// reduced mod q in integer arithmetic before trig evaluation.
Complex gauss_sum(std::int64_t q, std::int64_t a, int k);

// One term A_q(n) = q^-s * sum_{a <= q, (a,q)=1} S(q,a)^s e(-n a / q) of the
// singular series.  Real up to rounding (the a and q-a terms pair up).
Complex singular_series_term(std::int64_t q, std::int64_t n, int s, int k);

// Truncated singular series  sum_{q <= X} A_q(n).  Throws if the imaginary
// part fails to vanish to 1e-9.
double singular_series_truncated(std::int64_t n, int s, int k, std::int64_t X);

// v(beta) = (1/k) * sum_{m <= n} m^(1/k - 1) e(beta m).
Complex v_weight(const Rational& beta, std::int64_t n, int k);

// Solubility of x_1^k + ... + x_s^k = n (mod q) with gcd(x_1, q) = 1,
// decided by dynamic programming over residues.
bool local_congruence_check(std::int64_t n, std::int64_t q, int s, int k);

// One row of the arc-mass scaling report: the restricted moment over
// M(Q,P), the trivial bound predictor measure(M(Q,P)) * |A(P,R)|^{2t},
// and their ratio.
struct ScalingRow {
    Rational Q;
    double moment = 0.0;
    double predictor = 0.0;
    double ratio = 0.0;
};

std::vector<ScalingRow> scaling_rows(int t, const SmoothContext& ctx,
                                     const std::vector<Rational>& Q_grid,
                                     OpBudget* budget = nullptr);

// CSV with header "Q,moment,predictor,ratio"; one section per P in P_list
// (sections separated by a "# P=<value>" comment line), byte-deterministic.
std::string scaling_report_csv(int k, int s, const std::vector<std::int64_t>& P_list,
                               std::int64_t R,
                               const std::vector<Rational>& Q_grid);

} // namespace waring
