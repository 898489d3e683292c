#pragma once

#include <complex>
#include <cstdint>

#include "waring/rational.hpp"
#include "waring/smooth.hpp"

namespace waring {

// Smooth Weyl sum  f(alpha; P, R) = sum_{x in A(P,R)} e(alpha x^k)  with
// e(z) = exp(2*pi*i*z).  alpha is an exact rational; each phase alpha * x^k
// is reduced mod 1 in exact arithmetic before the trig evaluation, so the
// rounding error stays at the level of |A(P,R)| * machine epsilon.
Complex weyl_sum(const Rational& alpha, const SmoothContext& ctx);

// Kernel-split partial sums.  Every x in A(P,R) factors uniquely as x = u*v
// with u | q^inf and gcd(v,q) = 1; splitting on whether v > M gives
//
//   f_star(alpha; P, M, R, q)   = sum_{v in A(P,R), v > M, (v,q)=1}
//                                   sum_{u in C_q(P/v, R)} e(alpha (u v)^k)
//   f_dagger(alpha; P, M, R, q) = sum_{v in A(M,R), (v,q)=1}
//                                   sum_{u in C_q(P/v, R)} e(alpha (u v)^k)
//
// and f = f_star + f_dagger for every M >= 0, q >= 1.
Complex f_star(const Rational& alpha, const SmoothContext& ctx, std::int64_t M,
               std::int64_t q);
Complex f_dagger(const Rational& alpha, const SmoothContext& ctx, std::int64_t M,
                 std::int64_t q);

// Inner block sum
//   g_star(alpha; P, m, R, q, pi) = sum_{w in A(P/m, pi), (w,q)=1}
//                                     sum_{u in C_q(P/(m w), R)} e(alpha (w u)^k)
Complex g_star(const Rational& alpha, const SmoothContext& ctx, std::int64_t m,
               std::int64_t q, std::int64_t pi);

struct IdentityCheck {
    Complex lhs;
    Complex rhs;
    double residual = 0.0;  // |lhs - rhs|
    double tolerance = 0.0; // 1e-9 * |A(P,R)|
    bool ok = false;        // residual < tolerance
};

// f(alpha) = f_star + f_dagger (kernel split of the Weyl sum).
IdentityCheck verify_lemma31(const Rational& alpha, const SmoothContext& ctx,
                             std::int64_t M, std::int64_t q);

// For M >= R, f_star(alpha; P, M, R) =
//   sum_{pi <= R prime} sum_{m in B(M,pi,R), (m,q)=1}
//     g_star(alpha m^k; P, m, R, q, pi)
// via the unique factorisation v = m * w of each v > M.  Throws UsageError
// when M < R (the factorisation is no longer unique below that threshold).
IdentityCheck verify_lemma33(const Rational& alpha, const SmoothContext& ctx,
                             std::int64_t M, std::int64_t q);

// g_star(alpha; P, m, R, q, pi) =
//   sum_{z in C_{q,pi}(P/m, R)} sum_{x in A(P/(m z), pi)} e(alpha (x z)^k)
// via the kernel split x = w * u1 of the pi-smooth factor.
IdentityCheck verify_lemma41(const Rational& alpha, const SmoothContext& ctx,
                             std::int64_t m, std::int64_t q, std::int64_t pi);

} // namespace waring
