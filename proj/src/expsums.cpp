#include "waring/expsums.hpp"

#include <cmath>
#include <numeric>

namespace waring {

namespace {

// e(alpha * n^k) with the phase reduced mod 1 exactly.
Complex phase_term(const Rational& alpha, std::int64_t n, int k) {
    return unit_phase(alpha * Rational(pow_big(BigInt(n), static_cast<unsigned>(k))));
}

} // namespace

Complex weyl_sum(const Rational& alpha, const SmoothContext& ctx) {
    validate(ctx);
    Complex sum = 0.0;
    for (std::int64_t x : enumerate_smooth(ctx.P, ctx.R))
        sum += phase_term(alpha, x, ctx.k);
    return sum;
}

Complex f_star(const Rational& alpha, const SmoothContext& ctx, std::int64_t M,
               std::int64_t q) {
    validate(ctx);
    if (M < 0) throw UsageError("f_star: M must be >= 0");
    if (q < 1) throw UsageError("f_star: q must be >= 1");
    Complex sum = 0.0;
    for (std::int64_t v : enumerate_smooth(ctx.P, ctx.R)) {
        if (v <= M || std::gcd(v, q) != 1) continue;
        for (std::int64_t u : enumerate_kernel_divisors(ctx.P / v, ctx.R, q))
            sum += phase_term(alpha, u * v, ctx.k);
    }
    return sum;
}

Complex f_dagger(const Rational& alpha, const SmoothContext& ctx, std::int64_t M,
                 std::int64_t q) {
    validate(ctx);
    if (M < 0) throw UsageError("f_dagger: M must be >= 0");
    if (q < 1) throw UsageError("f_dagger: q must be >= 1");
    Complex sum = 0.0;
    for (std::int64_t v : enumerate_smooth(std::min(M, ctx.P), ctx.R)) {
        if (std::gcd(v, q) != 1) continue;
        for (std::int64_t u : enumerate_kernel_divisors(ctx.P / v, ctx.R, q))
            sum += phase_term(alpha, u * v, ctx.k);
    }
    return sum;
}

Complex g_star(const Rational& alpha, const SmoothContext& ctx, std::int64_t m,
               std::int64_t q, std::int64_t pi) {
    validate(ctx);
    if (m < 1) throw UsageError("g_star: m must be >= 1");
    if (q < 1) throw UsageError("g_star: q must be >= 1");
    if (pi < 2) throw UsageError("g_star: pi must be >= 2");
    Complex sum = 0.0;
    for (std::int64_t w : enumerate_smooth(ctx.P / m, pi)) {
        if (std::gcd(w, q) != 1) continue;
        for (std::int64_t u : enumerate_kernel_divisors(ctx.P / (m * w), ctx.R, q))
            sum += phase_term(alpha, w * u, ctx.k);
    }
    return sum;
}

namespace {

IdentityCheck make_check(Complex lhs, Complex rhs, const SmoothContext& ctx) {
    IdentityCheck chk;
    chk.lhs = lhs;
    chk.rhs = rhs;
    chk.residual = std::abs(lhs - rhs);
    chk.tolerance = 1e-9 * static_cast<double>(enumerate_smooth(ctx.P, ctx.R).size());
    chk.ok = chk.residual < chk.tolerance;
    return chk;
}

} // namespace

IdentityCheck verify_lemma31(const Rational& alpha, const SmoothContext& ctx,
                             std::int64_t M, std::int64_t q) {
    Complex lhs = weyl_sum(alpha, ctx);
    Complex rhs = f_star(alpha, ctx, M, q) + f_dagger(alpha, ctx, M, q);
    return make_check(lhs, rhs, ctx);
}

IdentityCheck verify_lemma33(const Rational& alpha, const SmoothContext& ctx,
                             std::int64_t M, std::int64_t q) {
    if (M < ctx.R)
        throw UsageError("verify_lemma33: requires M >= R (unique block factorisation)");
    Complex lhs = f_star(alpha, ctx, M, q);
    Complex rhs = 0.0;
    for (std::int64_t pi : primes_up_to(ctx.R)) {
        for (std::int64_t m : enumerate_vaughan_block(M, pi, ctx.R)) {
            if (std::gcd(m, q) != 1) continue;
            Rational scaled = alpha * Rational(pow_big(BigInt(m), static_cast<unsigned>(ctx.k)));
            rhs += g_star(scaled, ctx, m, q, pi);
        }
    }
    return make_check(lhs, rhs, ctx);
}

IdentityCheck verify_lemma41(const Rational& alpha, const SmoothContext& ctx,
                             std::int64_t m, std::int64_t q, std::int64_t pi) {
    Complex lhs = g_star(alpha, ctx, m, q, pi);
    Complex rhs = 0.0;
    for (std::int64_t z : enumerate_kernel_divisors_above(ctx.P / m, ctx.R, q, pi))
        for (std::int64_t x : enumerate_smooth(ctx.P / (m * z), pi))
            rhs += phase_term(alpha, x * z, ctx.k);
    return make_check(lhs, rhs, ctx);
}

} // namespace waring
