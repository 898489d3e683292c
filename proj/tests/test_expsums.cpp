// Smooth Weyl sums and their kernel/block decompositions.  The sums are
// checked against an independent modular-arithmetic evaluation, the
// decomposition identities against exact counting oracles at alpha = 0 and
// against each other on random rational frequencies.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "waring/errors.hpp"
#include "waring/expsums.hpp"
#include "waring/rational.hpp"
#include "waring/smooth.hpp"

using namespace waring;

namespace {

Rational random_alpha(std::mt19937_64& rng, std::int64_t max_den) {
    std::uniform_int_distribution<std::int64_t> den_dist(2, max_den);
    const std::int64_t den = den_dist(rng);
    std::uniform_int_distribution<std::int64_t> num_dist(0, den - 1);
    return Rational(num_dist(rng), den);
}

// Independent Weyl-sum evaluation: for alpha = n/d the phase of x^k is
// (n * (x^k mod d) mod d) / d, computed in integer arithmetic.
Complex brute_weyl(const Rational& alpha, const SmoothContext& ctx) {
    const BigInt n = numerator(alpha), d = denominator(alpha);
    Complex total(0, 0);
    for (std::int64_t x : enumerate_smooth(ctx.P, ctx.R)) {
        BigInt t = ((n % d) * (pow_big(BigInt(x), unsigned(ctx.k)) % d)) % d;
        if (t < 0) t += d;
        const double phase = 2 * M_PI * (t.convert_to<double>() /
                                         d.convert_to<double>());
        total += Complex(std::cos(phase), std::sin(phase));
    }
    return total;
}

} // namespace

TEST_CASE("Weyl sum against the modular-arithmetic oracle") {
    std::mt19937_64 rng(555111);
    for (int k : {2, 3}) {
        for (auto [P, R] : {std::pair<std::int64_t, std::int64_t>{20, 3},
                            {40, 5}, {60, 7}}) {
            const SmoothContext ctx{k, P, R};
            const double card = double(enumerate_smooth(P, R).size());
            for (int trial = 0; trial < 30; ++trial) {
                const Rational alpha = random_alpha(rng, 1000000);
                CHECK(std::abs(weyl_sum(alpha, ctx) - brute_weyl(alpha, ctx)) <
                      1e-9 * card);
            }
        }
    }
}

TEST_CASE("Weyl sum at integers and conjugate symmetry") {
    const SmoothContext ctx{2, 50, 5};
    const double card = double(enumerate_smooth(50, 5).size());
    for (const Rational& z : {Rational(0), Rational(1), Rational(3)}) {
        const Complex f = weyl_sum(z, ctx);
        CHECK(std::abs(f - Complex(card, 0)) < 1e-12 * card);
    }
    std::mt19937_64 rng(8080);
    for (int trial = 0; trial < 25; ++trial) {
        const Rational alpha = random_alpha(rng, 100000);
        const Complex f = weyl_sum(alpha, ctx);
        const Complex g = weyl_sum(1 - alpha, ctx);
        CHECK(std::abs(g - std::conj(f)) < 1e-12 * card);
    }
}

TEST_CASE("kernel split partition: identity, extremes, exact counts") {
    std::mt19937_64 rng(909090);
    for (int k : {2, 3}) {
        for (auto [P, R] : {std::pair<std::int64_t, std::int64_t>{30, 5},
                            {50, 7}}) {
            const SmoothContext ctx{k, P, R};
            const auto smooth = enumerate_smooth(P, R);
            const double card = double(smooth.size());
            for (std::int64_t q : {1, 4, 6, 15}) {
                for (std::int64_t M : {std::int64_t(0), std::int64_t(3),
                                       std::int64_t(10), P}) {
                    const auto chk = verify_lemma31(random_alpha(rng, 100000),
                                                    ctx, M, q);
                    CHECK(chk.ok);
                    CHECK(chk.residual == doctest::Approx(std::abs(chk.lhs - chk.rhs)));
                    CHECK(chk.tolerance == doctest::Approx(1e-9 * card));

                    // alpha = 0 turns both halves into exact cardinalities,
                    // countable independently through the kernel split.
                    std::int64_t big_cofactor = 0;
                    for (std::int64_t x : smooth)
                        if (kernel_split(x, q).cofactor > M) ++big_cofactor;
                    const Complex fs = f_star(Rational(0), ctx, M, q);
                    const Complex fd = f_dagger(Rational(0), ctx, M, q);
                    CHECK(std::abs(fs - Complex(double(big_cofactor), 0)) <
                          1e-9 * card);
                    CHECK(std::abs(fd - Complex(card - double(big_cofactor), 0)) <
                          1e-9 * card);
                }
                // M = 0 leaves everything in the star half; M = P empties it.
                CHECK(std::abs(f_dagger(Rational(1, 7), ctx, 0, q)) < 1e-12);
                CHECK(std::abs(f_star(Rational(1, 7), ctx, P, q)) < 1e-12);
            }
        }
    }
}

TEST_CASE("block decomposition of the star sum") {
    std::mt19937_64 rng(171717);
    for (int k : {2, 3}) {
        for (auto [P, R] : {std::pair<std::int64_t, std::int64_t>{30, 5},
                            {50, 7}}) {
            const SmoothContext ctx{k, P, R};
            for (std::int64_t q : {1, 7, 9}) {
                for (std::int64_t M : {R, std::int64_t(9), std::int64_t(12)}) {
                    for (int trial = 0; trial < 20; ++trial) {
                        const auto chk = verify_lemma33(
                            random_alpha(rng, 100000), ctx, M, q);
                        CHECK(chk.ok);
                    }
                }
            }
        }
    }
    // below the threshold the block factorisation is not unique
    const SmoothContext ctx{2, 30, 5};
    CHECK_THROWS_AS(verify_lemma33(Rational(1, 3), ctx, 3, 1), UsageError);
}

TEST_CASE("inner block sum: counting oracle and its own split") {
    const SmoothContext ctx{2, 50, 7};
    for (std::int64_t m : {1, 2, 3, 5}) {
        for (std::int64_t pi : {2, 3, 5, 7}) {
            for (std::int64_t q : {1, 6, 10}) {
                // g_star at 0 counts pairs (w, u) with w in A(P/m, pi)
                // coprime to q and u a kernel divisor of height P/(m w).
                std::int64_t count = 0;
                for (std::int64_t w : enumerate_smooth(ctx.P / m, pi)) {
                    if (std::gcd(w, q) != 1) continue;
                    count += std::int64_t(
                        enumerate_kernel_divisors(ctx.P / (m * w), ctx.R, q)
                            .size());
                }
                const Complex g = g_star(Rational(0), ctx, m, q, pi);
                CHECK(std::abs(g - Complex(double(count), 0)) < 1e-9 *
                      std::max(1.0, double(count)));
            }
        }
    }

    std::mt19937_64 rng(232323);
    for (std::int64_t m : {1, 2, 3, 5}) {
        for (std::int64_t pi : {2, 3, 5}) {
            for (std::int64_t q : {1, 6, 10}) {
                for (int trial = 0; trial < 15; ++trial) {
                    const auto chk = verify_lemma41(random_alpha(rng, 100000),
                                                    ctx, m, q, pi);
                    CHECK(chk.ok);
                }
            }
        }
    }
}
