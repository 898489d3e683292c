// Mean-value oracles, representation counters, Gauss sums, the singular
// series, and local solubility — each checked against direct enumeration
// on instances small enough to brute-force, plus the classical algebraic
// identities (twisted multiplicativity, the prime-power mass identity).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "waring/arcs.hpp"
#include "waring/budget.hpp"
#include "waring/errors.hpp"
#include "waring/oracles.hpp"
#include "waring/rational.hpp"
#include "waring/smooth.hpp"

using namespace waring;

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// U_{2t} by enumerating all 2t-tuples over the smooth set.
std::int64_t brute_even_moment(int t, const SmoothContext& ctx) {
    const auto a = enumerate_smooth(ctx.P, ctx.R);
    std::vector<std::int64_t> kth;
    for (std::int64_t x : a) kth.push_back(ipow(x, ctx.k));

    std::vector<std::int64_t> sums{0};
    for (int i = 0; i < t; ++i) {
        std::vector<std::int64_t> next;
        for (std::int64_t s : sums)
            for (std::int64_t p : kth) next.push_back(s + p);
        sums = std::move(next);
    }
    std::map<std::int64_t, std::int64_t> freq;
    for (std::int64_t s : sums) ++freq[s];
    std::int64_t total = 0;
    for (const auto& [value, count] : freq) total += count * count;
    return total;
}

std::int64_t brute_representations(std::int64_t n, int s, int k) {
    if (s == 0) return n == 0 ? 1 : 0;
    std::int64_t total = 0;
    for (std::int64_t x = 1; ipow(x, k) <= n; ++x)
        total += brute_representations(n - ipow(x, k), s - 1, k);
    return total;
}

} // namespace

TEST_CASE("even moments match full tuple enumeration") {
    for (auto [k, P, R, t] :
         {std::tuple{2, 6, 3, 2}, {2, 8, 5, 2}, {3, 5, 5, 2}, {2, 12, 7, 1},
          {3, 10, 3, 2}}) {
        const SmoothContext ctx{k, std::int64_t(P), std::int64_t(R)};
        const auto got = moment_complete_even(t, ctx);
        CHECK(got.method == "exact-even-count");
        CHECK(got.error_estimate == 0.0);
        CHECK(got.value == doctest::Approx(double(brute_even_moment(t, ctx))));
    }
    // t = 1 diagonal: x^k = y^k forces x = y, so U_2 = |A(P,R)|.
    for (std::int64_t P : {5, 17, 40}) {
        const SmoothContext ctx{3, P, 5};
        CHECK(moment_complete_even(1, ctx).value ==
              doctest::Approx(double(enumerate_smooth(P, 5).size())));
    }
    // Hand count: A(4,4) = {1,2,3,4}, squares {1,4,9,16}; the 28 solutions
    // of a+b = c+d are the 16 with {a,b} = {c,d} as ordered pairs plus the
    // 12 orderings of the coincidence 1+16 = 9+4... which doesn't occur;
    // in fact 28 = sum over the 10 distinct pair-sums of multiplicity^2.
    CHECK(moment_complete_even(2, SmoothContext{2, 4, 4}).value ==
          doctest::Approx(28.0));
}

TEST_CASE("Fourier coefficients of |f|^(2t)") {
    const SmoothContext tiny{2, 3, 3}; // A = {1,2,3}, squares 1, 4, 9
    const auto c = even_power_fourier(1, tiny);
    std::map<std::int64_t, double> expect = {{0, 3},  {3, 1},  {-3, 1},
                                             {5, 1},  {-5, 1}, {8, 1},
                                             {-8, 1}};
    CHECK(c.size() == expect.size());
    for (const auto& [h, v] : expect) {
        REQUIRE(c.count(h) == 1);
        CHECK(c.at(h) == doctest::Approx(v));
    }

    for (auto [k, P, R, t] : {std::tuple{2, 8, 5, 2}, {3, 6, 3, 2}}) {
        const SmoothContext ctx{k, std::int64_t(P), std::int64_t(R)};
        const auto coeffs = even_power_fourier(t, ctx);
        const double card = double(enumerate_smooth(P, R).size());
        double sum = 0.0;
        for (const auto& [h, v] : coeffs) {
            CHECK(v >= 0.0);
            REQUIRE(coeffs.count(-h) == 1);
            CHECK(coeffs.at(-h) == doctest::Approx(v)); // |f|^2t is real
            sum += v;
        }
        // c_0 is the complete moment; the coefficient sum is |f(0)|^(2t).
        CHECK(coeffs.at(0) ==
              doctest::Approx(moment_complete_even(t, ctx).value));
        CHECK(sum == doctest::Approx(std::pow(card, 2 * t)));
    }
}

TEST_CASE("restricted moments: full circle, additivity, quadrature") {
    const SmoothContext ctx{2, 8, 5};
    const auto full = IntervalUnion::from_parts({{Rational(0), Rational(1)}});
    const auto left = IntervalUnion::from_parts({{Rational(0), Rational(1, 2)}});
    const auto right = IntervalUnion::from_parts({{Rational(1, 2), Rational(1)}});
    const double complete = moment_complete_even(2, ctx).value;

    const auto f_full = moment_restricted_even(2, ctx, full);
    CHECK(f_full.method == "fourier-exact");
    CHECK(f_full.value == doctest::Approx(complete).epsilon(1e-9));
    CHECK(moment_restricted_even(2, ctx, left).value +
              moment_restricted_even(2, ctx, right).value ==
          doctest::Approx(complete).epsilon(1e-9));

    // adaptive quadrature against the closed form on assorted regions
    const std::vector<IntervalUnion> regions = {
        IntervalUnion::from_parts({{Rational(1, 7), Rational(1, 3)}}),
        major_arcs(Rational(2), 8, 2),
        minor_arcs(Rational(2), 8, 2),
    };
    for (const auto& region : regions) {
        const double exact = moment_restricted_even(2, ctx, region).value;
        const auto qd = moment_quadrature(4.0, ctx, region, 1e-10);
        CHECK(qd.method == "quadrature");
        CHECK(std::abs(qd.value - exact) <=
              1e-8 * std::max(1.0, exact) + qd.error_estimate);
    }

    // s = 0 integrates the constant 1: the measure of the region.
    const auto zeroth = moment_quadrature(0.0, ctx, regions[0], 1e-10);
    CHECK(zeroth.value == doctest::Approx(to_double(regions[0].measure())));

    // an odd power is also fine for the quadrature path
    const auto third = moment_quadrature(3.0, ctx, regions[0], 1e-8);
    CHECK(third.value > 0.0);
    CHECK(std::isfinite(third.value));
}

TEST_CASE("representation counts against recursion") {
    for (int k : {2, 3}) {
        for (int s : {1, 2, 3}) {
            for (std::int64_t n : {0, 1, 2, 9, 29, 33, 50, 60}) {
                CHECK(count_representations(n, s, k) ==
                      brute_representations(n, s, k));
            }
        }
    }
    CHECK(count_representations(29, 2, 2) == 2);  // 25+4, 4+25
    CHECK(count_representations(50, 2, 2) == 3);  // 1+49, 25+25, 49+1
    CHECK(count_representations(0, 1, 2) == 0);
    CHECK(count_representations(1, 1, 5) == 1);

    // smooth restriction: with R >= P the restriction is vacuous
    for (std::int64_t n : {10, 25, 50}) {
        CHECK(count_smooth_representations(n, 2, SmoothContext{2, n, n}) ==
              count_representations(n, 2, 2));
    }
    CHECK(count_smooth_representations(25, 1, SmoothContext{2, 25, 5}) == 1);
    CHECK(count_smooth_representations(25, 1, SmoothContext{2, 25, 3}) == 0);
}

TEST_CASE("Gauss sums: frozen values and twisted multiplicativity") {
    const Complex s41 = gauss_sum(4, 1, 2);
    CHECK(std::abs(s41 - Complex(2, 2)) < 1e-12);
    CHECK(std::abs(gauss_sum(2, 1, 2)) < 1e-12);
    CHECK(std::abs(gauss_sum(3, 1, 3)) < 1e-12);
    CHECK(std::abs(gauss_sum(1, 7, 2) - Complex(1, 0)) < 1e-12);
    // a = 0 (mod q): every phase is 1
    CHECK(std::abs(gauss_sum(6, 6, 2) - Complex(6, 0)) < 1e-12);

    // S(q1 q2, a) = S(q1, a q2^{k-1}) S(q2, a q1^{k-1}) for coprime moduli
    std::mt19937_64 rng(31415);
    std::uniform_int_distribution<std::int64_t> pick(1, 20);
    int tested = 0;
    while (tested < 60) {
        const std::int64_t q1 = pick(rng), q2 = pick(rng);
        if (std::gcd(q1, q2) != 1) continue;
        std::uniform_int_distribution<std::int64_t> adist(1, q1 * q2);
        const std::int64_t a = adist(rng);
        for (int k : {2, 3, 4}) {
            const Complex lhs = gauss_sum(q1 * q2, a, k);
            const Complex rhs = gauss_sum(q1, a % q1 * ipow(q2 % q1, k - 1), k) *
                                gauss_sum(q2, a % q2 * ipow(q1 % q2, k - 1), k);
            CHECK(std::abs(lhs - rhs) < 1e-9 * double(q1 * q2));
        }
        ++tested;
    }
}

TEST_CASE("prime-power mass identity for the singular series") {
    // sum_{l <= L} A_{p^l}(n) = p^{-L(s-1)} * #solutions mod p^L
    for (std::int64_t p : {2, 3, 5}) {
        for (int L : {1, 2, 3}) {
            for (int k : {2, 3}) {
                for (int s : {2, 3, 4}) {
                    for (std::int64_t n : {1, 5, 7}) {
                        const std::int64_t q = ipow(p, L);
                        std::vector<std::int64_t> counts(q, 0);
                        for (std::int64_t x = 0; x < q; ++x) {
                            std::int64_t xk = 1;
                            for (int i = 0; i < k; ++i) xk = xk * x % q;
                            ++counts[xk];
                        }
                        std::vector<double> ways(q, 0.0);
                        ways[0] = 1.0;
                        for (int i = 0; i < s; ++i) {
                            std::vector<double> next(q, 0.0);
                            for (std::int64_t r = 0; r < q; ++r)
                                for (std::int64_t v = 0; v < q; ++v)
                                    next[(r + v) % q] +=
                                        ways[r] * double(counts[v]);
                            ways = std::move(next);
                        }
                        const double lhs =
                            ways[n % q] / std::pow(double(q), s - 1);
                        double rhs = 0.0;
                        for (int l = 0; l <= L; ++l)
                            rhs += singular_series_term(ipow(p, l), n, s, k)
                                       .real();
                        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
                    }
                }
            }
        }
    }
}

TEST_CASE("singular series truncation and first term") {
    CHECK(std::abs(singular_series_term(1, 11, 4, 2) - Complex(1, 0)) < 1e-12);
    // imaginary parts cancel a against q - a
    for (std::int64_t q : {3, 4, 5, 8, 9}) {
        CHECK(std::abs(singular_series_term(q, 5, 4, 2).imag()) < 1e-12);
    }
    const double s = singular_series_truncated(5, 4, 2, 30);
    CHECK(s > 0.0);
    double direct = 0.0;
    for (std::int64_t q = 1; q <= 30; ++q)
        direct += singular_series_term(q, 5, 4, 2).real();
    CHECK(s == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("smoothed generating weight") {
    const std::int64_t n = 200;
    for (int k : {2, 3}) {
        double peak = 0.0;
        for (std::int64_t m = 1; m <= n; ++m)
            peak += std::pow(double(m), 1.0 / k - 1.0);
        peak /= k;
        const Complex at0 = v_weight(Rational(0), n, k);
        CHECK(at0.real() == doctest::Approx(peak).epsilon(1e-12));
        CHECK(std::abs(at0.imag()) < 1e-12);
        for (const Rational& beta : {Rational(1, 3), Rational(5, 7)}) {
            const Complex v = v_weight(beta, n, k);
            CHECK(std::abs(v) <= peak * (1 + 1e-12));
            CHECK(std::abs(v_weight(-beta, n, k) - std::conj(v)) < 1e-12 * peak);
        }
    }
}

TEST_CASE("local solubility against tuple enumeration") {
    for (std::int64_t q = 2; q <= 10; ++q) {
        for (int k : {2, 3}) {
            for (int s : {1, 2, 3}) {
                // reachable sums x_1^k + ... + x_s^k with gcd(x_1, q) = 1
                std::vector<char> reach(q, 0);
                for (std::int64_t x1 = 0; x1 < q; ++x1) {
                    if (std::gcd(x1, q) != 1) continue;
                    std::int64_t b = 1;
                    for (int i = 0; i < k; ++i) b = b * x1 % q;
                    if (s == 1) {
                        reach[b] = 1;
                        continue;
                    }
                    std::vector<char> cur(q, 0);
                    cur[b] = 1;
                    for (int j = 1; j < s; ++j) {
                        std::vector<char> next(q, 0);
                        for (std::int64_t r = 0; r < q; ++r) {
                            if (!cur[r]) continue;
                            for (std::int64_t x = 0; x < q; ++x) {
                                std::int64_t xk = 1;
                                for (int i = 0; i < k; ++i) xk = xk * x % q;
                                next[(r + xk) % q] = 1;
                            }
                        }
                        cur = std::move(next);
                    }
                    for (std::int64_t r = 0; r < q; ++r)
                        if (cur[r]) reach[r] = 1;
                }
                for (std::int64_t n = 0; n < q; ++n)
                    CHECK(local_congruence_check(n, q, s, k) ==
                          bool(reach[n]));
            }
        }
    }
    // sums of three squares, one odd: cannot hit 7 mod 8; four can.
    CHECK(!local_congruence_check(7, 8, 3, 2));
    CHECK(local_congruence_check(7, 8, 4, 2));
}

TEST_CASE("operation budgets abort oversized requests") {
    OpBudget tiny(50);
    CHECK_THROWS_AS(moment_complete_even(2, SmoothContext{2, 60, 7}, &tiny),
                    BudgetError);
    OpBudget small(100);
    CHECK_THROWS_AS(count_representations(100000, 4, 2, &small), BudgetError);
    OpBudget roomy(100'000'000);
    moment_complete_even(2, SmoothContext{2, 20, 5}, &roomy);
    CHECK(roomy.used() > 0);
    CHECK(roomy.used() <= roomy.limit());
}

TEST_CASE("scaling rows and the report layout") {
    const SmoothContext ctx{2, 6, 5};
    const std::vector<Rational> grid = {Rational(1), Rational(2)};
    const auto rows = scaling_rows(1, ctx, grid);
    REQUIRE(rows.size() == 2);
    const double card = double(enumerate_smooth(6, 5).size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].Q == grid[i]);
        const auto region = major_arcs(grid[i], 6, 2);
        CHECK(rows[i].moment ==
              doctest::Approx(moment_restricted_even(1, ctx, region).value)
                  .epsilon(1e-9));
        CHECK(rows[i].predictor ==
              doctest::Approx(to_double(region.measure()) * card * card));
        CHECK(rows[i].ratio ==
              doctest::Approx(rows[i].moment / rows[i].predictor));
    }

    const auto csv = scaling_report_csv(2, 2, {6, 8}, 5,
                                        {Rational(1), Rational(3, 2),
                                         Rational(2), Rational(3)});
    CHECK(csv == scaling_report_csv(2, 2, {6, 8}, 5,
                                    {Rational(1), Rational(3, 2), Rational(2),
                                     Rational(3)}));
    CHECK(csv.find("Q,moment,predictor,ratio") == 0);
    CHECK(csv.find("# P=6") != std::string::npos);
    CHECK(csv.find("# P=8") != std::string::npos);
    CHECK_THROWS_AS(scaling_report_csv(2, 3, {6}, 5, {Rational(1)}),
                    UsageError);
    CHECK_THROWS_AS(scaling_report_csv(2, 0, {6}, 5, {Rational(1)}),
                    UsageError);
}
