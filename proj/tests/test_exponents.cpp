// Transcendental constants and the admissible-exponent machinery.  The
// root-finders are checked by residual (substituting the result back into
// its defining equation) and against independently computed 12-digit
// reference values; the scan routines against small hand-checkable cases.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "waring/errors.hpp"
#include "waring/exponents.hpp"

using namespace waring;

namespace {

struct TempCsv {
    std::string path;
    TempCsv(const std::string& name, const std::string& body)
        : path("/tmp/" + name) {
        std::ofstream out(path);
        out << body;
    }
    ~TempCsv() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("omega: residual and reference value") {
    const double omega = solve_omega();
    CHECK(std::abs(omega - 3.548292119980) < 1e-9);
    CHECK(std::abs(omega - 2 - 1.0 / omega - std::log(omega)) < 1e-12);
}

TEST_CASE("derived constant pack") {
    const Constants c = constants();
    CHECK(std::abs(c.omega - 3.548292119980) < 1e-9);
    CHECK(std::abs(c.C1 - 4.200189679105) < 1e-9);
    CHECK(std::abs(c.C2 - 3.015478197835) < 1e-9);
    CHECK(std::abs(c.delta_at_gamma1 - 0.278464542761) < 1e-9);
    CHECK(std::abs(c.gamma_star - 0.992320334772) < 1e-9);
    // defining equations
    CHECK(std::abs(c.C1 - (2 + std::log(c.omega * c.omega - 3 - 2 / c.omega))) <
          1e-12);
    CHECK(std::abs(c.delta_at_gamma1 + std::log(c.delta_at_gamma1) + 1) < 1e-12);
}

TEST_CASE("exponent recursion: endpoints, monotonicity, residual") {
    for (int k : {4, 14, 20, 100}) {
        CHECK(std::abs(solve_delta_formula(k, 0.0) - k) < 1e-9 * k);
        CHECK(std::abs(solve_delta_formula(k, 2.0 * k) - k * 0.278464542761) <
              1e-8 * k);
        double prev = solve_delta_formula(k, 0.0);
        for (double v = 2; v <= 6 * k; v += 2) {
            const double d = solve_delta_formula(k, v);
            CHECK(d < prev);
            CHECK(d > 0.0);
            const double x = d / k;
            CHECK(std::abs(x + std::log(x) - (1.0 - v / k)) < 1e-12);
            prev = d;
        }
    }
    // the published exponents are sharper than the recursion
    CHECK(solve_delta_formula(14, 26) > 4.039939);
    CHECK_THROWS_AS(solve_delta_formula(3, 10), UsageError);
    CHECK_THROWS_AS(solve_delta_formula(14, -1), UsageError);
}

TEST_CASE("table construction and CSV loading") {
    CHECK_THROWS_AS(ExponentTable({{14, 0, 1.0, "x"}}), DataError);
    CHECK_THROWS_AS(ExponentTable({{14, 26, 15.0, "x"}}), DataError);
    CHECK_THROWS_AS(ExponentTable({{14, 26, -0.5, "x"}}), DataError);
    CHECK_THROWS_AS(
        ExponentTable({{14, 26, 4.0, "x"}, {14, 26, 4.1, "x"}}), DataError);

    const ExponentTable ok({{14, 76, 0.109356, "x"}, {14, 26, 4.039939, "x"}});
    REQUIRE(ok.find(14, 26) != nullptr);
    CHECK(ok.find(14, 26)->delta == doctest::Approx(4.039939));
    CHECK(ok.find(14, 27) == nullptr);
    CHECK(ok.covers(14));
    CHECK(!ok.covers(15));
    const auto rows = ok.rows_for(14);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].s == 26); // sorted by s
    CHECK(rows[1].s == 76);

    CHECK_THROWS_AS(load_exponent_table("/nonexistent/file.csv"), DataError);
    {
        TempCsv bad("waring_bad_header.csv", "a,b,c,d\n14,26,4.0,x\n");
        CHECK_THROWS_AS(load_exponent_table(bad.path), DataError);
    }
    {
        TempCsv bad("waring_bad_row.csv",
                    "k,s,delta,source\n14,26,4.0,x\n15,2x8,4.3,y\n");
        try {
            load_exponent_table(bad.path);
            FAIL("expected DataError");
        } catch (const DataError& e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }
    {
        TempCsv good("waring_good.csv",
                     "k,s,delta,source\n14,26,4.039939,VW2000\n");
        const auto t = load_exponent_table(good.path);
        REQUIRE(t.rows().size() == 1);
        CHECK(t.rows()[0].source == "VW2000");
    }
}

TEST_CASE("bundled exponent table") {
    const ExponentTable& t = bundled_exponent_table();
    REQUIRE(t.rows().size() == 14);
    for (int k = 14; k <= 20; ++k) {
        CHECK(t.covers(k));
        CHECK(t.rows_for(k).size() == 2);
    }
    // spot values, at the half-ulp tolerance of the printed 6 decimals
    CHECK(std::abs(t.find(14, 26)->delta - 4.039939) < 5e-7);
    CHECK(std::abs(t.find(17, 96)->delta - 0.116203) < 5e-7);
    CHECK(std::abs(t.find(20, 118)->delta - 0.111388) < 5e-7);
}

TEST_CASE("tau: formula scan") {
    const TauEstimate t14 = tau(14, ExponentSource::formula);
    CHECK(t14.argmax_even_order == 28);
    CHECK(std::abs(t14.tau - 0.007911980616) < 1e-9);
    CHECK(t14.source == ExponentSource::formula);

    const TauEstimate t4 = tau(4, ExponentSource::formula);
    CHECK(t4.argmax_even_order == 8);
    CHECK(std::abs(t4.tau - 0.027691932155) < 1e-9);

    const TauEstimate t20 = tau(20, ExponentSource::formula);
    CHECK(t20.argmax_even_order == 40);

    // k * tau stays above the closed-form floor used by the g0 bound
    for (int k : {20, 25, 40, 80, 200}) {
        const double tk = tau(k, ExponentSource::formula).tau;
        CHECK(tk > 0.0);
        CHECK(k * tk >= 1.0 / 9.027901 - 1e-9);
    }
    CHECK_THROWS_AS(tau(3, ExponentSource::formula), UsageError);
}

TEST_CASE("tau: table mode") {
    const ExponentTable& table = bundled_exponent_table();
    const TauEstimate t14 = tau(14, ExponentSource::table, &table);
    CHECK(t14.argmax_even_order == 26);
    CHECK(std::abs(1.0 / t14.tau - 114.186836015) < 1e-6);
    CHECK(t14.source == ExponentSource::table);
    const TauEstimate t20 = tau(20, ExponentSource::table, &table);
    CHECK(t20.argmax_even_order == 38);
    CHECK(std::abs(1.0 / t20.tau - 169.174764561) < 1e-6);
    // the published rows beat the recursion where both apply
    CHECK(t14.tau > tau(14, ExponentSource::formula).tau);

    CHECK_THROWS_AS(tau(14, ExponentSource::table, nullptr), UsageError);
    CHECK_THROWS_AS(tau(21, ExponentSource::table, &table), DataError);
}

TEST_CASE("minor-arc exponent minimisation") {
    const ExponentTable& table = bundled_exponent_table();
    const double tau14 = tau(14, ExponentSource::table, &table).tau;
    const auto ds = delta_star(14, 89, tau14, &table);
    CHECK(ds.t == 13); // lands exactly on the published s = 76 row
    CHECK(std::abs(ds.value - (-0.0044925)) < 1e-7);
    CHECK(ds.candidates.size() == 88); // t = 0 .. 87
    // the reported value is the minimum of the candidate list
    double best = ds.candidates.front().second;
    for (const auto& [t, v] : ds.candidates) best = std::min(best, v);
    CHECK(ds.value == doctest::Approx(best));

    // with tau = 0 nothing is gained by shifting: t = 0 is optimal
    const auto flat = delta_star(14, 30, 0.0, &table);
    CHECK(flat.t == 0);
    CHECK(flat.value == doctest::Approx(solve_delta_formula(14, 30)));

    CHECK_THROWS_AS(delta_star(3, 10, 0.01), UsageError);
    CHECK_THROWS_AS(delta_star(14, 1, 0.01), UsageError);
}

TEST_CASE("kappa: domain, blow-up, limit identity") {
    CHECK_THROWS_AS(kappa(0.0, 20), UsageError);
    CHECK_THROWS_AS(kappa(0.5, 20), UsageError);
    CHECK_THROWS_AS(kappa_limit(-0.1), UsageError);
    CHECK(kappa(1e-8, 20) > 300);         // slow log singularity at 0
    CHECK(kappa(1e-300, 20) > 1e5);
    CHECK(kappa(0.5 - 1e-10, 20) > 1e6);  // pole at 1/2

    const double omega = solve_omega();
    // at xi = 1/omega the limit collapses to the polynomial value
    const double poly = omega * omega - 3 - 2 / omega;
    CHECK(std::abs(kappa_limit(1 / omega) - poly) < 1e-12);
    CHECK(std::abs(poly - 9.026725518275) < 1e-9);
    // kappa(xi, k) decreases to kappa_limit(xi) as k grows
    CHECK(kappa(0.3, 20) > kappa(0.3, 1000));
    CHECK(kappa(0.3, 1000) > kappa_limit(0.3));
}

TEST_CASE("kappa minimisation: stationarity and large-k limit") {
    const auto m20 = minimize_kappa(20);
    CHECK(std::abs(m20.xi_star - 0.272232444768) < 1e-9);
    CHECK(std::abs(m20.kappa_min - 9.948899022955) < 1e-9);
    const double x = m20.xi_star;
    CHECK(std::abs(x - 1 / x + 2 + 2.0 / 20 - std::log(x)) < 1e-12);
    CHECK(m20.kappa_min == doctest::Approx(kappa(x, 20)));
    // local minimality
    CHECK(kappa(x + 1e-4, 20) > m20.kappa_min);
    CHECK(kappa(x - 1e-4, 20) > m20.kappa_min);

    const auto m100 = minimize_kappa(100);
    CHECK(std::abs(m100.kappa_min - 9.209158525815) < 1e-9);
    CHECK(m100.kappa_min < m20.kappa_min);

    const auto huge = minimize_kappa(1000000000);
    CHECK(std::abs(huge.kappa_min - 9.0267255) < 1e-5);
    CHECK(std::abs(huge.xi_star - 1 / solve_omega()) < 1e-6);

    CHECK_THROWS_AS(minimize_kappa(3), UsageError);
}
