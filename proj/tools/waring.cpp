// Command-line front end for the Waring-bound toolkit: transcendental
// constants, admissible exponents and bound tables, smooth sets, exponential
// sums and their decomposition identities, arc systems with exact rational
// measures, moment oracles, and the acceptance suite.
//
// Exit codes: 0 success, 1 verification failure (an asserted residual or
// tolerance was breached), 2 usage or data error, 3 operation budget
// exhausted.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "waring/acceptance.hpp"
#include "waring/arcs.hpp"
#include "waring/bounds.hpp"
#include "waring/budget.hpp"
#include "waring/errors.hpp"
#include "waring/expsums.hpp"
#include "waring/exponents.hpp"
#include "waring/oracles.hpp"
#include "waring/rational.hpp"
#include "waring/smooth.hpp"

namespace {

using namespace waring;

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Rationals are accepted as `p/q`, integers, or decimals; decimals are
// converted exactly, with a warning so the caller knows the value in use.
Rational parse_rational_arg(const std::string& text, const char* flag) {
    bool from_decimal = false;
    Rational r;
    try {
        r = parse_rational(text, &from_decimal);
    } catch (const UsageError& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
    if (from_decimal)
        std::cerr << "note: " << flag << " decimal '" << text
                  << "' converted to exact rational " << rational_to_string(r)
                  << "\n";
    return r;
}

// Mode selection: explicit `formula` / `table`, or `auto` (the default),
// which picks table mode exactly when the bundled table covers k.
ExponentSource resolve_mode(const std::string& mode, int k_lo, int k_hi) {
    if (mode == "formula") return ExponentSource::formula;
    if (mode == "table") return ExponentSource::table;
    if (mode == "auto") {
        for (int k = k_lo; k <= k_hi; ++k)
            if (!bundled_exponent_table().covers(k))
                return ExponentSource::formula;
        return ExponentSource::table;
    }
    throw UsageError("unknown --mode '" + mode +
                     "' (expected formula, table, or auto)");
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::vector<Rational> random_alphas(std::mt19937_64& rng, int count,
                                    std::int64_t max_den) {
    std::vector<Rational> out;
    std::uniform_int_distribution<std::int64_t> den_d(2, max_den);
    for (int i = 0; i < count; ++i) {
        const std::int64_t den = den_d(rng);
        std::uniform_int_distribution<std::int64_t> num_d(0, den - 1);
        out.emplace_back(num_d(rng), den);
    }
    return out;
}

struct VerifySummary {
    long verified = 0;
    long failures = 0;
    double max_residual = 0.0;

    void absorb(const IdentityCheck& c) {
        ++verified;
        if (!c.ok) ++failures;
        max_residual = std::max(max_residual, c.residual);
    }
    int report(std::ostream& out) const {
        out << "verified," << verified << "\n";
        out << "failures," << failures << "\n";
        out << "max_residual," << num(max_residual) << "\n";
        return failures == 0 ? 0 : 1;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Waring-bound toolkit: exact arc systems, smooth "
                 "exponential sums, moment oracles, and bound tables"};
    app.require_subcommand(1);

    std::string out_path;
    std::uint64_t budget_limit = OpBudget::kDefaultLimit;
    std::uint64_t seed = 12345;
    app.add_option("--out", out_path, "write output to this file (default stdout)");
    app.add_option("--budget", budget_limit,
                   "operation budget for heavy enumerations")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "PRNG seed for randomized suites");

    std::function<int(std::ostream&)> runner;

    // ---- constants / omega -------------------------------------------------
    app.add_subcommand("constants",
                       "solved constants omega, C1, C2, delta, gamma*")
        ->callback([&] {
            runner = [](std::ostream& out) {
                const Constants c = constants();
                out << "omega," << num(c.omega) << "\n";
                out << "C1," << num(c.C1) << "\n";
                out << "C2," << num(c.C2) << "\n";
                out << "delta," << num(c.delta_at_gamma1) << "\n";
                out << "gamma_star," << num(c.gamma_star) << "\n";
                return 0;
            };
        });

    app.add_subcommand("omega", "root of omega - 2 - 1/omega = log omega")
        ->callback([&] {
            runner = [](std::ostream& out) {
                out << num(solve_omega()) << "\n";
                return 0;
            };
        });

    // ---- delta -------------------------------------------------------------
    auto* delta_cmd =
        app.add_subcommand("delta", "admissible exponent Delta_v");
    int delta_k = 0;
    double delta_v = 0.0;
    std::string delta_mode = "formula";
    delta_cmd->add_option("--k", delta_k, "exponent k")->required();
    delta_cmd->add_option("--v", delta_v, "order v")->required();
    delta_cmd->add_option("--mode", delta_mode, "formula|table (default formula)");
    delta_cmd->callback([&] {
        runner = [&](std::ostream& out) {
            if (delta_mode == "table") {
                const int s = static_cast<int>(delta_v);
                if (s != delta_v)
                    throw UsageError("table mode requires an integer --v");
                const ExponentRow* row = bundled_exponent_table().find(delta_k, s);
                if (!row)
                    throw DataError("no table row for (k=" +
                                    std::to_string(delta_k) + ", s=" +
                                    std::to_string(s) + ")");
                out << num(row->delta) << "\n";
                return 0;
            }
            if (delta_mode != "formula")
                throw UsageError("delta: --mode must be formula or table");
            if (delta_v != 2.0 * static_cast<std::int64_t>(delta_v / 2.0))
                std::cerr << "note: the closed form is derived for even "
                             "integer v; computing on the continuous curve\n";
            out << num(solve_delta_formula(delta_k, delta_v)) << "\n";
            return 0;
        };
    });

    // ---- tau ---------------------------------------------------------------
    auto* tau_cmd = app.add_subcommand("tau", "tau(k), the arc-shell exponent");
    int tau_k = 0;
    std::string tau_mode = "auto";
    tau_cmd->add_option("--k", tau_k, "exponent k")->required();
    tau_cmd->add_option("--mode", tau_mode, "formula|table|auto");
    tau_cmd->callback([&] {
        runner = [&](std::ostream& out) {
            const ExponentSource src = resolve_mode(tau_mode, tau_k, tau_k);
            const TauEstimate te = tau(tau_k, src, &bundled_exponent_table());
            out << "tau," << num(te.tau) << "\n";
            out << "T," << num(1.0 / te.tau) << "\n";
            out << "argmax_even_order," << te.argmax_even_order << "\n";
            out << "source,"
                << (te.source == ExponentSource::table ? "table" : "formula")
                << "\n";
            return 0;
        };
    });

    // ---- delta-star --------------------------------------------------------
    auto* dstar_cmd =
        app.add_subcommand("delta-star", "minor-arc exponent Delta_s*");
    int dstar_k = 0, dstar_s = 0;
    std::string dstar_mode = "auto";
    bool dstar_candidates = false;
    dstar_cmd->add_option("--k", dstar_k, "exponent k")->required();
    dstar_cmd->add_option("--s", dstar_s, "number of variables s")->required();
    dstar_cmd->add_option("--mode", dstar_mode, "formula|table|auto");
    dstar_cmd->add_flag("--candidates", dstar_candidates,
                        "also print every (t, value) candidate");
    dstar_cmd->callback([&] {
        runner = [&](std::ostream& out) {
            const ExponentSource src = resolve_mode(dstar_mode, dstar_k, dstar_k);
            const ExponentTable* table =
                src == ExponentSource::table ? &bundled_exponent_table()
                                             : nullptr;
            const TauEstimate te =
                tau(dstar_k, src, &bundled_exponent_table());
            const DeltaStarResult ds =
                delta_star(dstar_k, dstar_s, te.tau, table);
            out << "tau," << num(te.tau) << "\n";
            out << "value," << num(ds.value) << "\n";
            out << "t," << ds.t << "\n";
            if (dstar_candidates)
                for (const auto& [t, val] : ds.candidates)
                    out << "candidate," << t << ',' << num(val) << "\n";
            return 0;
        };
    });

    // ---- g0 ----------------------------------------------------------------
    auto* g0_cmd = app.add_subcommand("g0", "G0(k) = min_v (v + Delta_v/tau)");
    int g0_k = 0;
    std::string g0_mode = "auto";
    g0_cmd->add_option("--k", g0_k, "exponent k")->required();
    g0_cmd->add_option("--mode", g0_mode, "formula|table|auto");
    g0_cmd->callback([&] {
        runner = [&](std::ostream& out) {
            const ExponentSource src = resolve_mode(g0_mode, g0_k, g0_k);
            const GZeroResult g = g0(g0_k, src, &bundled_exponent_table());
            out << "g0," << num(g.value) << "\n";
            out << "v," << g.v << "\n";
            out << "H," << g_upper(g0_k, src, &bundled_exponent_table())
                << "\n";
            return 0;
        };
    });

    // ---- bounds ------------------------------------------------------------
    auto* bounds_cmd =
        app.add_subcommand("bounds", "bound-table rows (CSV)");
    int bounds_k = 0;
    std::string bounds_range, bounds_mode = "auto";
    bounds_cmd->add_option("--k", bounds_k, "single exponent k");
    bounds_cmd->add_option("--range", bounds_range,
                           "inclusive range, e.g. 14..20");
    bounds_cmd->add_option("--mode", bounds_mode, "formula|table|auto");
    bounds_cmd->callback([&] {
        runner = [&](std::ostream& out) {
            int lo = bounds_k, hi = bounds_k;
            if (!bounds_range.empty()) {
                const auto pos = bounds_range.find("..");
                if (pos == std::string::npos)
                    throw UsageError("bounds: --range must look like 14..20");
                try {
                    lo = std::stoi(bounds_range.substr(0, pos));
                    hi = std::stoi(bounds_range.substr(pos + 2));
                } catch (const std::exception&) {
                    throw UsageError("bounds: --range must look like 14..20");
                }
            } else if (bounds_k == 0) {
                throw UsageError("bounds: provide --k or --range");
            }
            const ExponentSource src = resolve_mode(bounds_mode, lo, hi);
            out << report_csv(table_report(lo, hi, src));
            return 0;
        };
    });

    // ---- smooth ------------------------------------------------------------
    auto* smooth_cmd = app.add_subcommand(
        "smooth", "smooth sets, kernel divisors, factorisation blocks");
    std::int64_t sm_P = 0, sm_R = 0, sm_q = 0, sm_pi = 0, sm_M = 0,
                 sm_factor = 0;
    smooth_cmd->add_option("--P", sm_P, "height P")->required();
    smooth_cmd->add_option("--R", sm_R, "smoothness bound R")->required();
    smooth_cmd->add_option("--q", sm_q, "kernel modulus: print C_q(P,R)");
    smooth_cmd->add_option("--pi", sm_pi,
                           "least-prime bound (with --q) or block prime "
                           "(with --M)");
    smooth_cmd->add_option("--M", sm_M,
                           "with --pi: print the block B(M,pi,R); with "
                           "--factor: threshold");
    smooth_cmd->add_option("--factor", sm_factor,
                           "factor v as m*w over the block system (needs --M)");
    smooth_cmd->callback([&] {
        runner = [&](std::ostream& out) {
            if (sm_factor > 0) {
                if (sm_M <= 0)
                    throw UsageError("smooth: --factor needs --M");
                const VaughanTriple t = vaughan_factorize(sm_factor, sm_M, sm_R);
                out << "pi," << t.pi << "\n";
                out << "m," << t.m << "\n";
                out << "w," << t.w << "\n";
                return 0;
            }
            std::vector<std::int64_t> values;
            if (sm_M > 0 && sm_pi > 0) {
                values = enumerate_vaughan_block(sm_M, sm_pi, sm_R);
            } else if (sm_q > 0 && sm_pi > 0) {
                values = enumerate_kernel_divisors_above(sm_P, sm_R, sm_q, sm_pi);
            } else if (sm_q > 0) {
                values = enumerate_kernel_divisors(sm_P, sm_R, sm_q);
            } else {
                values = enumerate_smooth(sm_P, sm_R);
            }
            for (std::int64_t v : values) out << v << "\n";
            return 0;
        };
    });

    // ---- weyl --------------------------------------------------------------
    auto* weyl_cmd =
        app.add_subcommand("weyl", "smooth Weyl sum f(alpha; P, R)");
    std::string weyl_alpha;
    int weyl_k = 0;
    std::int64_t weyl_P = 0, weyl_R = 0;
    weyl_cmd->add_option("--alpha", weyl_alpha, "rational alpha (p/q or decimal)")
        ->required();
    weyl_cmd->add_option("--k", weyl_k, "exponent k")->required();
    weyl_cmd->add_option("--P", weyl_P, "height P")->required();
    weyl_cmd->add_option("--R", weyl_R, "smoothness bound R")->required();
    weyl_cmd->callback([&] {
        runner = [&](std::ostream& out) {
            const Rational alpha = parse_rational_arg(weyl_alpha, "--alpha");
            const Complex f = weyl_sum(alpha, SmoothContext{weyl_k, weyl_P, weyl_R});
            out << "re," << num(f.real()) << "\n";
            out << "im," << num(f.imag()) << "\n";
            return 0;
        };
    });

    // ---- verify ------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand(
        "verify", "check a decomposition or rescaling identity on random "
                  "and/or given inputs");
    std::string vf_lemma, vf_alpha, vf_Q;
    int vf_k = 0, vf_samples = 0;
    std::int64_t vf_P = 0, vf_R = 0, vf_q = 1, vf_M = -1, vf_m = 1, vf_pi = 2,
                 vf_w = 2;
    verify_cmd->add_option("--lemma", vf_lemma, "2.3, 3.1, 3.3, or 4.1")
        ->required();
    verify_cmd->add_option("--alpha", vf_alpha, "explicit rational alpha");
    verify_cmd->add_option("--k", vf_k, "exponent k")->required();
    verify_cmd->add_option("--P", vf_P, "height P")->required();
    verify_cmd->add_option("--R", vf_R, "smoothness bound R");
    verify_cmd->add_option("--q", vf_q, "modulus q (default 1)");
    verify_cmd->add_option("--M", vf_M, "split threshold M");
    verify_cmd->add_option("--m", vf_m, "block element m (identity 4.1)");
    verify_cmd->add_option("--pi", vf_pi, "smoothness bound pi (identity 4.1)");
    verify_cmd->add_option("--w", vf_w, "rescaling factor w (identity 2.3)");
    verify_cmd->add_option("--Q", vf_Q, "arc height Q (identity 2.3)");
    verify_cmd->add_option("--samples", vf_samples,
                           "number of seeded random samples");
    verify_cmd->callback([&] {
        runner = [&](std::ostream& out) {
            std::mt19937_64 rng(seed);
            if (vf_lemma == "2.3") {
                if (vf_Q.empty())
                    throw UsageError("verify --lemma 2.3 needs --Q");
                const Rational Q = parse_rational_arg(vf_Q, "--Q");
                const int draws = std::max(1, vf_samples);
                std::uniform_real_distribution<double> unit(-1.0, 1.0);
                long failures = 0;
                double max_residual = 0.0;
                for (int i = 0; i < draws; ++i) {
                    std::map<long long, Complex> coeffs;
                    for (long long h = -5; h <= 5; ++h)
                        coeffs[h] = Complex(unit(rng), unit(rng));
                    const Lemma23Check c =
                        verify_lemma23(coeffs, vf_q, vf_w, Q, vf_P, vf_k);
                    if (!c.ok) ++failures;
                    max_residual = std::max(max_residual, c.residual);
                }
                const bool exact_ok =
                    verify_lemma23_constant_exact(vf_q, vf_w, Q, vf_P, vf_k);
                out << "verified," << draws << "\n";
                out << "failures," << failures << "\n";
                out << "max_residual," << num(max_residual) << "\n";
                out << "constant_case_exact," << (exact_ok ? 1 : 0) << "\n";
                return failures == 0 && exact_ok ? 0 : 1;
            }

            if (vf_R <= 0)
                throw UsageError("verify: --R is required for this identity");
            const SmoothContext ctx{vf_k, vf_P, vf_R};
            std::vector<Rational> alphas;
            if (!vf_alpha.empty())
                alphas.push_back(parse_rational_arg(vf_alpha, "--alpha"));
            if (vf_samples > 0) {
                const auto more = random_alphas(rng, vf_samples, 1000000);
                alphas.insert(alphas.end(), more.begin(), more.end());
            }
            if (alphas.empty())
                throw UsageError("verify: provide --alpha and/or --samples");

            VerifySummary summary;
            for (const Rational& alpha : alphas) {
                if (vf_lemma == "3.1") {
                    summary.absorb(verify_lemma31(
                        alpha, ctx, vf_M >= 0 ? vf_M : 10, vf_q));
                } else if (vf_lemma == "3.3") {
                    summary.absorb(verify_lemma33(
                        alpha, ctx, vf_M >= 0 ? vf_M : vf_R, vf_q));
                } else if (vf_lemma == "4.1") {
                    summary.absorb(
                        verify_lemma41(alpha, ctx, vf_m, vf_q, vf_pi));
                } else {
                    throw UsageError("verify: unknown --lemma '" + vf_lemma +
                                     "' (expected 2.3, 3.1, 3.3, 4.1)");
                }
            }
            return summary.report(out);
        };
    });

    // ---- arcs --------------------------------------------------------------
    auto* arcs_cmd = app.add_subcommand(
        "arcs", "arc systems: intervals (CSV), classification, shell cover");
    std::string arcs_Q, arcs_alpha;
    std::int64_t arcs_P = 0;
    int arcs_k = 0, arcs_cover = 0;
    bool arcs_shell = false, arcs_minor = false, arcs_upsilon = false;
    arcs_cmd->add_option("--Q", arcs_Q, "arc height Q (rational)");
    arcs_cmd->add_option("--P", arcs_P, "height P")->required();
    arcs_cmd->add_option("--k", arcs_k, "exponent k")->required();
    arcs_cmd->add_flag("--shell", arcs_shell,
                       "print the dyadic shell at Q instead of the arcs");
    arcs_cmd->add_flag("--minor", arcs_minor, "print the complement");
    arcs_cmd->add_option("--alpha", arcs_alpha,
                         "classify this alpha instead of printing intervals");
    arcs_cmd->add_flag("--upsilon", arcs_upsilon,
                       "with --alpha: also print Upsilon(alpha)");
    arcs_cmd->add_option("--cover", arcs_cover,
                         "run the shell-cover scan on this many seeded samples");
    arcs_cmd->callback([&] {
        runner = [&](std::ostream& out) {
            if (arcs_cover > 0) {
                std::mt19937_64 rng(seed);
                std::optional<Rational> Q0;
                if (!arcs_Q.empty()) Q0 = parse_rational_arg(arcs_Q, "--Q");
                const ShellCoverReport rep = shell_cover_check(
                    arcs_P, arcs_k, random_alphas(rng, arcs_cover, 1000000),
                    Q0);
                long covered = 0;
                for (const ShellAssignment& s : rep.samples)
                    covered += s.covered ? 1 : 0;
                out << "samples," << rep.samples.size() << "\n";
                out << "covered," << covered << "\n";
                out << "Q0," << rational_to_string(rep.Q0) << "\n";
                out << "levels," << rep.levels << "\n";
                out << "max_j," << rep.max_j << "\n";
                out << "all_covered," << (rep.all_covered ? 1 : 0) << "\n";
                return rep.all_covered ? 0 : 1;
            }
            if (arcs_Q.empty())
                throw UsageError("arcs: provide --Q (or --cover N)");
            const Rational Q = parse_rational_arg(arcs_Q, "--Q");
            if (!arcs_alpha.empty()) {
                const Rational alpha = parse_rational_arg(arcs_alpha, "--alpha");
                const ArcClassification c = classify(alpha, Q, arcs_P, arcs_k);
                out << "inside," << (c.inside ? 1 : 0) << "\n";
                if (c.inside) {
                    out << "q," << c.label.q << "\n";
                    out << "a," << c.label.a.str() << "\n";
                    out << "height," << rational_to_string(c.label.height)
                        << "\n";
                }
                if (arcs_upsilon)
                    out << "upsilon,"
                        << rational_to_string(upsilon(alpha, arcs_P, arcs_k))
                        << "\n";
                return 0;
            }
            IntervalUnion region;
            if (arcs_shell)
                region = dyadic_shell(Q, arcs_P, arcs_k);
            else if (arcs_minor)
                region = minor_arcs(Q, arcs_P, arcs_k);
            else
                region = major_arcs(Q, arcs_P, arcs_k);
            out << region.to_csv();
            out << "# measure," << rational_to_string(region.measure()) << "\n";
            return 0;
        };
    });

    // ---- moment ------------------------------------------------------------
    auto* moment_cmd = app.add_subcommand(
        "moment", "mean values of |f|^s, complete or restricted to arcs");
    int mo_k = 0, mo_t = 0;
    std::int64_t mo_P = 0, mo_R = 0;
    std::string mo_region_Q, mo_method = "auto";
    double mo_s = 0.0, mo_rtol = 1e-8;
    moment_cmd->add_option("--k", mo_k, "exponent k")->required();
    moment_cmd->add_option("--P", mo_P, "height P")->required();
    moment_cmd->add_option("--R", mo_R, "smoothness bound R")->required();
    moment_cmd->add_option("--t", mo_t, "half-order t (moment of |f|^(2t))")
        ->required();
    moment_cmd->add_option("--region-Q", mo_region_Q,
                           "restrict to the arcs M(Q,P)");
    moment_cmd->add_option("--method", mo_method,
                           "count|fourier|quadrature|auto");
    moment_cmd->add_option("--s", mo_s,
                           "real moment order for quadrature (default 2t)");
    moment_cmd->add_option("--rtol", mo_rtol,
                           "relative tolerance for quadrature");
    moment_cmd->callback([&] {
        runner = [&](std::ostream& out) {
            OpBudget budget(budget_limit);
            const SmoothContext ctx{mo_k, mo_P, mo_R};
            IntervalUnion region =
                IntervalUnion::from_parts({{Rational(0), Rational(1)}});
            const bool restricted = !mo_region_Q.empty();
            if (restricted)
                region = major_arcs(parse_rational_arg(mo_region_Q, "--region-Q"),
                                    mo_P, mo_k);
            std::string method = mo_method;
            if (method == "auto") method = restricted ? "fourier" : "count";
            MomentResult res;
            if (method == "count") {
                if (restricted)
                    throw UsageError(
                        "moment: --method count has no restricted form; use "
                        "fourier or quadrature");
                res = moment_complete_even(mo_t, ctx, &budget);
            } else if (method == "fourier") {
                res = moment_restricted_even(mo_t, ctx, region, &budget);
            } else if (method == "quadrature") {
                const double s = mo_s > 0.0 ? mo_s : 2.0 * mo_t;
                res = moment_quadrature(s, ctx, region, mo_rtol, &budget);
            } else {
                throw UsageError("moment: unknown --method '" + method + "'");
            }
            out << "value," << num(res.value) << "\n";
            out << "method," << res.method << "\n";
            out << "error_estimate," << num(res.error_estimate) << "\n";
            return 0;
        };
    });

    // ---- reps --------------------------------------------------------------
    auto* reps_cmd = app.add_subcommand(
        "reps", "count ordered representations n = x_1^k + ... + x_s^k");
    std::int64_t rp_n = 0, rp_P = 0, rp_R = 0;
    int rp_s = 0, rp_k = 0;
    reps_cmd->add_option("--n", rp_n, "target n")->required();
    reps_cmd->add_option("--s", rp_s, "number of variables")->required();
    reps_cmd->add_option("--k", rp_k, "exponent k")->required();
    reps_cmd->add_option("--smooth-P", rp_P, "restrict x_i to A(P,R)");
    reps_cmd->add_option("--smooth-R", rp_R, "restrict x_i to A(P,R)");
    reps_cmd->callback([&] {
        runner = [&](std::ostream& out) {
            OpBudget budget(budget_limit);
            std::int64_t count;
            if (rp_P > 0 || rp_R > 0) {
                if (rp_P <= 0 || rp_R <= 0)
                    throw UsageError(
                        "reps: --smooth-P and --smooth-R go together");
                count = count_smooth_representations(
                    rp_n, rp_s, SmoothContext{rp_k, rp_P, rp_R}, &budget);
            } else {
                count = count_representations(rp_n, rp_s, rp_k, &budget);
            }
            out << count << "\n";
            return 0;
        };
    });

    // ---- gauss -------------------------------------------------------------
    auto* gauss_cmd =
        app.add_subcommand("gauss", "complete modular sum S(q,a)");
    std::int64_t ga_q = 0, ga_a = 0;
    int ga_k = 0;
    gauss_cmd->add_option("--q", ga_q, "modulus q")->required();
    gauss_cmd->add_option("--a", ga_a, "numerator a")->required();
    gauss_cmd->add_option("--k", ga_k, "exponent k")->required();
    gauss_cmd->callback([&] {
        runner = [&](std::ostream& out) {
            const Complex s = gauss_sum(ga_q, ga_a, ga_k);
            out << "re," << num(s.real()) << "\n";
            out << "im," << num(s.imag()) << "\n";
            return 0;
        };
    });

    // ---- singular ----------------------------------------------------------
    auto* sing_cmd = app.add_subcommand(
        "singular", "truncated singular series sum_{q<=X} A_q(n)");
    std::int64_t sg_n = 0, sg_X = 0, sg_local_q = 0;
    int sg_s = 0, sg_k = 0;
    sing_cmd->add_option("--n", sg_n, "target n")->required();
    sing_cmd->add_option("--s", sg_s, "number of variables")->required();
    sing_cmd->add_option("--k", sg_k, "exponent k")->required();
    sing_cmd->add_option("--X", sg_X, "truncation height")->required();
    sing_cmd->add_option("--local", sg_local_q,
                         "also test solubility of the congruence mod this q");
    sing_cmd->callback([&] {
        runner = [&](std::ostream& out) {
            out << "value," << num(singular_series_truncated(sg_n, sg_s, sg_k, sg_X))
                << "\n";
            if (sg_local_q > 0)
                out << "local_soluble,"
                    << (local_congruence_check(sg_n, sg_local_q, sg_s, sg_k) ? 1
                                                                             : 0)
                    << "\n";
            return 0;
        };
    });

    // ---- scaling-report ----------------------------------------------------
    auto* scale_cmd = app.add_subcommand(
        "scaling-report", "arc-mass scaling table over a Q grid (CSV)");
    int sc_k = 0, sc_s = 0;
    std::int64_t sc_R = 5;
    std::string sc_P_list, sc_Q_grid;
    scale_cmd->add_option("--k", sc_k, "exponent k")->required();
    scale_cmd->add_option("--s", sc_s, "even moment order s")->required();
    scale_cmd->add_option("--P-list", sc_P_list, "comma-separated heights")
        ->required();
    scale_cmd->add_option("--Q-grid", sc_Q_grid, "comma-separated rationals")
        ->required();
    scale_cmd->add_option("--R", sc_R, "smoothness bound (default 5)");
    scale_cmd->callback([&] {
        runner = [&](std::ostream& out) {
            std::vector<std::int64_t> P_list;
            for (const std::string& p : split_commas(sc_P_list)) {
                try {
                    P_list.push_back(std::stoll(p));
                } catch (const std::exception&) {
                    throw UsageError("scaling-report: bad P '" + p + "'");
                }
            }
            std::vector<Rational> Q_grid;
            for (const std::string& q : split_commas(sc_Q_grid))
                Q_grid.push_back(parse_rational_arg(q, "--Q-grid"));
            if (P_list.empty() || Q_grid.empty())
                throw UsageError("scaling-report: empty --P-list or --Q-grid");
            out << scaling_report_csv(sc_k, sc_s, P_list, sc_R, Q_grid);
            return 0;
        };
    });

    // ---- selftest ----------------------------------------------------------
    app.add_subcommand("selftest", "run the full acceptance suite")
        ->callback([&] {
            runner = [](std::ostream& out) {
                return run_acceptance(out) ? 0 : 1;
            };
        });

    // let the global flags (--out, --budget, --seed) appear after the
    // subcommand name as well as before it
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // help output
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file_out.open(out_path);
        if (!file_out) {
            std::cerr << "error: cannot open --out file: " << out_path << "\n";
            return 2;
        }
        out = &file_out;
    }

    try {
        return runner(*out);
    } catch (const BudgetError& e) {
        std::cerr << "error: operation budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
