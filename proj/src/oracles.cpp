#include "waring/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "waring/errors.hpp"

namespace waring {

namespace {

OpBudget& ensure(OpBudget*& budget, OpBudget& fallback) {
    if (!budget) budget = &fallback;
    return *budget;
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::int64_t>::max() / base)
            throw UsageError("integer power overflows 64 bits");
        r *= base;
    }
    return r;
}

// Counts of t-fold sums of k-th powers over A(P,R): map from value of
// x_1^k + ... + x_t^k to the number of ordered t-tuples attaining it.
std::map<std::int64_t, std::int64_t> power_sum_counts(int t, const SmoothContext& ctx,
                                                      OpBudget& budget) {
    validate(ctx);
    if (t < 1) throw UsageError("moment order must have t >= 1");
    std::vector<std::int64_t> powers;
    for (std::int64_t x : enumerate_smooth(ctx.P, ctx.R))
        powers.push_back(ipow(x, ctx.k));

    std::map<std::int64_t, std::int64_t> counts{{0, 1}};
    for (int step = 0; step < t; ++step) {
        std::map<std::int64_t, std::int64_t> next;
        budget.charge(counts.size() * powers.size());
        for (const auto& [sum, cnt] : counts)
            for (std::int64_t p : powers) next[sum + p] += cnt;
        counts = std::move(next);
    }
    return counts;
}

} // namespace

MomentResult moment_complete_even(int t, const SmoothContext& ctx, OpBudget* budget) {
    OpBudget local;
    auto& b = ensure(budget, local);
    auto counts = power_sum_counts(t, ctx, b);
    b.charge(counts.size());
    // U_{2t} = sum over values v of (#tuples summing to v)^2: each pair of
    // an x-tuple and a y-tuple with equal power sums is one solution.
    std::int64_t total = 0;
    for (const auto& [sum, cnt] : counts) total += cnt * cnt;
    MomentResult res;
    res.value = static_cast<double>(total);
    res.method = "exact-even-count";
    res.error_estimate = 0.0;
    return res;
}

std::map<std::int64_t, double> even_power_fourier(int t, const SmoothContext& ctx,
                                                  OpBudget* budget) {
    OpBudget local;
    auto& b = ensure(budget, local);
    auto counts = power_sum_counts(t, ctx, b);
    b.charge(counts.size() * counts.size());
    // |f^t|^2 = sum_{u,v} n_u n_v e((u - v) alpha)  =>  c_h = sum_u n_u n_{u+h}
    std::map<std::int64_t, double> c;
    for (const auto& [u, nu] : counts)
        for (const auto& [v, nv] : counts) c[u - v] += static_cast<double>(nu) * nv;
    return c;
}

MomentResult moment_restricted_even(int t, const SmoothContext& ctx,
                                    const IntervalUnion& region, OpBudget* budget) {
    auto c = even_power_fourier(t, ctx, budget);
    Complex total = 0.0;
    for (const auto& [h, ch] : c)
        total += ch * integrate_unit_phase(h, region);
    MomentResult res;
    res.value = total.real();
    res.method = "fourier-exact";
    // the imaginary part is pure rounding noise; report it as the error scale
    res.error_estimate = std::abs(total.imag());
    return res;
}

namespace {

double abs_weyl_pow(double alpha, const std::vector<std::int64_t>& powers, double s) {
    double re = 0.0, im = 0.0;
    for (std::int64_t p : powers) {
        double frac = alpha * static_cast<double>(p);
        frac -= std::floor(frac);
        re += std::cos(2.0 * M_PI * frac);
        im += std::sin(2.0 * M_PI * frac);
    }
    const double mag2 = re * re + im * im;
    return s == 2.0 ? mag2 : std::pow(mag2, s / 2.0);
}

struct PanelResult {
    double value = 0.0;
    double error = 0.0;
};

double simpson(double fa, double fm, double fb, double h) {
    return (fa + 4.0 * fm + fb) * h / 6.0;
}

// Adaptive bisection on [a,b]: compare the one-panel Simpson value against
// the two-panel refinement; the Richardson estimate |S2 - S1| / 15 decides
// acceptance.  Panels below the width floor are accepted with their
// estimate added to the error budget.
void adapt(double a, double b, double fa, double fm, double fb, double whole,
           double tol, const std::vector<std::int64_t>& powers, double s,
           PanelResult& out, OpBudget& budget, int depth) {
    budget.charge(powers.size() * 2);
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = abs_weyl_pow(lm, powers, s);
    const double frm = abs_weyl_pow(rm, powers, s);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double refined = left + right;
    const double est = std::abs(refined - whole) / 15.0;
    if (est <= tol || (b - a) < 1e-12 || depth > 48) {
        out.value += refined;
        out.error += est;
        return;
    }
    adapt(a, m, fa, flm, fm, left, tol / 2.0, powers, s, out, budget, depth + 1);
    adapt(m, b, fm, frm, fb, right, tol / 2.0, powers, s, out, budget, depth + 1);
}

} // namespace

MomentResult moment_quadrature(double s, const SmoothContext& ctx,
                               const IntervalUnion& region, double rtol,
                               OpBudget* budget) {
    validate(ctx);
    if (s < 0) throw UsageError("moment_quadrature: s must be >= 0");
    if (rtol <= 0) throw UsageError("moment_quadrature: rtol must be positive");
    OpBudget local;
    auto& b = ensure(budget, local);

    std::vector<std::int64_t> powers;
    for (std::int64_t x : enumerate_smooth(ctx.P, ctx.R))
        powers.push_back(ipow(x, ctx.k));

    // first pass: crude value to set the absolute tolerance scale
    const double card = static_cast<double>(powers.size());
    const double crude = std::pow(card, s) * to_double(region.measure());
    const double tol_total = rtol * std::max(crude, 1e-300);

    PanelResult acc;
    const Rational total_measure = region.measure();
    for (const auto& iv : region.parts()) {
        const double a = to_double(iv.lo);
        const double bnd = to_double(iv.hi);
        if (!(bnd > a)) continue;
        const double share = to_double((iv.hi - iv.lo) / total_measure);
        const double fa = abs_weyl_pow(a, powers, s);
        const double fb = abs_weyl_pow(bnd, powers, s);
        const double fm = abs_weyl_pow(0.5 * (a + bnd), powers, s);
        const double whole = simpson(fa, fm, fb, bnd - a);
        adapt(a, bnd, fa, fm, fb, whole, tol_total * share, powers, s, acc, b, 0);
    }

    MomentResult res;
    res.value = acc.value;
    res.method = "quadrature";
    res.error_estimate = acc.error;
    return res;
}

std::int64_t count_representations(std::int64_t n, int s, int k, OpBudget* budget) {
    if (n < 0) throw UsageError("count_representations: n must be >= 0");
    if (s < 1) throw UsageError("count_representations: s must be >= 1");
    if (k < 2) throw UsageError("count_representations: k must be >= 2");
    OpBudget local;
    auto& b = ensure(budget, local);

    std::vector<std::int64_t> powers;
    for (std::int64_t x = 1; ipow(x, k) <= n; ++x) powers.push_back(ipow(x, k));

    std::vector<std::int64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int step = 0; step < s; ++step) {
        std::vector<std::int64_t> next(ways.size(), 0);
        b.charge(ways.size() * std::max<std::size_t>(powers.size(), 1));
        for (std::int64_t v = 0; v <= n; ++v) {
            if (ways[static_cast<std::size_t>(v)] == 0) continue;
            for (std::int64_t p : powers) {
                if (v + p > n) break;
                next[static_cast<std::size_t>(v + p)] += ways[static_cast<std::size_t>(v)];
            }
        }
        ways = std::move(next);
    }
    return ways[static_cast<std::size_t>(n)];
}

std::int64_t count_smooth_representations(std::int64_t n, int s,
                                          const SmoothContext& ctx,
                                          OpBudget* budget) {
    validate(ctx);
    if (n < 0) throw UsageError("count_smooth_representations: n must be >= 0");
    if (s < 1) throw UsageError("count_smooth_representations: s must be >= 1");
    OpBudget local;
    auto& b = ensure(budget, local);

    std::vector<std::int64_t> powers;
    for (std::int64_t x : enumerate_smooth(ctx.P, ctx.R)) {
        std::int64_t p = ipow(x, ctx.k);
        if (p <= n) powers.push_back(p);
    }

    std::vector<std::int64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int step = 0; step < s; ++step) {
        std::vector<std::int64_t> next(ways.size(), 0);
        b.charge(ways.size() * std::max<std::size_t>(powers.size(), 1));
        for (std::int64_t v = 0; v <= n; ++v) {
            if (ways[static_cast<std::size_t>(v)] == 0) continue;
            for (std::int64_t p : powers) {
                if (v + p > n) break;
                next[static_cast<std::size_t>(v + p)] += ways[static_cast<std::size_t>(v)];
            }
        }
        ways = std::move(next);
    }
    return ways[static_cast<std::size_t>(n)];
}

namespace {

std::int64_t pow_mod(std::int64_t base, int exp, std::int64_t mod) {
    std::int64_t r = 1 % mod;
    std::int64_t b = base % mod;
    if (b < 0) b += mod;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % mod);
        b = static_cast<std::int64_t>((__int128)b * b % mod);
    }
    return r;
}

} // namespace

Complex gauss_sum(std::int64_t q, std::int64_t a, int k) {
    if (q < 1) throw UsageError("gauss_sum: q must be >= 1");
    if (k < 1) throw UsageError("gauss_sum: k must be >= 1");
    Complex sum = 0.0;
    for (std::int64_t r = 1; r <= q; ++r) {
        std::int64_t num = static_cast<std::int64_t>(
            (__int128)((a % q + q) % q) * pow_mod(r, k, q) % q);
        sum += unit_phase(Rational(num, q));
    }
    return sum;
}

Complex singular_series_term(std::int64_t q, std::int64_t n, int s, int k) {
    if (q < 1) throw UsageError("singular_series_term: q must be >= 1");
    if (s < 1) throw UsageError("singular_series_term: s must be >= 1");
    Complex term = 0.0;
    for (std::int64_t a = 1; a <= q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        Complex base = gauss_sum(q, a, k) / static_cast<double>(q);
        Complex p = 1.0;
        for (int i = 0; i < s; ++i) p *= base;
        std::int64_t na = ((n % q) * (a % q)) % q;
        term += p * unit_phase(Rational(-na, q));
    }
    return term;
}

double singular_series_truncated(std::int64_t n, int s, int k, std::int64_t X) {
    if (X < 1) throw UsageError("singular_series_truncated: X must be >= 1");
    Complex total = 0.0;
    for (std::int64_t q = 1; q <= X; ++q) total += singular_series_term(q, n, s, k);
    if (std::abs(total.imag()) > 1e-9)
        throw UsageError("singular series: imaginary part failed to vanish: " +
                         std::to_string(total.imag()));
    return total.real();
}

Complex v_weight(const Rational& beta, std::int64_t n, int k) {
    if (n < 1) throw UsageError("v_weight: n must be >= 1");
    if (k < 2) throw UsageError("v_weight: k must be >= 2");
    Complex sum = 0.0;
    const double inv_k = 1.0 / static_cast<double>(k);
    for (std::int64_t m = 1; m <= n; ++m)
        sum += std::pow(static_cast<double>(m), inv_k - 1.0) *
               unit_phase(beta * m);
    return sum * inv_k;
}

bool local_congruence_check(std::int64_t n, std::int64_t q, int s, int k) {
    if (q < 1) throw UsageError("local_congruence_check: q must be >= 1");
    if (s < 1) throw UsageError("local_congruence_check: s must be >= 1");
    if (k < 1) throw UsageError("local_congruence_check: k must be >= 1");

    std::vector<char> unit_powers(static_cast<std::size_t>(q), 0);
    std::vector<char> all_powers(static_cast<std::size_t>(q), 0);
    for (std::int64_t x = 0; x < q; ++x) {
        std::int64_t p = pow_mod(x, k, q);
        all_powers[static_cast<std::size_t>(p)] = 1;
        if (std::gcd(x, q) == 1) unit_powers[static_cast<std::size_t>(p)] = 1;
    }

    // reachable sums of (s-1) unrestricted k-th powers mod q
    std::vector<char> reach(static_cast<std::size_t>(q), 0);
    reach[0] = 1;
    for (int step = 0; step < s - 1; ++step) {
        std::vector<char> next(static_cast<std::size_t>(q), 0);
        for (std::int64_t v = 0; v < q; ++v) {
            if (!reach[static_cast<std::size_t>(v)]) continue;
            for (std::int64_t p = 0; p < q; ++p)
                if (all_powers[static_cast<std::size_t>(p)])
                    next[static_cast<std::size_t>((v + p) % q)] = 1;
        }
        reach = std::move(next);
    }

    const std::int64_t target = ((n % q) + q) % q;
    for (std::int64_t p = 0; p < q; ++p) {
        if (!unit_powers[static_cast<std::size_t>(p)]) continue;
        std::int64_t rest = (target - p % q + q) % q;
        if (reach[static_cast<std::size_t>(rest)]) return true;
    }
    return false;
}

std::vector<ScalingRow> scaling_rows(int t, const SmoothContext& ctx,
                                     const std::vector<Rational>& Q_grid,
                                     OpBudget* budget) {
    validate(ctx);
    OpBudget local;
    auto& b = ensure(budget, local);
    const auto coeffs = even_power_fourier(t, ctx, &b);
    const double card =
        static_cast<double>(enumerate_smooth(ctx.P, ctx.R).size());
    std::vector<ScalingRow> rows;
    for (const Rational& Q : Q_grid) {
        const IntervalUnion region = major_arcs(Q, ctx.P, ctx.k);
        Complex total = 0.0;
        for (const auto& [h, ch] : coeffs)
            total += ch * integrate_unit_phase(h, region);
        ScalingRow row;
        row.Q = Q;
        row.moment = total.real();
        row.predictor = to_double(region.measure()) * std::pow(card, 2.0 * t);
        row.ratio = row.predictor > 0 ? row.moment / row.predictor : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string scaling_report_csv(int k, int s, const std::vector<std::int64_t>& P_list,
                               std::int64_t R,
                               const std::vector<Rational>& Q_grid) {
    if (s < 2 || s % 2 != 0)
        throw UsageError("scaling_report_csv: s must be a positive even integer");
    std::ostringstream out;
    out << "Q,moment,predictor,ratio\n";
    char buf[64];
    for (std::int64_t P : P_list) {
        SmoothContext ctx{k, P, R};
        out << "# P=" << P << "\n";
        for (const ScalingRow& row : scaling_rows(s / 2, ctx, Q_grid)) {
            out << rational_to_string(row.Q);
            std::snprintf(buf, sizeof buf, ",%.9e,%.9e,%.9e\n", row.moment,
                          row.predictor, row.ratio);
            out << buf;
        }
    }
    return out.str();
}

} // namespace waring
