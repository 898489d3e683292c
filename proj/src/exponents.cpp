#include "waring/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "waring/errors.hpp"

namespace waring {

namespace {

// Safeguarded Newton for a strictly increasing g with g(lo) < 0 < g(hi).
// The sign-change bracket is verified before iterating; bisection takes
// over whenever a Newton step leaves the bracket.  Final residual < 1e-12.
double monotone_root(const std::function<double(double)>& g,
                     const std::function<double(double)>& gprime, double lo,
                     double hi) {
    double glo = g(lo), ghi = g(hi);
    if (!(glo < 0.0 && ghi > 0.0))
        throw std::logic_error("monotone_root: bracket has no sign change");
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double gx = g(x);
        if (std::abs(gx) < 1e-15) return x;
        if (gx < 0.0)
            lo = x;
        else
            hi = x;
        const double step = gx / gprime(x);
        double next = x - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == x) break;
        x = next;
    }
    if (std::abs(g(x)) >= 1e-12)
        throw std::logic_error("monotone_root: residual failed to converge");
    return x;
}

// Unique positive root of x + log x = c (c <= 1 in every use here, but the
// bracket below also covers c > 1).
double solve_x_plus_logx(double c) {
    double lo = 0.5 * std::exp(std::min(c, 1.0) - 1.0);
    double hi = std::max(1.5, c + 1.0);
    auto g = [c](double x) { return x + std::log(x) - c; };
    auto gp = [](double x) { return 1.0 + 1.0 / x; };
    return monotone_root(g, gp, lo, hi);
}

} // namespace

ExponentTable::ExponentTable(std::vector<ExponentRow> rows)
    : rows_(std::move(rows)) {
    std::sort(rows_.begin(), rows_.end(), [](const auto& a, const auto& b) {
        return std::tie(a.k, a.s, a.source) < std::tie(b.k, b.s, b.source);
    });
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const ExponentRow& r = rows_[i];
        if (r.s < 1)
            throw DataError("exponent table: s must be >= 1 (row with k=" +
                            std::to_string(r.k) + ")");
        if (!(r.delta >= 0.0 && r.delta <= static_cast<double>(r.k)))
            throw DataError("exponent table: delta out of [0, k] at (k=" +
                            std::to_string(r.k) + ", s=" + std::to_string(r.s) +
                            ")");
        if (i > 0) {
            const ExponentRow& p = rows_[i - 1];
            if (p.k == r.k && p.s == r.s && p.source == r.source)
                throw DataError("exponent table: duplicate row (k=" +
                                std::to_string(r.k) + ", s=" +
                                std::to_string(r.s) + ", source=" + r.source +
                                ")");
        }
    }
}

const ExponentRow* ExponentTable::find(int k, int s) const {
    for (const ExponentRow& r : rows_)
        if (r.k == k && r.s == s) return &r;
    return nullptr;
}

std::vector<ExponentRow> ExponentTable::rows_for(int k) const {
    std::vector<ExponentRow> out;
    for (const ExponentRow& r : rows_)
        if (r.k == k) out.push_back(r);
    return out;
}

bool ExponentTable::covers(int k) const {
    for (const ExponentRow& r : rows_)
        if (r.k == k) return true;
    return false;
}

ExponentTable load_exponent_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open exponent table: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "k,s,delta,source")
        throw DataError("exponent table " + path +
                        ": expected header `k,s,delta,source`");
    std::vector<ExponentRow> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string field;
        ExponentRow row;
        try {
            std::size_t pos = 0;
            if (!std::getline(ss, field, ',')) throw std::invalid_argument("k");
            row.k = std::stoi(field, &pos);
            if (pos != field.size()) throw std::invalid_argument("k");
            if (!std::getline(ss, field, ',')) throw std::invalid_argument("s");
            row.s = std::stoi(field, &pos);
            if (pos != field.size()) throw std::invalid_argument("s");
            if (!std::getline(ss, field, ','))
                throw std::invalid_argument("delta");
            row.delta = std::stod(field, &pos);
            if (pos != field.size()) throw std::invalid_argument("delta");
            if (!std::getline(ss, row.source) || row.source.empty())
                throw std::invalid_argument("source");
        } catch (const std::exception&) {
            throw DataError("exponent table " + path + ": malformed row at line " +
                            std::to_string(lineno) + ": " + line);
        }
        rows.push_back(std::move(row));
    }
    try {
        return ExponentTable(std::move(rows));
    } catch (const DataError& e) {
        throw DataError(std::string(e.what()) + " (file " + path + ")");
    }
}

std::string data_dir() {
    if (const char* env = std::getenv("WARING_DATA_DIR"); env && *env)
        return env;
#ifdef WARING_DEFAULT_DATA_DIR
    return WARING_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

const ExponentTable& bundled_exponent_table() {
    static const ExponentTable table =
        load_exponent_table(data_dir() + "/exponents_vw2000.csv");
    return table;
}

double solve_omega() {
    auto g = [](double w) { return w - 2.0 - 1.0 / w - std::log(w); };
    auto gp = [](double w) { return 1.0 + 1.0 / (w * w) - 1.0 / w; };
    return monotone_root(g, gp, 3.0, 4.0);
}

Constants constants() {
    Constants c;
    c.omega = solve_omega();
    const double d = c.omega * c.omega - 3.0 - 2.0 / c.omega;
    c.C1 = 2.0 + std::log(d);
    c.C2 = (c.omega * c.omega + 3.0 * c.omega - 2.0) /
           (c.omega * c.omega - c.omega - 2.0);
    c.delta_at_gamma1 = solve_x_plus_logx(-1.0);
    c.gamma_star = 0.5 * (1.0 - 1.0 / c.omega + std::log(c.omega));
    return c;
}

double solve_delta_formula(int k, double v) {
    if (k < 4) throw UsageError("solve_delta_formula: requires k >= 4");
    if (v < 0.0) throw UsageError("solve_delta_formula: requires v >= 0");
    return k * solve_x_plus_logx(1.0 - v / k);
}

TauEstimate tau(int k, ExponentSource source, const ExponentTable* table) {
    if (k < 4) throw UsageError("tau: requires k >= 4");
    TauEstimate est;
    est.k = k;
    est.source = source;
    if (source == ExponentSource::table) {
        if (!table) throw UsageError("tau: table mode requires a table");
        const auto rows = table->rows_for(k);
        if (rows.empty())
            throw DataError("tau: no exponent rows for k=" + std::to_string(k));
        est.tau = -std::numeric_limits<double>::infinity();
        for (const ExponentRow& r : rows) {
            const double val = (k - 2.0 * r.delta) /
                               (static_cast<double>(r.s) * r.s);
            if (val > est.tau) {
                est.tau = val;
                est.argmax_even_order = r.s;
            }
        }
        if (!(est.tau > 0.0))
            throw DataError("tau: table rows for k=" + std::to_string(k) +
                            " yield no positive value");
        return est;
    }
    // Formula mode.  Each term is at most k/s^2 (Delta_s >= 0), so once
    // k/s^2 falls below the running best, no larger s can win.
    est.tau = -std::numeric_limits<double>::infinity();
    for (int s = 2;; s += 2) {
        const double cap = static_cast<double>(k) / (static_cast<double>(s) * s);
        if (cap < est.tau) break;
        if (s > 100 * k)
            throw std::logic_error("tau: even-order scan failed to terminate");
        const double d = solve_delta_formula(k, s);
        const double val = (k - 2.0 * d) / (static_cast<double>(s) * s);
        if (val > est.tau) {
            est.tau = val;
            est.argmax_even_order = s;
        }
    }
    return est;
}

DeltaStarResult delta_star(int k, int s, double tau_val,
                           const ExponentTable* table) {
    if (k < 4) throw UsageError("delta_star: requires k >= 4");
    if (s < 2) throw UsageError("delta_star: requires s >= 2");
    DeltaStarResult res;
    res.value = std::numeric_limits<double>::infinity();
    for (int t = 0; t <= s - 2; ++t) {
        const int order = s - t;
        double d;
        if (const ExponentRow* row = table ? table->find(k, order) : nullptr) {
            d = row->delta;
        } else {
            // Delta is decreasing in the order, so evaluating at the even
            // order just above is conservative.
            const int even_up = order + (order % 2);
            d = solve_delta_formula(k, even_up);
        }
        const double val = d - t * tau_val;
        res.candidates.emplace_back(t, val);
        if (val < res.value) {
            res.value = val;
            res.t = t;
        }
    }
    return res;
}

double kappa(double xi, std::int64_t k) {
    if (!(xi > 0.0 && xi < 0.5))
        throw UsageError("kappa: requires 0 < xi < 1/2");
    if (k < 1) throw UsageError("kappa: requires k >= 1");
    const double n = 1.0 - xi - std::log(xi) + 2.0 / static_cast<double>(k);
    return n * n / (1.0 - 2.0 * xi);
}

double kappa_limit(double xi) {
    if (!(xi > 0.0 && xi < 0.5))
        throw UsageError("kappa_limit: requires 0 < xi < 1/2");
    const double n = 1.0 - xi - std::log(xi);
    return n * n / (1.0 - 2.0 * xi);
}

KappaMinimum minimize_kappa(std::int64_t k) {
    if (k < 4) throw UsageError("minimize_kappa: requires k >= 4");
    const double c = 2.0 + 2.0 / static_cast<double>(k);
    // Stationarity: xi - 1/xi + c = log xi, strictly increasing in
    // xi - 1/xi - log xi on (0, 1/2); bracket endpoints chosen inside the
    // domain with opposite signs.
    auto g = [c](double xi) { return xi - 1.0 / xi + c - std::log(xi); };
    auto gp = [](double xi) { return 1.0 + 1.0 / (xi * xi) - 1.0 / xi; };
    KappaMinimum out;
    out.xi_star = monotone_root(g, gp, 1e-3, 0.5 - 1e-12);
    out.kappa_min = kappa(out.xi_star, k);
    return out;
}

} // namespace waring
