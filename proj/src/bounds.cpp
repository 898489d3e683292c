#include "waring/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "waring/errors.hpp"

namespace waring {

namespace {

bool is_power_of_two(std::int64_t k) { return k > 0 && (k & (k - 1)) == 0; }

const ExponentTable* effective_table(ExponentSource source,
                                     const ExponentTable* table) {
    if (source != ExponentSource::table) return nullptr;
    return table ? table : &bundled_exponent_table();
}

} // namespace

GZeroResult g0(int k, ExponentSource source, const ExponentTable* table) {
    if (k < 4) throw UsageError("g0: requires k >= 4");
    GZeroResult best;
    best.value = std::numeric_limits<double>::infinity();
    if (source == ExponentSource::table) {
        const ExponentTable* t = effective_table(source, table);
        const TauEstimate te = tau(k, source, t);
        const auto rows = t->rows_for(k);
        if (rows.empty())
            throw DataError("g0: no exponent rows for k=" + std::to_string(k));
        for (const ExponentRow& r : rows) {
            const double val = r.s + r.delta / te.tau;
            if (val < best.value) {
                best.value = val;
                best.v = r.s;
            }
        }
        return best;
    }
    // Formula mode: the objective v + Delta_v/tau is at least v, so the
    // even-v scan stops once v alone exceeds the best value seen.
    const TauEstimate te = tau(k, ExponentSource::formula);
    for (int v = 2;; v += 2) {
        if (static_cast<double>(v) > best.value) break;
        const double val = v + solve_delta_formula(k, v) / te.tau;
        if (val < best.value) {
            best.value = val;
            best.v = v;
        }
    }
    return best;
}

std::int64_t g_upper(int k, ExponentSource source, const ExponentTable* table) {
    const GZeroResult g = g0(k, source, table);
    const std::int64_t from_g0 =
        static_cast<std::int64_t>(std::floor(g.value)) + 1;
    const std::int64_t floor_term = is_power_of_two(k) ? 4 * (std::int64_t)k
                                                       : 2 * (std::int64_t)k + 3;
    return std::max(from_g0, floor_term);
}

std::int64_t thm11_bound(std::int64_t k) {
    if (k < 1) throw UsageError("thm11_bound: requires k >= 1");
    const double v = static_cast<double>(k) *
                     (std::log(static_cast<double>(k)) + 4.20032);
    return static_cast<std::int64_t>(std::ceil(v));
}

double thm12_value(std::int64_t k) {
    if (k < 1) throw UsageError("thm12_value: requires k >= 1");
    static const Constants c = constants();
    return static_cast<double>(k) *
               (std::log(static_cast<double>(k)) + c.C1) +
           c.C2;
}

std::int64_t thm12_integer_bound(std::int64_t k) {
    // the bound is strict, so the largest admissible integer below a
    // non-integral value is ceil(value) - 1 (and value - 1 when integral)
    return static_cast<std::int64_t>(std::ceil(thm12_value(k))) - 1;
}

GPlusInfo gplus_bound(std::int64_t k, std::int64_t h) {
    if (k < 2) throw UsageError("gplus_bound: requires k >= 2");
    if (h < 1) throw UsageError("gplus_bound: requires h >= 1");
    GPlusInfo info;
    info.bound = (h + 2) / 2; // ceil((h + 1) / 2)
    if (k == 4 || k == 8 || k == 16 || k == 32) {
        info.has_exact = true;
        info.exact_value = 4 * k;
        if (k == 16) info.note = "H+(16)=53";
        if (k == 32) info.note = "H+(32)=123";
    }
    return info;
}

double nu(int k, int s, double tau_val, const ExponentTable* table) {
    const DeltaStarResult ds = delta_star(k, s, tau_val, table);
    if (ds.value >= 0.0) return 0.0; // no saving without a negative exponent
    return std::min(-2.0 * ds.value / k, 1.0 / (6.0 * k));
}

std::vector<LiteratureBound> load_literature_bounds(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open literature bounds: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "k,bound,source")
        throw DataError("literature bounds " + path +
                        ": expected header `k,bound,source`");
    std::vector<LiteratureBound> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string field;
        LiteratureBound row;
        try {
            std::size_t pos = 0;
            if (!std::getline(ss, field, ',')) throw std::invalid_argument("k");
            row.k = std::stoll(field, &pos);
            if (pos != field.size()) throw std::invalid_argument("k");
            if (!std::getline(ss, field, ','))
                throw std::invalid_argument("bound");
            row.bound = std::stoll(field, &pos);
            if (pos != field.size()) throw std::invalid_argument("bound");
            if (!std::getline(ss, row.source) || row.source.empty())
                throw std::invalid_argument("source");
            if (row.k < 2 || row.bound < 1)
                throw std::invalid_argument("range");
        } catch (const std::exception&) {
            throw DataError("literature bounds " + path +
                            ": malformed row at line " +
                            std::to_string(lineno) + ": " + line);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

const std::vector<LiteratureBound>& bundled_literature_bounds() {
    static const std::vector<LiteratureBound> rows =
        load_literature_bounds(data_dir() + "/literature_bounds.csv");
    return rows;
}

BestKnown best_known(std::int64_t k) {
    if (k < 2) throw UsageError("best_known: requires k >= 2");
    BestKnown best;
    best.bound = std::numeric_limits<std::int64_t>::max();
    for (const LiteratureBound& lb : bundled_literature_bounds()) {
        if (lb.k == k && lb.bound < best.bound) {
            best.bound = lb.bound;
            best.source = lb.source;
        }
    }
    if (k >= 4 && bundled_exponent_table().covers(static_cast<int>(k))) {
        const std::int64_t h = g_upper(static_cast<int>(k),
                                       ExponentSource::table);
        if (h < best.bound) {
            best.bound = h;
            best.source = "computed (VW2000 exponents)";
        }
    }
    const std::int64_t t11 = thm11_bound(k);
    if (t11 < best.bound) {
        best.bound = t11;
        best.source = "k(log k + 4.20032)";
    }
    return best;
}

BoundReport bound_report(int k, ExponentSource source,
                         const ExponentTable* table) {
    const ExponentTable* t = effective_table(source, table);
    BoundReport r;
    r.k = k;
    r.source = source;
    const TauEstimate te = tau(k, source, t);
    const GZeroResult g = g0(k, source, t);
    r.g0 = g.value;
    r.g0_minimizing_v = g.v;
    const std::int64_t from_g0 =
        static_cast<std::int64_t>(std::floor(g.value)) + 1;
    const std::int64_t floor_term =
        is_power_of_two(k) ? 4 * (std::int64_t)k : 2 * (std::int64_t)k + 3;
    r.thm62_bound = std::max(from_g0, floor_term);
    r.thm11_bound = thm11_bound(k);
    r.thm12_value = thm12_value(k);
    const GPlusInfo gp = gplus_bound(k, r.thm62_bound);
    r.gplus_bound = gp.bound;
    r.gplus_has_exact = gp.has_exact;
    r.gplus_exact_value = gp.exact_value;
    r.gplus_note = gp.note;
    r.nu = nu(k, static_cast<int>(r.thm62_bound), te.tau, t);
    const BestKnown bk = best_known(k);
    r.best_known = bk.bound;
    r.best_source = bk.source;
    return r;
}

std::vector<BoundReport> table_report(int k_lo, int k_hi, ExponentSource source,
                                      const ExponentTable* table) {
    if (k_lo < 4 || k_hi < k_lo)
        throw UsageError("table_report: requires 4 <= k_lo <= k_hi");
    const ExponentTable* t = effective_table(source, table);
    if (source == ExponentSource::table) {
        std::string missing;
        for (int k = k_lo; k <= k_hi; ++k)
            if (!t->covers(k)) missing += " " + std::to_string(k);
        if (!missing.empty())
            throw DataError("table_report: no exponent rows for k:" + missing);
    }
    std::vector<BoundReport> out;
    for (int k = k_lo; k <= k_hi; ++k) out.push_back(bound_report(k, source, t));
    return out;
}

std::string format_round_up_4(double value) {
    // ceil at the 4th decimal, with a small guard against the upward float
    // noise of the scaling multiply
    const double scaled = std::ceil(value * 1e4 - 1e-6);
    const long long c = static_cast<long long>(scaled);
    const long long a = c < 0 ? -c : c;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%lld.%04lld", c < 0 ? "-" : "", a / 10000,
                  a % 10000);
    return buf;
}

std::string report_csv(const std::vector<BoundReport>& reports) {
    std::ostringstream out;
    out << "k,G0,v,H,thm11,thm12,Gplus,best,source\n";
    for (const BoundReport& r : reports) {
        out << r.k << ',' << format_round_up_4(r.g0) << ','
            << r.g0_minimizing_v << ',' << r.thm62_bound << ','
            << r.thm11_bound << ',' << format_round_up_4(r.thm12_value) << ','
            << r.gplus_bound << ',' << r.best_known << ',' << r.best_source
            << '\n';
    }
    return out.str();
}

} // namespace waring
