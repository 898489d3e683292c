#include "waring/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>

#include "waring/errors.hpp"

namespace waring {

IntervalUnion IntervalUnion::from_parts(std::vector<RationalInterval> parts) {
    std::erase_if(parts, [](const RationalInterval& iv) { return iv.lo >= iv.hi; });
    std::sort(parts.begin(), parts.end(),
              [](const RationalInterval& x, const RationalInterval& y) {
                  return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
              });
    IntervalUnion u;
    for (auto& iv : parts) {
        if (!u.parts_.empty() && iv.lo <= u.parts_.back().hi) {
            if (iv.hi > u.parts_.back().hi) u.parts_.back().hi = iv.hi;
        } else {
            u.parts_.push_back(std::move(iv));
        }
    }
    return u;
}

Rational IntervalUnion::measure() const {
    Rational total = 0;
    for (const auto& iv : parts_) total += iv.hi - iv.lo;
    return total;
}

bool IntervalUnion::contains(const Rational& x) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                               [](const Rational& v, const RationalInterval& iv) {
                                   return v < iv.lo;
                               });
    if (it == parts_.begin()) return false;
    --it;
    return x >= it->lo && x < it->hi;
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& other) const {
    std::vector<RationalInterval> parts = parts_;
    parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
    return from_parts(std::move(parts));
}

IntervalUnion IntervalUnion::intersect(const IntervalUnion& other) const {
    std::vector<RationalInterval> parts;
    std::size_t i = 0, j = 0;
    while (i < parts_.size() && j < other.parts_.size()) {
        const auto& x = parts_[i];
        const auto& y = other.parts_[j];
        Rational lo = std::max(x.lo, y.lo);
        Rational hi = std::min(x.hi, y.hi);
        if (lo < hi) parts.push_back({lo, hi});
        if (x.hi <= y.hi)
            ++i;
        else
            ++j;
    }
    return from_parts(std::move(parts));
}

IntervalUnion IntervalUnion::subtract(const IntervalUnion& other) const {
    std::vector<RationalInterval> parts;
    std::size_t j = 0;
    for (const auto& x : parts_) {
        Rational lo = x.lo;
        while (j < other.parts_.size() && other.parts_[j].hi <= lo) ++j;
        std::size_t jj = j;
        while (jj < other.parts_.size() && other.parts_[jj].lo < x.hi) {
            if (other.parts_[jj].lo > lo)
                parts.push_back({lo, other.parts_[jj].lo});
            lo = std::max(lo, other.parts_[jj].hi);
            if (lo >= x.hi) break;
            ++jj;
        }
        if (lo < x.hi) parts.push_back({lo, x.hi});
    }
    return from_parts(std::move(parts));
}

IntervalUnion IntervalUnion::complement_in_unit() const {
    RationalInterval unit{Rational(0), Rational(1)};
    IntervalUnion u;
    u.parts_.push_back(unit);
    return u.subtract(*this);
}

std::string IntervalUnion::to_csv() const {
    std::ostringstream out;
    out << "num_lo,den_lo,num_hi,den_hi\n";
    for (const auto& iv : parts_)
        out << numerator(iv.lo).str() << ',' << denominator(iv.lo).str() << ','
            << numerator(iv.hi).str() << ',' << denominator(iv.hi).str() << '\n';
    return out.str();
}

IntervalUnion IntervalUnion::from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "num_lo,den_lo,num_hi,den_hi")
        throw DataError("interval CSV: missing or wrong header");
    std::vector<RationalInterval> parts;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field[4];
        for (int i = 0; i < 4; ++i)
            if (!std::getline(row, field[i], ','))
                throw DataError("interval CSV: row with fewer than 4 fields: " + line);
        std::string extra;
        if (std::getline(row, extra, ','))
            throw DataError("interval CSV: row with more than 4 fields: " + line);
        try {
            RationalInterval iv{Rational(BigInt(field[0]), BigInt(field[1])),
                                Rational(BigInt(field[2]), BigInt(field[3]))};
            parts.push_back(std::move(iv));
        } catch (const std::exception&) {
            throw DataError("interval CSV: bad rational in row: " + line);
        }
    }
    return from_parts(std::move(parts));
}

namespace {

void require_height_args(std::int64_t P, int k) {
    if (P < 1) throw UsageError("arcs: P must be >= 1");
    if (k < 2) throw UsageError("arcs: k must be >= 2");
}

// Arcs of M_q as raw intervals, clipped into [0,1).  half = (Q/P^k)/q.
void append_arcs_for_q(std::int64_t q, const Rational& half,
                       std::vector<RationalInterval>& parts) {
    for (std::int64_t a = 0; a <= q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        Rational lo = Rational(a, q) - half;
        Rational hi = Rational(a, q) + half;
        parts.push_back({std::max(lo, Rational(0)), std::min(hi, Rational(1))});
    }
}

} // namespace

IntervalUnion major_arcs_for_q(std::int64_t q, const Rational& Q,
                               const Rational& P_to_k) {
    if (q < 1) throw UsageError("major_arcs_for_q: q must be >= 1");
    if (P_to_k <= 0) throw UsageError("major_arcs_for_q: height must be positive");
    std::vector<RationalInterval> parts;
    if (Rational(q) <= Q) append_arcs_for_q(q, Q / P_to_k / q, parts);
    return IntervalUnion::from_parts(std::move(parts));
}

IntervalUnion major_arcs_height(const Rational& Q, const Rational& P_to_k) {
    if (P_to_k <= 0) throw UsageError("major_arcs_height: height must be positive");
    std::vector<RationalInterval> parts;
    if (Q >= 1 && Q * 2 >= P_to_k) {
        // the two arcs at 0 and 1 alone already cover the unit interval
        parts.push_back({Rational(0), Rational(1)});
        return IntervalUnion::from_parts(std::move(parts));
    }
    const BigInt qmax = rational_floor(Q);
    for (BigInt qb = 1; qb <= qmax; ++qb) {
        auto q = qb.convert_to<std::int64_t>();
        append_arcs_for_q(q, Q / P_to_k / q, parts);
    }
    return IntervalUnion::from_parts(std::move(parts));
}

IntervalUnion major_arcs(const Rational& Q, std::int64_t P, int k) {
    require_height_args(P, k);
    return major_arcs_height(Q, Rational(pow_big(BigInt(P), static_cast<unsigned>(k))));
}

IntervalUnion minor_arcs(const Rational& Q, std::int64_t P, int k) {
    return major_arcs(Q, P, k).complement_in_unit();
}

IntervalUnion dyadic_shell(const Rational& Q, std::int64_t P, int k) {
    return major_arcs(Q, P, k).subtract(major_arcs(Q / 2, P, k));
}

int dyadic_levels(std::int64_t P, int k) {
    require_height_args(P, k);
    const BigInt pk = pow_big(BigInt(P), static_cast<unsigned>(k));
    int L = 0;
    BigInt power = 4; // 4^(L+1)
    while (power <= pk) {
        ++L;
        power *= 4;
    }
    return L;
}

namespace {

// Best coprime numerator for alpha at denominator q within distance
// bound * (1/q) ... i.e. |q*alpha - a| <= bound, 0 <= a <= q.  Returns the
// coprime a minimising |q*alpha - a| when one exists.
std::optional<BigInt> best_coprime_numerator(const Rational& alpha, std::int64_t q,
                                             const Rational& bound) {
    const Rational target = alpha * q;
    BigInt lo = rational_ceil(target - bound);
    BigInt hi = rational_floor(target + bound);
    if (lo < 0) lo = 0;
    if (hi > q) hi = q;
    std::optional<BigInt> best;
    Rational best_dist;
    for (BigInt a = lo; a <= hi; ++a) {
        if (gcd(a, BigInt(q)) != 1) continue;
        Rational dist = abs(target - Rational(a));
        if (!best || dist < best_dist) {
            best = a;
            best_dist = dist;
        }
    }
    return best;
}

} // namespace

ArcClassification classify(const Rational& alpha, const Rational& Q,
                           std::int64_t P, int k) {
    require_height_args(P, k);
    const Rational pk(pow_big(BigInt(P), static_cast<unsigned>(k)));
    const Rational width = Q / pk;
    ArcClassification result;
    const BigInt qmax = rational_floor(Q);
    for (BigInt qb = 1; qb <= qmax; ++qb) {
        auto q = qb.convert_to<std::int64_t>();
        if (auto a = best_coprime_numerator(alpha, q, width)) {
            result.inside = true;
            result.label.q = q;
            result.label.a = *a;
            result.label.height = pk * abs(alpha * q - Rational(*a));
            return result;
        }
    }
    return result;
}

Rational upsilon(const Rational& alpha, std::int64_t P, int k) {
    require_height_args(P, k);
    const BigInt pk_int = pow_big(BigInt(P), static_cast<unsigned>(k));
    const Rational pk(pk_int);
    for (std::int64_t q = 1; BigInt(4) * q * q <= pk_int; ++q) {
        // candidate numerators within half-width 1/(2 q sqrt(P^k)) of alpha
        const Rational target = alpha * q;
        BigInt a0 = rational_floor(target);
        for (BigInt a = a0; a <= a0 + 1; ++a) {
            if (a < 0 || a > q || gcd(a, BigInt(q)) != 1) continue;
            const Rational diff = target - Rational(a);
            if (Rational(4) * pk * diff * diff <= 1)
                return Rational(1) / (Rational(q) + pk * abs(diff));
        }
    }
    return Rational(0);
}

ShellCoverReport shell_cover_check(std::int64_t P, int k,
                                   const std::vector<Rational>& samples,
                                   std::optional<Rational> Q0_opt) {
    require_height_args(P, k);
    ShellCoverReport report;
    report.P = P;
    report.k = k;
    report.levels = dyadic_levels(P, k);

    if (Q0_opt) {
        report.Q0 = *Q0_opt;
    } else {
        // smallest integer with Q0^2 >= P^k, so the arcs cover [0,1)
        const BigInt pk = pow_big(BigInt(P), static_cast<unsigned>(k));
        BigInt q0(static_cast<long long>(std::sqrt(to_double(Rational(pk)))));
        if (q0 < 1) q0 = 1;
        while (q0 * q0 < pk) ++q0;
        while (q0 > 1 && (q0 - 1) * (q0 - 1) >= pk) --q0;
        report.Q0 = Rational(q0);
    }
    if (report.Q0 < 1)
        throw UsageError("shell_cover_check: Q0 must be >= 1");

    report.all_covered = true;
    for (const Rational& alpha : samples) {
        ShellAssignment assign;
        assign.alpha = alpha;
        Rational Qj = report.Q0;
        int j = 0;
        ArcClassification last_inside;
        int last_j = -1;
        while (Qj >= 1) {
            ArcClassification c = classify(alpha, Qj, P, k);
            if (!c.inside) break;
            last_inside = c;
            last_j = j;
            Qj /= 2;
            ++j;
        }
        if (last_j >= 0) {
            assign.covered = true;
            assign.j = last_j;
            assign.label = last_inside.label;
            report.max_j = std::max(report.max_j, last_j);
        } else {
            report.all_covered = false;
        }
        report.samples.push_back(std::move(assign));
    }
    return report;
}

Complex integrate_unit_phase(long long h, const IntervalUnion& region) {
    if (h == 0) return Complex(to_double(region.measure()), 0.0);
    Complex total = 0.0;
    const double scale = 2.0 * M_PI * static_cast<double>(h);
    for (const auto& iv : region.parts()) {
        // antiderivative of e(h a) is e(h a) / (2 pi i h)
        Complex num = unit_phase(Rational(h) * iv.hi) - unit_phase(Rational(h) * iv.lo);
        total += num / Complex(0.0, scale);
    }
    return total;
}

namespace {

void check_lemma23_preconditions(std::int64_t q, std::int64_t w, const Rational& Q,
                                 std::int64_t P, int k) {
    require_height_args(P, k);
    if (q < 1 || w < 1) throw UsageError("verify_lemma23: q and w must be >= 1");
    if (std::gcd(q, w) != 1)
        throw UsageError("verify_lemma23: requires gcd(q, w) = 1");
    if (Rational(q) > Q)
        throw UsageError("verify_lemma23: requires q <= Q (arc system nonempty)");
    const BigInt pk = pow_big(BigInt(P), static_cast<unsigned>(k));
    const BigInt wk = pow_big(BigInt(w), static_cast<unsigned>(k));
    // Q <= (P/w)^(k/2) / 2  <=>  4 Q^2 w^k <= P^k, compared exactly
    const Rational q2 = Q * Q;
    if (Rational(4) * q2 * Rational(wk) > Rational(pk))
        throw UsageError("verify_lemma23: requires Q <= (P/w)^(k/2) / 2");
}

} // namespace

Lemma23Check verify_lemma23(const std::map<long long, Complex>& coefficients,
                            std::int64_t q, std::int64_t w, const Rational& Q,
                            std::int64_t P, int k) {
    check_lemma23_preconditions(q, w, Q, P, k);
    const Rational pk(pow_big(BigInt(P), static_cast<unsigned>(k)));
    const Rational wk(pow_big(BigInt(w), static_cast<unsigned>(k)));
    const BigInt wk_int = pow_big(BigInt(w), static_cast<unsigned>(k));

    const IntervalUnion left_region = major_arcs_for_q(q, Q, pk);
    const IntervalUnion right_region = major_arcs_for_q(q, Q, pk / wk);

    Lemma23Check chk;
    double scale = 0.0;
    for (const auto& [h, c] : coefficients) {
        const BigInt hw = BigInt(h) * wk_int;
        if (hw > std::numeric_limits<long long>::max() ||
            hw < std::numeric_limits<long long>::min())
            throw UsageError("verify_lemma23: frequency h * w^k overflows");
        chk.lhs += c * integrate_unit_phase(hw.convert_to<long long>(), left_region);
        chk.rhs += c * integrate_unit_phase(h, right_region);
        scale += std::abs(c);
    }
    chk.rhs /= to_double(wk);
    chk.residual = std::abs(chk.lhs - chk.rhs);
    chk.ok = chk.residual < 1e-12 * std::max(1.0, scale);
    return chk;
}

bool verify_lemma23_constant_exact(std::int64_t q, std::int64_t w, const Rational& Q,
                                   std::int64_t P, int k) {
    check_lemma23_preconditions(q, w, Q, P, k);
    const Rational pk(pow_big(BigInt(P), static_cast<unsigned>(k)));
    const Rational wk(pow_big(BigInt(w), static_cast<unsigned>(k)));
    const Rational lhs = major_arcs_for_q(q, Q, pk).measure();
    const Rational rhs = major_arcs_for_q(q, Q, pk / wk).measure() / wk;
    return lhs == rhs;
}

} // namespace waring
