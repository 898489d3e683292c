#include "waring/rational.hpp"

#include <cctype>
#include <cmath>

#include "waring/errors.hpp"

namespace waring {

BigInt pow_big(const BigInt& base, unsigned exp) {
    BigInt result = 1;
    BigInt b = base;
    for (unsigned e = exp; e != 0; e >>= 1) {
        if (e & 1u) result *= b;
        if (e > 1) b *= b;
    }
    return result;
}

Rational pow_rational(const Rational& base, unsigned exp) {
    return Rational(pow_big(numerator(base), exp), pow_big(denominator(base), exp));
}

BigInt rational_floor(const Rational& x) {
    BigInt num = numerator(x);
    BigInt den = denominator(x); // > 0 in canonical form
    BigInt q = num / den;        // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

BigInt rational_ceil(const Rational& x) {
    return -rational_floor(-x);
}

Rational frac01(const Rational& x) {
    return x - Rational(rational_floor(x));
}

double to_double(const Rational& x) {
    return x.convert_to<double>();
}

Complex unit_phase(const Rational& x) {
    const double theta = 2.0 * M_PI * to_double(frac01(x));
    return Complex(std::cos(theta), std::sin(theta));
}

Rational parse_rational(const std::string& text, bool* decimal_converted) {
    if (decimal_converted) *decimal_converted = false;
    if (text.empty()) throw UsageError("empty rational literal");

    auto parse_int = [](const std::string& s) -> BigInt {
        if (s.empty()) throw UsageError("empty integer literal");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw UsageError("bad integer literal '" + s + "'");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw UsageError("bad integer literal '" + s + "'");
        return BigInt(s);
    };

    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num = parse_int(text.substr(0, slash));
        BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) throw UsageError("zero denominator in '" + text + "'");
        return Rational(num, den);
    }

    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string head = text.substr(0, dot);
        std::string tail = text.substr(dot + 1);
        if (tail.find_first_not_of("0123456789") != std::string::npos || tail.empty())
            throw UsageError("bad decimal literal '" + text + "'");
        bool negative = !head.empty() && head[0] == '-';
        BigInt whole = head.empty() || head == "-" || head == "+"
                           ? BigInt(0)
                           : parse_int(head);
        BigInt scale = pow_big(10, static_cast<unsigned>(tail.size()));
        BigInt frac = BigInt(tail);
        BigInt num = whole * scale + (negative ? -frac : frac);
        if (decimal_converted) *decimal_converted = true;
        return Rational(num, scale);
    }

    return Rational(parse_int(text));
}

std::string rational_to_string(const Rational& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

} // namespace waring
