#include "palinword/rational.hpp"

#include <charconv>

namespace palinword {

Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

Rational add(const Rational& a, const Rational& b) {
    return make_rational(a.num * b.den + b.num * a.den, a.den * b.den);
}
Rational sub(const Rational& a, const Rational& b) {
    return make_rational(a.num * b.den - b.num * a.den, a.den * b.den);
}
Rational mul(const Rational& a, const Rational& b) { return make_rational(a.num * b.num, a.den * b.den); }
Rational div(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::invalid_argument("division by zero");
    return make_rational(a.num * b.den, a.den * b.num);
}

std::string to_string(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

static long long parse_ll(std::string_view s) {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument("bad integer: " + std::string(s));
    return v;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return make_rational(parse_ll(text), 1);
    return make_rational(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
}

Threshold parse_threshold(std::string_view text) {
    bool plus = false;
    if (!text.empty() && text.back() == '+') {
        plus = true;
        text.remove_suffix(1);
    }
    Threshold t{parse_rational(text), plus};
    if (t.value.num <= t.value.den) throw std::invalid_argument("threshold must exceed 1");
    return t;
}

std::string to_string(const Threshold& t) { return to_string(t.value) + (t.plus ? "+" : ""); }

}  // namespace palinword
