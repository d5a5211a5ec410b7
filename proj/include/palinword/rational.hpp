#pragma once
// Exact rationals over 64-bit integers.  Freeness thresholds like 41/22 and
// 52/27 differ in the third decimal; nothing here may go through a double.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace palinword {

struct Rational {
    long long num = 0;
    long long den = 1;  // always > 0, gcd(|num|, den) == 1

    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(long long num, long long den);

inline int compare(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num) * b.den;
    __int128 r = static_cast<__int128>(b.num) * a.den;
    return l < r ? -1 : (l > r ? 1 : 0);
}
inline bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
inline bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
inline bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
inline bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

Rational add(const Rational& a, const Rational& b);
Rational sub(const Rational& a, const Rational& b);
Rational mul(const Rational& a, const Rational& b);
Rational div(const Rational& a, const Rational& b);

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

// beta-free (plus == false) forbids factor exponents >= value;
// beta+-free (plus == true) forbids exponents > value.
struct Threshold {
    Rational value;
    bool plus = false;

    // Whether a repetition of the given length and period violates this
    // threshold, i.e. length/period is forbidden.
    bool violated_by(long long length, long long period) const {
        __int128 l = static_cast<__int128>(length) * value.den;
        __int128 r = static_cast<__int128>(value.num) * period;
        return plus ? l > r : l >= r;
    }

    friend bool operator==(const Threshold&, const Threshold&) = default;
};

// "41/22+" (strict), "41/22", integer shorthand "2+" / "2".
Threshold parse_threshold(std::string_view text);
std::string to_string(const Threshold& t);

}  // namespace palinword
