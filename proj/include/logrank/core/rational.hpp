#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace logrank {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// GCC/Clang extension types, marked so -Wpedantic accepts them.
__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

inline Rational make_rational(std::int64_t num, std::int64_t den) {
    return Rational(BigInt(num), BigInt(den));
}

inline std::string to_string(const Rational& q) {
    const BigInt& num = boost::multiprecision::numerator(q);
    const BigInt& den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

// Smallest integer c with c >= q * scale. Used to turn "|sum| / scale >= q"
// into the exact integer test "|sum| >= c".
inline std::int64_t ceil_times(const Rational& q, std::int64_t scale) {
    const Rational v = q * Rational(scale);
    BigInt num = boost::multiprecision::numerator(v);
    const BigInt den = boost::multiprecision::denominator(v);
    BigInt quot = num / den;
    if (quot * den < num) quot += 1;
    if (quot > BigInt(INT64_MAX)) return INT64_MAX;
    if (quot < BigInt(INT64_MIN)) return INT64_MIN;
    return quot.convert_to<std::int64_t>();
}

inline Rational rational_abs(const Rational& q) {
    return q < 0 ? Rational(-q) : q;
}

// Parses "p", "p/q" or a finite decimal such as "0.25".
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    BigInt den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    if (digits.empty() || digits == "-") digits += "0";
    return Rational(BigInt(digits), den);
}

}  // namespace logrank

namespace logrank {

inline double log2_of(const BigInt& x) {
    if (x <= 0) return -std::numeric_limits<double>::infinity();
    const auto top = boost::multiprecision::msb(x);
    if (top < 900) return std::log2(x.convert_to<double>());
    const BigInt head = x >> (top - 60);
    return std::log2(head.convert_to<double>()) + static_cast<double>(top - 60);
}

// log2 of a positive rational without overflowing a double.
inline double log2_of(const Rational& q) {
    return log2_of(BigInt(boost::multiprecision::numerator(q))) -
           log2_of(BigInt(boost::multiprecision::denominator(q)));
}

}  // namespace logrank
