// Exact rational arithmetic. Floor brackets at k ~ n^2 must not suffer
// rounding, so everything downstream of the order engine works over
// arbitrary-precision rationals.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace braidwrench {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& x) { return numerator(x); }
inline BigInt rat_den(const Rat& x) { return denominator(x); }

// Largest integer <= x.
inline BigInt rat_floor(const Rat& x) {
    BigInt q = numerator(x) / denominator(x);            // truncates toward zero
    if (numerator(x) < 0 && q * denominator(x) != numerator(x)) --q;
    return q;
}

// Smallest integer >= x.
inline BigInt rat_ceil(const Rat& x) { return -rat_floor(-x); }

// "p/q", or just "p" when q = 1.
inline std::string rat_str(const Rat& x) {
    std::string s = rat_num(x).str();
    if (rat_den(x) != 1) s += "/" + rat_den(x).str();
    return s;
}

}  // namespace braidwrench
