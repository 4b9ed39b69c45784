#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "altsum/errors.hpp"

namespace altsum {

// Exact arithmetic backends. cpp_rational keeps values reduced to lowest
// terms with a positive denominator, which the coefficient identities rely on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rational>;

/// num/den as a reduced rational; den may be negative or zero (zero throws).
inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw EvalError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline double to_double(const Rational& r) { return static_cast<double>(r); }

inline std::vector<double> to_double(const RatVec& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(to_double(r));
    return out;
}

/// Canonical "num/den" form ("num" alone when den == 1).
inline std::string rat_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

/// Parses "num", "num/den", or a decimal like "2.5" into an exact rational.
inline Rational rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return make_rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        Int num(digits);
        Int den = 1;
        for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        return make_rational(num, den);
    }
    return Rational(Int(s));
}

inline Rational rat_pow(const Rational& base, long long e) {
    if (e < 0) {
        if (base == 0) throw EvalError("0 raised to a negative power");
        return Rational(1) / rat_pow(base, -e);
    }
    Rational acc(1), b = base;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline Int int_pow(Int base, unsigned e) {
    Int acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace altsum
