#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "qhpp/errors.hpp"

namespace qhpp {

// Exact scalars. Everything in this library computes over Z and Q; there is
// no floating point anywhere. Rationals are kept in lowest terms with a
// positive denominator by the backend.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline std::string to_string(const Integer& n) { return n.str(); }

inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

// Accepts "n" or "n/d"; throws ParseError on anything else.
inline Rational parse_rational(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer n(text.substr(0, slash));
        Integer d(text.substr(slash + 1));
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        return Rational(n, d);
    } catch (const std::exception&) {
        throw ParseError("not a rational literal: '" + text + "'");
    }
}

inline Integer floor_sqrt(const Integer& n) {
    if (n < 0) throw std::invalid_argument("floor_sqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

// Total on all integers: negative inputs are never squares.
inline bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    Integer r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Inverse of a modulo m for gcd(a, m) = 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    a %= m;
    if (a < 0) a += m;
    std::int64_t t = 0, new_t = 1, r = m, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    if (t < 0) t += m;
    return t;
}

} // namespace qhpp
