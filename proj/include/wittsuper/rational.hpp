#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "wittsuper/errors.hpp"

namespace wittsuper {

// Exact rational coefficients everywhere; no floating point in the library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Integer floor_int(const Rational& r) {
    Integer q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline Integer ceil_int(const Rational& r) {
    Integer q = numerator(r) / denominator(r);
    if (numerator(r) > 0 && q * denominator(r) != numerator(r)) ++q;
    return q;
}

// Serialized form is "p" or "p/q" with q > 0 and gcd(p,q) = 1 (cpp_rational
// keeps that normal form), so round-trips are bit-exact.
inline std::string rat_to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) fail(ErrorKind::BadInput, "empty rational literal");
    try {
        return Rational(s);
    } catch (const std::exception&) {
        fail(ErrorKind::BadInput, "bad rational literal '" + s + "'");
    }
}

inline Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    Integer num = 1;
    for (long i = 0; i < k; ++i) num *= Integer(n - i);
    Integer den = 1;
    for (long i = 1; i <= k; ++i) den *= Integer(i);
    return Rational(num, den);
}

}  // namespace wittsuper
