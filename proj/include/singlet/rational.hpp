#ifndef SINGLET_RATIONAL_HPP
#define SINGLET_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "singlet/errors.hpp"

namespace singlet {

/* Arbitrary-precision exact arithmetic.  Every coefficient in the library is
   a Rational (or a pair of them, see exact_scalar.hpp); no floating point
   appears anywhere. */
using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline BigInt factorial(long n) {
    BigInt r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

/* binomial(n, k) for integer n of either sign, k >= 0. */
inline Rational binomial(const Rational& n, long k) {
    if (k < 0) return 0;
    Rational r = 1;
    for (long j = 0; j < k; ++j) r *= (n - j) / Rational(j + 1);
    return r;
}

inline bool is_integer(const Rational& q) { return den(q) == 1; }

inline long to_long(const Rational& q) {
    if (!is_integer(q)) throw IndexOutOfRange("to_long: not an integer: " + q.str());
    return static_cast<long>(num(q));
}

/* floor/ceil toward the integers; cpp_rational keeps den > 0. */
inline BigInt rational_floor(const Rational& q) {
    BigInt n = num(q), d = den(q);
    if (n >= 0) return n / d;
    return -((-n + d - 1) / d);
}

inline BigInt rational_ceil(const Rational& q) { return -rational_floor(-q); }

/* Canonical wire form "num/den", denominator always present and positive. */
inline std::string fraction_string(const Rational& q) {
    return num(q).str() + "/" + den(q).str();
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) throw IndexOutOfRange("rational_from_string: zero denominator in " + s);
    return Rational(n) / Rational(d);
}

} // namespace singlet

#endif
