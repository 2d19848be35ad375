#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

#include "abelian/errors.hpp"

namespace abelian {

// Arbitrary-precision rational, always canonical (reduced, denominator > 0).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DivisionByZeroError();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational rational_inverse(const Rational& q) {
    if (is_zero(q)) throw DivisionByZeroError();
    return 1 / q;
}

// Text form: "p/q", or just "p" for integers.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw ParameterError("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace abelian
