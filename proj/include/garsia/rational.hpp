#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "garsia/errors.hpp"

namespace garsia {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p/q", plain integers and decimal literals ("0.35" -> 7/20) exactly.
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& q);

inline Rational rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// floor(q) as an integer.
Integer floor_int(const Rational& q);

// q - floor(q), in [0,1).
Rational frac_part(const Rational& q);

// Exact integer power, e >= 0.
Rational pow_rational(const Rational& base, unsigned long e);

// log of a positive rational, safe for values far outside double range.
double log_rational(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace garsia
