#pragma once

#include <vector>

#include "garsia/bigfloat.hpp"
#include "garsia/int_polynomial.hpp"

namespace garsia {

// One certified complex root: the closed disk around (center_re, center_im)
// of the given radius contains exactly one root of the square-free part,
// of the stated multiplicity in the source polynomial. Centers and radii
// are exact rationals; the modulus enclosure is precomputed.
struct CertifiedRoot {
  Rational center_re, center_im;
  Rational radius;
  int multiplicity = 1;
  bool is_real = false;
  Rational abs_lo, abs_hi;  // enclosure of |root|

  double re() const { return to_double(center_re); }
  double im() const { return to_double(center_im); }
};

struct RootSet {
  IntPolynomial source;
  std::vector<CertifiedRoot> roots;  // disks pairwise disjoint across distinct roots
  long total_multiplicity = 0;       // equals deg(source)
};

// Square-free decomposition over Q: returns (factor, multiplicity) pairs
// with primitive integer factors; product of factor^multiplicity equals
// source up to a rational constant.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

// All complex roots with certified radii <= radius_goal. Working precision
// doubles until every disk is certified or max_prec is hit
// (PrecisionExhausted).
RootSet find_roots(const IntPolynomial& p, const Rational& radius_goal,
                   mpfr_prec_t max_prec = 4096);

// Convenience: radius goal 2^-64.
RootSet find_roots(const IntPolynomial& p);

// Certified lower/upper bounds of the distance between two certified roots.
Rational root_distance_lo(const CertifiedRoot& a, const CertifiedRoot& b, mpfr_prec_t prec = 256);
Rational root_distance_hi(const CertifiedRoot& a, const CertifiedRoot& b, mpfr_prec_t prec = 256);

}  // namespace garsia
