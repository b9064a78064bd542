#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "garsia/algebraic.hpp"

namespace garsia {

// Ratio num/den of integer polynomials with coefficients bounded by L
// (membership in R_L); den != 0.
class RationalMap {
 public:
  RationalMap(IntPolynomial num, IntPolynomial den, Integer coeff_bound);
  // infers the bound as max coefficient magnitude of num and den
  RationalMap(IntPolynomial num, IntPolynomial den);

  static RationalMap constant(long v) {
    return RationalMap(IntPolynomial::constant(v), IntPolynomial::constant(1));
  }

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }
  const Integer& coeff_bound() const { return bound_; }

  // den(0) != 0, i.e. the map expands as a power series
  bool is_power_series() const { return den_.coeff(0) != 0; }

  Rational eval(const Rational& x) const;              // PoleError on den(x) == 0
  NumberFieldElement eval(const AlgebraicNumber& x) const;

  // first n coefficients of the power-series expansion of num/den
  std::vector<Rational> series_prefix(size_t n) const;

  // Taylor coefficients of num/den at x up to order K-1 (value, R', R''/2, ...),
  // exact over Q; PoleError on den(x) == 0.
  std::vector<Rational> taylor_at(const Rational& x, size_t K) const;
  std::vector<NumberFieldElement> taylor_at(const AlgebraicNumber& x, size_t K) const;

  bool operator==(const RationalMap& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  IntPolynomial num_, den_;
  Integer bound_;
};

Rational eval_poly(const IntPolynomial& p, const Rational& x);

// series coefficients of a(h)/b(h) up to order K-1; b must have nonzero
// constant term. Field is anything with +,-,*,/ and is-zero semantics.
std::vector<Rational> series_divide(const std::vector<Rational>& a, const std::vector<Rational>& b, size_t K);
std::vector<NumberFieldElement> series_divide(const std::vector<NumberFieldElement>& a,
                                              const std::vector<NumberFieldElement>& b, size_t K);

// coefficients of p(x+h) as a polynomial in h, truncated to order K-1
std::vector<Rational> shifted_coeffs(const IntPolynomial& p, const Rational& x, size_t K);
std::vector<NumberFieldElement> shifted_coeffs(const IntPolynomial& p, const AlgebraicNumber& x, size_t K);

}  // namespace garsia
