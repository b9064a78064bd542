#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "garsia/qpoly.hpp"

namespace garsia {

// Sturm sequence of a squarefree polynomial; used for exact real-root
// isolation and counting.
std::vector<QPoly> sturm_sequence(const QPoly& p);

// Number of distinct real roots of squarefree p in (lo, hi]; requires
// p(lo) != 0 and p(hi) != 0.
long count_real_roots(const std::vector<QPoly>& sturm, const Rational& lo, const Rational& hi);

// Isolating intervals (lo, hi] with rational endpoints for all real roots
// of a squarefree polynomial.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const IntPolynomial& p);

class NumberField;
using NumberFieldPtr = std::shared_ptr<const NumberField>;

// Q(eta) presented by the generator's primitive minimal polynomial.
// Minimal polynomials are trusted inputs; no factorization happens here.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  static NumberFieldPtr make(IntPolynomial min_poly);
  const IntPolynomial& min_poly() const { return m_; }
  const QPoly& min_poly_q() const { return mq_; }
  long degree() const { return m_.degree(); }

 private:
  explicit NumberField(IntPolynomial m) : m_(std::move(m)), mq_(m_) {}
  IntPolynomial m_;
  QPoly mq_;
};

// Element of Q(eta), dense representation of degree < deg(min_poly).
class NumberFieldElement {
 public:
  NumberFieldElement(NumberFieldPtr field, QPoly rep)
      : field_(std::move(field)), rep_(rep.mod(field_->min_poly_q())) {}

  static NumberFieldElement from_rational(NumberFieldPtr field, const Rational& q) {
    return NumberFieldElement(std::move(field), QPoly::constant(q));
  }
  static NumberFieldElement generator(NumberFieldPtr field) {
    return NumberFieldElement(std::move(field), QPoly({Rational(0), Rational(1)}));
  }

  const NumberFieldPtr& field() const { return field_; }
  const QPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  // true when the element lies in Q
  bool is_rational() const { return rep_.degree() <= 0; }
  Rational rational_value() const { return rep_.coeff(0); }

  NumberFieldElement operator+(const NumberFieldElement& o) const;
  NumberFieldElement operator-(const NumberFieldElement& o) const;
  NumberFieldElement operator*(const NumberFieldElement& o) const;
  NumberFieldElement operator*(const Rational& s) const;
  NumberFieldElement inverse() const;  // element must be nonzero
  NumberFieldElement operator/(const NumberFieldElement& o) const { return *this * o.inverse(); }
  bool operator==(const NumberFieldElement& o) const { return rep_ == o.rep_; }
  bool operator!=(const NumberFieldElement& o) const { return !(*this == o); }

  // rep coefficients padded to the field degree (canonical key form)
  std::vector<Rational> rep_padded() const;

 private:
  NumberFieldPtr field_;
  QPoly rep_;
};

// A real algebraic number: primitive (trusted-irreducible) minimal
// polynomial plus a Sturm-certified isolating interval [lo, hi] with
// sign(P(lo)) != sign(P(hi)) for irrational values, lo == hi for rationals.
class AlgebraicNumber {
 public:
  static AlgebraicNumber from_rational(const Rational& q);
  // Verifies that min_poly has exactly one real root in (lo, hi).
  static AlgebraicNumber real_root(IntPolynomial min_poly, const Rational& lo, const Rational& hi);

  const IntPolynomial& min_poly() const { return min_poly_; }
  long degree() const { return min_poly_.degree(); }
  bool is_rational() const { return degree() == 1; }
  Rational rational_value() const;  // degree-1 only

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  // Shrinks the isolating interval below the given width.
  void refine_below(const Rational& width);
  double to_double() const;

  NumberFieldPtr field() const { return field_; }
  NumberFieldElement as_element() const { return NumberFieldElement::generator(field_); }

  // Exact rational enclosure of rep(alpha) of width <= eps.
  std::pair<Rational, Rational> enclose(const QPoly& rep, const Rational& eps) const;
  // Sign of rep(alpha) where rep is already reduced mod min_poly (exact).
  int sign_of(const NumberFieldElement& e) const;
  // Enclosure of |e| with hi - lo <= eps.
  std::pair<Rational, Rational> enclose_abs(const NumberFieldElement& e, const Rational& eps) const;

  bool operator==(const AlgebraicNumber& o) const;

 private:
  AlgebraicNumber() = default;
  IntPolynomial min_poly_;
  NumberFieldPtr field_;
  Rational lo_, hi_;
};

// Interval Horner evaluation of p over [xlo, xhi]; exact rational bounds.
std::pair<Rational, Rational> interval_eval(const QPoly& p, const Rational& xlo, const Rational& xhi);

}  // namespace garsia
