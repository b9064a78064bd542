#pragma once

#include <vector>

#include "garsia/int_polynomial.hpp"

namespace garsia {

// Polynomial over Q, ascending coefficients, trailing zeros trimmed.
// Internal workhorse for number-field reduction, exact division and
// Taylor expansion; not part of the serialized surface.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit QPoly(const IntPolynomial& p) {
    c_.reserve(p.size());
    for (const auto& v : p.coeffs()) c_.emplace_back(v);
    trim();
  }
  static QPoly constant(Rational v) {
    QPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  size_t size() const { return c_.size(); }
  const Rational& operator[](size_t i) const { return c_[i]; }
  Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  QPoly derivative() const;

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rational& s) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  // Euclidean division; o must be nonzero.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
  QPoly mod(const QPoly& o) const;

  // Clears denominators and content; result primitive with positive leading coeff.
  IntPolynomial to_int_primitive() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Monic gcd over Q.
QPoly gcd(const QPoly& a, const QPoly& b);

// Multiplicity of eta (given by its primitive irreducible minimal polynomial)
// as a root of P != 0: largest k with min_poly^k | P.
long vanishing_order(const IntPolynomial& P, const IntPolynomial& min_poly);

}  // namespace garsia
