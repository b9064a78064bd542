#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "garsia/rational.hpp"

namespace garsia {

// Integer-coefficient polynomial, coefficients ascending by degree.
// The zero polynomial is the empty coefficient sequence; otherwise the
// leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(Integer v) {
    IntPolynomial p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
  }
  // X^k
  static IntPolynomial monomial(size_t k, Integer coeff = 1);

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  size_t size() const { return c_.size(); }

  const Integer& operator[](size_t i) const { return c_[i]; }
  Integer coeff(size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& leading() const { return c_.back(); }

  // max |c_i|; 0 for the zero polynomial
  Integer height() const;
  // sum of |c_i| (the length l1(P))
  Integer length_l1() const;
  // gcd of coefficients (positive), 0 for the zero polynomial
  Integer content() const;
  IntPolynomial primitive_part() const;

  IntPolynomial derivative() const;

  Rational eval(const Rational& x) const;
  double eval_double(double x) const;

  // number of trailing zero coefficients (valuation at X); -1 for zero poly
  long valuation() const;

  IntPolynomial operator-() const;
  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const Integer& s) const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }
  bool operator<(const IntPolynomial& o) const;

  // membership in P_l^(n): degree < n, coefficients bounded by l
  bool in_P(const Integer& l, long n) const;

  std::string str(const std::string& var = "X") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

IntPolynomial pow(const IntPolynomial& p, unsigned e);

}  // namespace garsia
