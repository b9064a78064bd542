#include "garsia/rational_map.hpp"

#include <algorithm>

#include "garsia/errors.hpp"

namespace garsia {

RationalMap::RationalMap(IntPolynomial num, IntPolynomial den, Integer coeff_bound)
    : num_(std::move(num)), den_(std::move(den)), bound_(std::move(coeff_bound)) {
  if (den_.is_zero()) throw std::invalid_argument("RationalMap: zero denominator");
  if (num_.height() > bound_ || den_.height() > bound_)
    throw std::invalid_argument("RationalMap: coefficients exceed the stated bound");
}

RationalMap::RationalMap(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RationalMap: zero denominator");
  bound_ = std::max(std::max(num_.height(), den_.height()), Integer(1));
}

Rational eval_poly(const IntPolynomial& p, const Rational& x) { return p.eval(x); }

Rational RationalMap::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw PoleError("pole at x = " + to_string(x));
  return num_.eval(x) / d;
}

NumberFieldElement RationalMap::eval(const AlgebraicNumber& x) const {
  NumberFieldElement d(x.field(), QPoly(den_));
  if (d.is_zero()) throw PoleError("pole at the algebraic point");
  NumberFieldElement n(x.field(), QPoly(num_));
  return n / d;
}

std::vector<Rational> RationalMap::series_prefix(size_t n) const {
  if (!is_power_series()) throw NotPowerSeriesError("denominator has zero constant term");
  std::vector<Rational> a(n, Rational(0)), b(n, Rational(0));
  for (size_t i = 0; i < n; ++i) {
    if (i < num_.size()) a[i] = Rational(num_[i]);
    if (i < den_.size()) b[i] = Rational(den_[i]);
  }
  return series_divide(a, b, n);
}

std::vector<Rational> series_divide(const std::vector<Rational>& a, const std::vector<Rational>& b, size_t K) {
  std::vector<Rational> c(K, Rational(0));
  Rational b0 = b.empty() ? Rational(0) : b[0];
  if (b0 == 0) throw NotPowerSeriesError("series division by zero constant term");
  for (size_t j = 0; j < K; ++j) {
    Rational acc = j < a.size() ? a[j] : Rational(0);
    for (size_t i = 1; i <= j && i < b.size(); ++i) acc -= b[i] * c[j - i];
    c[j] = acc / b0;
  }
  return c;
}

std::vector<NumberFieldElement> series_divide(const std::vector<NumberFieldElement>& a,
                                              const std::vector<NumberFieldElement>& b, size_t K) {
  if (b.empty() || b[0].is_zero()) throw NotPowerSeriesError("series division by zero constant term");
  NumberFieldElement inv_b0 = b[0].inverse();
  std::vector<NumberFieldElement> c;
  c.reserve(K);
  for (size_t j = 0; j < K; ++j) {
    NumberFieldElement acc =
        j < a.size() ? a[j] : NumberFieldElement::from_rational(b[0].field(), Rational(0));
    for (size_t i = 1; i <= j && i < b.size(); ++i) acc = acc - b[i] * c[j - i];
    c.push_back(acc * inv_b0);
  }
  return c;
}

std::vector<Rational> shifted_coeffs(const IntPolynomial& p, const Rational& x, size_t K) {
  // p(x+h) mod h^K via repeated Horner in h
  std::vector<Rational> out(K, Rational(0));
  for (size_t i = p.size(); i-- > 0;) {
    // out = out * (x + h) + c_i, truncated at order K
    for (size_t j = K; j-- > 0;) {
      Rational v = out[j] * x;
      if (j > 0) v += out[j - 1];
      out[j] = v;
    }
    out[0] += Rational(p[i]);
  }
  return out;
}

std::vector<NumberFieldElement> shifted_coeffs(const IntPolynomial& p, const AlgebraicNumber& x, size_t K) {
  auto fld = x.field();
  NumberFieldElement gen = x.as_element();
  NumberFieldElement zero = NumberFieldElement::from_rational(fld, Rational(0));
  std::vector<NumberFieldElement> out(K, zero);
  for (size_t i = p.size(); i-- > 0;) {
    for (size_t j = K; j-- > 0;) {
      NumberFieldElement v = out[j] * gen;
      if (j > 0) v = v + out[j - 1];
      out[j] = v;
    }
    out[0] = out[0] + NumberFieldElement::from_rational(fld, Rational(p[i]));
  }
  return out;
}

std::vector<Rational> RationalMap::taylor_at(const Rational& x, size_t K) const {
  if (den_.eval(x) == 0) throw PoleError("pole at x = " + to_string(x));
  return series_divide(shifted_coeffs(num_, x, K), shifted_coeffs(den_, x, K), K);
}

std::vector<NumberFieldElement> RationalMap::taylor_at(const AlgebraicNumber& x, size_t K) const {
  auto b = shifted_coeffs(den_, x, K);
  if (b[0].is_zero()) throw PoleError("pole at the algebraic point");
  return series_divide(shifted_coeffs(num_, x, K), b, K);
}

}  // namespace garsia
