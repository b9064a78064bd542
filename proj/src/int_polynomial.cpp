#include "garsia/int_polynomial.hpp"

#include <sstream>

namespace garsia {

IntPolynomial IntPolynomial::monomial(size_t k, Integer coeff) {
  IntPolynomial p;
  if (coeff != 0) {
    p.c_.assign(k + 1, Integer(0));
    p.c_[k] = std::move(coeff);
  }
  return p;
}

Integer IntPolynomial::height() const {
  Integer h = 0;
  for (const auto& v : c_) {
    Integer a = abs(v);
    if (a > h) h = a;
  }
  return h;
}

Integer IntPolynomial::length_l1() const {
  Integer s = 0;
  for (const auto& v : c_) s += abs(v);
  return s;
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  Integer g = content();
  std::vector<Integer> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
  // normalize sign so the leading coefficient is positive
  if (out.back() < 0)
    for (auto& v : out) v = -v;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return IntPolynomial();
  std::vector<Integer> out(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Integer(static_cast<long>(i));
  return IntPolynomial(std::move(out));
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Rational(c_[i]);
  return acc;
}

double IntPolynomial::eval_double(double x) const {
  double acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].get_d();
  return acc;
}

long IntPolynomial::valuation() const {
  if (is_zero()) return -1;
  long v = 0;
  while (c_[v] == 0) ++v;
  return v;
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Integer> out(std::max(c_.size(), o.c_.size()), Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Integer> out(std::max(c_.size(), o.c_.size()), Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<Integer> out(c_.size() + o.c_.size() - 1, Integer(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const Integer& s) const {
  if (s == 0) return IntPolynomial();
  std::vector<Integer> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
  return IntPolynomial(std::move(out));
}

bool IntPolynomial::operator<(const IntPolynomial& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t i = c_.size(); i-- > 0;) {
    int c = cmp(c_[i], o.c_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

bool IntPolynomial::in_P(const Integer& l, long n) const {
  if (degree() >= n) return false;
  return height() <= l;
}

std::string IntPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    Integer a = abs(c_[i]);
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) {
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

IntPolynomial pow(const IntPolynomial& p, unsigned e) {
  IntPolynomial acc = IntPolynomial::constant(1);
  for (unsigned i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

}  // namespace garsia
