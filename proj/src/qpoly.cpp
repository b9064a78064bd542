#include "garsia/qpoly.hpp"

#include <cassert>

#include "garsia/errors.hpp"

namespace garsia {

Rational QPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return QPoly();
  std::vector<Rational> out(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return QPoly(std::move(out));
}

QPoly QPoly::operator-() const {
  std::vector<Rational> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return QPoly(std::move(out));
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return QPoly(std::move(out));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
  return QPoly(std::move(out));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return QPoly(std::move(out));
}

QPoly QPoly::operator*(const Rational& s) const {
  if (s == 0) return QPoly();
  std::vector<Rational> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
  return QPoly(std::move(out));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  assert(!b.is_zero());
  std::vector<Rational> rem(a.c_);
  long db = b.degree();
  long da = static_cast<long>(rem.size()) - 1;
  if (da < db) {
    q = QPoly();
    r = QPoly(std::move(rem));
    return;
  }
  std::vector<Rational> quot(da - db + 1, Rational(0));
  for (long i = da; i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / b.leading();
    quot[i - db] = f;
    for (long j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
  }
  q = QPoly(std::move(quot));
  r = QPoly(std::move(rem));
}

QPoly QPoly::mod(const QPoly& o) const {
  QPoly q, r;
  divmod(*this, o, q, r);
  return r;
}

IntPolynomial QPoly::to_int_primitive() const {
  if (is_zero()) return IntPolynomial();
  Integer den_lcm = 1;
  for (const auto& v : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<Integer> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    Rational scaled = c_[i] * Rational(den_lcm);
    out[i] = scaled.get_num();  // denominator is 1 after scaling
  }
  return IntPolynomial(std::move(out)).primitive_part();
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x.mod(y);
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x * (Rational(1) / x.leading());
}

long vanishing_order(const IntPolynomial& P, const IntPolynomial& min_poly) {
  if (P.is_zero()) throw std::invalid_argument("vanishing_order: P must be nonzero");
  QPoly p(P.primitive_part());
  QPoly m(min_poly);
  long order = 0;
  for (;;) {
    QPoly q, r;
    QPoly::divmod(p, m, q, r);
    if (!r.is_zero()) break;
    ++order;
    p = q;
    if (p.is_zero()) break;
  }
  return order;
}

}  // namespace garsia
