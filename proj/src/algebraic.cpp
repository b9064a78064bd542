#include "garsia/algebraic.hpp"

#include <algorithm>
#include <cassert>

#include "garsia/errors.hpp"

namespace garsia {

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  seq.push_back(p.derivative());
  while (!seq.back().is_zero()) {
    QPoly q, r;
    QPoly::divmod(seq[seq.size() - 2], seq.back(), q, r);
    seq.push_back(-r);
  }
  seq.pop_back();
  return seq;
}

namespace {

long sign_variations_at(const std::vector<QPoly>& seq, const Rational& x) {
  long var = 0;
  int prev = 0;
  for (const auto& p : seq) {
    Rational v = p.eval(x);
    int s = sgn(v);
    if (s != 0) {
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
  }
  return var;
}

}  // namespace

long count_real_roots(const std::vector<QPoly>& sturm, const Rational& lo, const Rational& hi) {
  return sign_variations_at(sturm, lo) - sign_variations_at(sturm, hi);
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const IntPolynomial& p) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() <= 0) return out;
  QPoly q(p);
  auto seq = sturm_sequence(q);
  // Cauchy bound on root magnitudes
  Rational bound = 1 + Rational(p.height()) / Rational(abs(p.leading()));
  // nudge endpoints off roots
  Rational lo = -bound, hi = bound;
  while (q.eval(lo) == 0) lo -= 1;
  while (q.eval(hi) == 0) hi += 1;

  struct Seg {
    Rational lo, hi;
    long count;
  };
  std::vector<Seg> stack{{lo, hi, count_real_roots(seq, lo, hi)}};
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1) {
      out.emplace_back(s.lo, s.hi);
      continue;
    }
    Rational mid = (s.lo + s.hi) / 2;
    while (q.eval(mid) == 0) mid = (s.lo + mid) / 2;  // keep endpoints off roots
    long left = count_real_roots(seq, s.lo, mid);
    stack.push_back({mid, s.hi, s.count - left});
    stack.push_back({s.lo, mid, left});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

NumberFieldPtr NumberField::make(IntPolynomial min_poly) {
  if (min_poly.degree() < 1) throw std::invalid_argument("number field needs degree >= 1 generator");
  return NumberFieldPtr(new NumberField(std::move(min_poly)));
}

NumberFieldElement NumberFieldElement::operator+(const NumberFieldElement& o) const {
  return NumberFieldElement(field_, rep_ + o.rep_);
}

NumberFieldElement NumberFieldElement::operator-(const NumberFieldElement& o) const {
  return NumberFieldElement(field_, rep_ - o.rep_);
}

NumberFieldElement NumberFieldElement::operator*(const NumberFieldElement& o) const {
  return NumberFieldElement(field_, (rep_ * o.rep_).mod(field_->min_poly_q()));
}

NumberFieldElement NumberFieldElement::operator*(const Rational& s) const {
  return NumberFieldElement(field_, rep_ * s);
}

NumberFieldElement NumberFieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  // extended Euclid: u*rep + v*m = gcd = const (m irreducible)
  QPoly r0 = field_->min_poly_q(), r1 = rep_;
  QPoly u0, u1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    QPoly q, r;
    QPoly::divmod(r0, r1, q, r);
    QPoly u = u0 - q * u1;
    r0 = r1;
    r1 = r;
    u0 = u1;
    u1 = u;
  }
  if (r0.degree() != 0)
    throw std::domain_error("field element not invertible; minimal polynomial not irreducible?");
  return NumberFieldElement(field_, u0 * (Rational(1) / r0.coeff(0)));
}

std::vector<Rational> NumberFieldElement::rep_padded() const {
  std::vector<Rational> out(static_cast<size_t>(field_->degree()), Rational(0));
  for (size_t i = 0; i < rep_.size(); ++i) out[i] = rep_[i];
  return out;
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& q) {
  AlgebraicNumber a;
  a.min_poly_ = IntPolynomial({-q.get_num(), q.get_den()}).primitive_part();
  a.field_ = NumberField::make(a.min_poly_);
  a.lo_ = a.hi_ = q;
  return a;
}

AlgebraicNumber AlgebraicNumber::real_root(IntPolynomial min_poly, const Rational& lo, const Rational& hi) {
  min_poly = min_poly.primitive_part();
  if (min_poly.degree() < 1) throw std::invalid_argument("minimal polynomial must be nonconstant");
  if (min_poly.degree() == 1) {
    Rational root = -Rational(min_poly[0]) / Rational(min_poly[1]);
    if (root < lo || root > hi) throw std::invalid_argument("no root of the degree-1 polynomial in the interval");
    return from_rational(root);
  }
  QPoly q(min_poly);
  Rational a = lo, b = hi;
  // move endpoints off roots (only relevant if lo/hi hit the root of another factor; min_poly is irreducible so its own roots are irrational)
  auto seq = sturm_sequence(q);
  if (q.eval(a) == 0 || q.eval(b) == 0)
    throw std::invalid_argument("isolating interval endpoint is a root");
  if (count_real_roots(seq, a, b) != 1)
    throw std::invalid_argument("interval does not isolate exactly one root");
  // shrink to a sign-change bracket
  while (sgn(q.eval(a)) == sgn(q.eval(b))) {
    Rational mid = (a + b) / 2;
    if (q.eval(mid) == 0) throw std::invalid_argument("rational root of an irreducible polynomial of degree > 1");
    if (count_real_roots(seq, a, mid) == 1)
      b = mid;
    else
      a = mid;
  }
  AlgebraicNumber out;
  out.min_poly_ = std::move(min_poly);
  out.field_ = NumberField::make(out.min_poly_);
  out.lo_ = a;
  out.hi_ = b;
  return out;
}

Rational AlgebraicNumber::rational_value() const {
  assert(is_rational());
  return lo_;
}

void AlgebraicNumber::refine_below(const Rational& width) {
  if (lo_ == hi_) return;
  QPoly q(min_poly_);
  int slo = sgn(q.eval(lo_));
  while (hi_ - lo_ >= width) {
    Rational mid = (lo_ + hi_) / 2;
    int sm = sgn(q.eval(mid));
    if (sm == 0) {  // cannot happen for irreducible degree > 1
      lo_ = hi_ = mid;
      return;
    }
    if (sm == slo)
      lo_ = mid;
    else
      hi_ = mid;
  }
}

double AlgebraicNumber::to_double() const {
  AlgebraicNumber copy = *this;
  copy.refine_below(Rational(1, 1000000) / Rational(Integer(1) << 40));
  return Rational((copy.lo_ + copy.hi_) / 2).get_d();
}

std::pair<Rational, Rational> interval_eval(const QPoly& p, const Rational& xlo, const Rational& xhi) {
  Rational lo = 0, hi = 0;
  for (size_t i = p.size(); i-- > 0;) {
    // [lo,hi] * [xlo,xhi] + c
    Rational a = lo * xlo, b = lo * xhi, c = hi * xlo, d = hi * xhi;
    Rational nlo = std::min(std::min(a, b), std::min(c, d));
    Rational nhi = std::max(std::max(a, b), std::max(c, d));
    lo = nlo + p[i];
    hi = nhi + p[i];
  }
  return {lo, hi};
}

std::pair<Rational, Rational> AlgebraicNumber::enclose(const QPoly& rep, const Rational& eps) const {
  if (rep.is_zero()) return {Rational(0), Rational(0)};
  AlgebraicNumber copy = *this;
  for (int iter = 0;; ++iter) {
    auto [lo, hi] = interval_eval(rep, copy.lo_, copy.hi_);
    if (hi - lo <= eps) return {lo, hi};
    if (iter > 100000) throw PrecisionExhausted("interval refinement did not converge");
    Rational w = copy.hi_ - copy.lo_;
    copy.refine_below(w / 2);
  }
}

int AlgebraicNumber::sign_of(const NumberFieldElement& e) const {
  if (e.is_zero()) return 0;
  if (e.is_rational()) return sgn(e.rational_value());
  AlgebraicNumber copy = *this;
  for (int iter = 0;; ++iter) {
    auto [lo, hi] = interval_eval(e.rep(), copy.lo_, copy.hi_);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (iter > 100000) throw PrecisionExhausted("sign refinement did not converge");
    Rational w = copy.hi_ - copy.lo_;
    copy.refine_below(w / 2);
  }
}

std::pair<Rational, Rational> AlgebraicNumber::enclose_abs(const NumberFieldElement& e, const Rational& eps) const {
  auto [lo, hi] = enclose(e.rep(), eps);
  if (lo >= 0) return {lo, hi};
  if (hi <= 0) return {-hi, -lo};
  Rational neg = -lo;
  return {Rational(0), std::max(neg, hi)};
}

bool AlgebraicNumber::operator==(const AlgebraicNumber& o) const {
  if (min_poly_ != o.min_poly_) return false;
  // same minimal polynomial: equal iff the isolating intervals overlap
  return !(hi_ < o.lo_ || o.hi_ < lo_);
}

}  // namespace garsia
