#include "garsia/derivs.hpp"

#include <cmath>
#include <set>

#include "garsia/qpoly.hpp"
#include "garsia/selfsim.hpp"

namespace garsia {

void DerivSystem::validate() const {
  if (K < 1) throw std::invalid_argument("K >= 1 required");
  if (forms.size() < 2 || forms.size() != weights.size())
    throw std::invalid_argument("bad forms/weights");
  std::set<std::pair<long, long>> seen(forms.begin(), forms.end());
  if (seen.size() != forms.size()) throw std::invalid_argument("forms must be pairwise distinct");
  using PK = Parameter::Kind;
  if (lambda.kind() != PK::Rational && lambda.kind() != PK::Algebraic)
    throw std::invalid_argument("lambda must be exact (rational or algebraic)");
  if (lambda.kind() == PK::Rational) {
    if (R.den().eval(lambda.rat()) == 0) throw PoleError("lambda is a pole of R");
  } else {
    NumberFieldElement d(lambda.alg().field(), QPoly(R.den()));
    if (d.is_zero()) throw PoleError("lambda is a pole of R");
  }
}

DerivSystem DerivSystem::standard3(RationalMap R, Parameter lambda, size_t K) {
  DerivSystem s;
  s.R = std::move(R);
  s.lambda = std::move(lambda);
  s.K = K;
  s.forms = {{0, 0}, {1, 0}, {0, 1}};
  s.weights = {Rational(1, 3), Rational(1, 3), Rational(1, 3)};
  return s;
}

DerivMatrix theta(const Rational& lambda, size_t K) {
  DerivMatrix m;
  m.K = K;
  m.entries.assign(K, std::vector<Rational>(K, Rational(0)));
  for (size_t i = 0; i < K; ++i) {
    m.entries[i][i] = lambda;
    if (i > 0) m.entries[i][i - 1] = Rational(static_cast<long>(i));
  }
  return m;
}

namespace {

std::vector<Integer> factorials(size_t K) {
  std::vector<Integer> f(K, Integer(1));
  for (size_t i = 1; i < K; ++i) f[i] = f[i - 1] * Integer(static_cast<long>(i));
  return f;
}

// Taylor coefficients of (a + b R(lambda+h)) (lambda+h)^k, truncated at h^K;
// multiplying entry a by a! turns coefficients into derivatives.
template <class F>
std::vector<F> digit_taylor(const std::vector<F>& r_taylor, const std::vector<F>& xk_taylor, long a,
                            long b, const F& one, const F& zero) {
  size_t K = r_taylor.size();
  std::vector<F> lin(K, zero);
  lin[0] = one * Rational(a) + r_taylor[0] * Rational(b);
  for (size_t i = 1; i < K; ++i) lin[i] = r_taylor[i] * Rational(b);
  std::vector<F> out(K, zero);
  for (size_t i = 0; i < K; ++i)
    for (size_t j = 0; i + j < K; ++j) out[i + j] = out[i + j] + lin[i] * xk_taylor[j];
  return out;
}

// (lambda+h)^k truncated at h^K for k = 0..n-1
template <class F>
std::vector<std::vector<F>> power_taylors(const F& lambda, size_t n, size_t K, const F& one, const F& zero) {
  std::vector<std::vector<F>> out;
  out.reserve(n);
  std::vector<F> cur(K, zero);
  cur[0] = one;
  for (size_t k = 0; k < n; ++k) {
    out.push_back(cur);
    std::vector<F> next(K, zero);
    // multiply by (lambda + h)
    for (size_t i = 0; i < K; ++i) {
      next[i] = next[i] + cur[i] * lambda;
      if (i + 1 < K) next[i + 1] = next[i + 1] + cur[i];
    }
    cur = std::move(next);
  }
  return out;
}

template <class F>
F dot_rational(const F& x, const Rational& q) {
  return x * q;
}

}  // namespace

std::vector<Rational> translation_vector(const DerivSystem& sys, size_t j) {
  sys.validate();
  if (sys.lambda.kind() != Parameter::Kind::Rational)
    throw std::invalid_argument("translation_vector: rational lambda expected (use the field variant)");
  auto rt = sys.R.taylor_at(sys.lambda.rat(), sys.K);
  auto fact = factorials(sys.K);
  std::vector<Rational> v(sys.K, Rational(0));
  long a = sys.forms[j].first, b = sys.forms[j].second;
  v[0] = Rational(a) + Rational(b) * rt[0];
  for (size_t i = 1; i < sys.K; ++i) v[i] = Rational(b) * rt[i] * Rational(fact[i]);
  return v;
}

std::vector<Rational> b_state(const DerivSystem& sys, const Digits& digits) {
  sys.validate();
  if (sys.lambda.kind() != Parameter::Kind::Rational)
    throw std::invalid_argument("b_state: rational lambda expected");
  const Rational lam = sys.lambda.rat();
  const size_t K = sys.K;

  // route 1: affine recursion B <- Theta B + v_{digit}, digits consumed
  // from the last position towards the first
  auto th = theta(lam, K);
  std::vector<Rational> B(K, Rational(0));
  for (size_t idx = digits.size(); idx-- > 0;) {
    std::vector<Rational> nb(K, Rational(0));
    for (size_t r = 0; r < K; ++r)
      for (size_t c = 0; c < K; ++c) nb[r] += th.entries[r][c] * B[c];
    auto v = translation_vector(sys, digits[idx]);
    for (size_t r = 0; r < K; ++r) nb[r] += v[r];
    B = std::move(nb);
  }

  // route 2: direct differentiation of sum T_{w_k}(1,R) X^k at lambda
  auto rt = sys.R.taylor_at(lam, K);
  auto xk = power_taylors<Rational>(lam, std::max<size_t>(digits.size(), 1), K, Rational(1), Rational(0));
  std::vector<Rational> taylor(K, Rational(0));
  for (size_t k = 0; k < digits.size(); ++k) {
    auto t = digit_taylor<Rational>(rt, xk[k], sys.forms[digits[k]].first, sys.forms[digits[k]].second,
                                    Rational(1), Rational(0));
    for (size_t i = 0; i < K; ++i) taylor[i] += t[i];
  }
  auto fact = factorials(K);
  std::vector<Rational> direct(K);
  for (size_t i = 0; i < K; ++i) direct[i] = taylor[i] * Rational(fact[i]);

  if (direct != B) throw std::logic_error("recursion and direct differentiation disagree");
  return B;
}

LevelSystem deriv_level_system(const DerivSystem& sys, size_t n) {
  sys.validate();
  LevelSystem out;
  out.num_digits = sys.forms.size();
  out.weights = sys.weights;
  const size_t K = sys.K;
  auto fact = factorials(K);
  auto forms = sys.forms;

  if (sys.lambda.kind() == Parameter::Kind::Rational) {
    auto rt = sys.R.taylor_at(sys.lambda.rat(), K);
    auto xk = power_taylors<Rational>(sys.lambda.rat(), std::max<size_t>(n, 1), K, Rational(1), Rational(0));
    out.key_dim = K;
    out.increment = [rt, xk, fact, forms, K](size_t j, size_t k) {
      auto t = digit_taylor<Rational>(rt, xk[k], forms[j].first, forms[j].second, Rational(1), Rational(0));
      QVec v(K, Rational(0));
      for (size_t i = 0; i < K; ++i) v[i] = t[i] * Rational(fact[i]);
      return v;
    };
    return out;
  }

  // algebraic lambda: work in Q(eta)
  const AlgebraicNumber& eta = sys.lambda.alg();
  auto fld = eta.field();
  size_t d = static_cast<size_t>(fld->degree());
  NumberFieldElement one = NumberFieldElement::from_rational(fld, Rational(1));
  NumberFieldElement zero = NumberFieldElement::from_rational(fld, Rational(0));
  auto rt = sys.R.taylor_at(eta, K);
  auto xk = power_taylors<NumberFieldElement>(eta.as_element(), std::max<size_t>(n, 1), K, one, zero);
  out.key_dim = K * d;
  out.increment = [rt, xk, fact, forms, K, d, one, zero](size_t j, size_t k) {
    auto t = digit_taylor<NumberFieldElement>(rt, xk[k], forms[j].first, forms[j].second, one, zero);
    QVec v(K * d, Rational(0));
    for (size_t i = 0; i < K; ++i) {
      auto rep = (t[i] * Rational(fact[i])).rep_padded();
      for (size_t c = 0; c < d; ++c) v[i * d + c] = rep[c];
    }
    return v;
  };
  return out;
}

double deriv_entropy(const DerivSystem& sys, size_t n, const EnumOptions& opts) {
  auto lvl = deriv_level_system(sys, n);
  std::vector<size_t> positions(n);
  for (size_t i = 0; i < n; ++i) positions[i] = i;
  return shannon_entropy(fold_distribution(lvl, positions, opts));
}

std::vector<double> deriv_entropy_sequence(const DerivSystem& sys, size_t n, const EnumOptions& opts) {
  return fold_entropy_sequence(deriv_level_system(sys, n), n, opts);
}

double deriv_entropy_rate_upper(const DerivSystem& sys, size_t n, const EnumOptions& opts) {
  auto hs = deriv_entropy_sequence(sys, n, opts);
  double best = hs[0];
  for (size_t k = 1; k < hs.size(); ++k) best = std::min(best, hs[k] / static_cast<double>(k + 1));
  return best;
}

bool digits_collide_by_order(const DerivSystem& sys, const Digits& a, const Digits& b) {
  sys.validate();
  std::vector<Integer> c1(a.size(), Integer(0)), c2(a.size(), Integer(0));
  for (size_t k = 0; k < a.size(); ++k) {
    c1[k] = Integer(sys.forms[a[k]].first - sys.forms[b[k]].first);
    c2[k] = Integer(sys.forms[a[k]].second - sys.forms[b[k]].second);
  }
  IntPolynomial dp1{std::move(c1)}, dp2{std::move(c2)};
  IntPolynomial w = dp1 * sys.R.den() + dp2 * sys.R.num();
  if (w.is_zero()) return true;
  IntPolynomial minpoly = sys.lambda.kind() == Parameter::Kind::Rational
                              ? AlgebraicNumber::from_rational(sys.lambda.rat()).min_poly()
                              : sys.lambda.alg().min_poly();
  return vanishing_order(w, minpoly) >= static_cast<long>(sys.K);
}

double deriv_dim_upper_report(const DerivSystem& sys, size_t n, const EnumOptions& opts) {
  return deriv_entropy_rate_upper(sys, n, opts) / log_inv_lambda(sys.lambda);
}

double multiplicity_order_threshold(double eps, long N, const Integer& l) {
  double l2 = l.get_d() * l.get_d();
  double c_eps = std::log((1.0 - eps / 2) / (1.0 - eps));
  return std::log(8.0 * l2 * static_cast<double>(N) / (eps * eps)) / c_eps + 1.0;
}

}  // namespace garsia
