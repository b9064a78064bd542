#include "garsia/dioph.hpp"

#include <algorithm>
#include <cmath>

#include "garsia/errors.hpp"

namespace garsia {

namespace {

Rational pow_rational_int(const Rational& base, long e) {
  if (e >= 0) return pow_rational(base, static_cast<unsigned long>(e));
  return 1 / pow_rational(base, static_cast<unsigned long>(-e));
}

Integer int_pow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

MahlerReport mahler_measure(const IntPolynomial& P, const Rational& radius_goal) {
  if (P.is_zero()) throw std::invalid_argument("mahler_measure of zero polynomial");
  MahlerReport rep;
  rep.l1 = P.length_l1();
  Rational lead(abs(P.leading()));
  if (P.degree() == 0) {
    rep.lo = rep.hi = lead;
    rep.value = to_double(lead);
    rep.le_l1 = rep.hi <= Rational(rep.l1);
    return rep;
  }
  auto rs = find_roots(P, radius_goal);
  Rational lo = lead, hi = lead;
  for (const auto& r : rs.roots) {
    Rational flo = std::max(Rational(1), r.abs_lo);
    Rational fhi = std::max(Rational(1), r.abs_hi);
    for (int i = 0; i < r.multiplicity; ++i) {
      lo *= flo;
      hi *= fhi;
    }
  }
  rep.lo = lo;
  rep.hi = hi;
  rep.value = to_double((lo + hi) / 2);
  rep.le_l1 = hi <= Rational(rep.l1);
  return rep;
}

std::pair<Rational, Rational> mahler_enclosure(const AlgebraicNumber& a) {
  auto rep = mahler_measure(a.min_poly());
  return {rep.lo, rep.hi};
}

Rational root_separation_bound(long n, const Integer& l) {
  // 2^{-n-1} n^{-5n} l^{-4n}
  Integer den = int_pow(Integer(2), static_cast<unsigned long>(n + 1)) *
                int_pow(Integer(n), static_cast<unsigned long>(5 * n)) *
                int_pow(l, static_cast<unsigned long>(4 * n));
  return Rational(Integer(1), den);
}

JensenReport jensenr_impl(const IntPolynomial& P, long k, const Integer& l, const Rational& goal,
                          mpfr_prec_t max_prec) {
  JensenReport rep;
  rep.a_k = (static_cast<double>(k) / (k + 1)) * std::pow(static_cast<double>(k + 1), -1.0 / k);
  rep.bound = static_cast<double>(k) *
              (1.0 + std::log(l.get_d()) / std::log(static_cast<double>(k + 1)));

  // |z| < a(k)  <=>  |z|^k (k+1)^{k+1} < k^k, decided on the certified enclosure
  Integer kk = int_pow(Integer(k), static_cast<unsigned long>(k));
  Integer k1 = int_pow(Integer(k + 1), static_cast<unsigned long>(k + 1));
  Rational goal_now = goal;
  for (;;) {
    auto rs = find_roots(P, goal_now, max_prec);
    long count = 0;
    bool undecided = false;
    for (const auto& r : rs.roots) {
      if (r.abs_hi == 0) continue;  // zero roots excluded ("nonzero roots")
      Rational hi_pow = pow_rational(r.abs_hi, static_cast<unsigned long>(k)) * Rational(k1);
      Rational lo_pow = pow_rational(r.abs_lo, static_cast<unsigned long>(k)) * Rational(k1);
      if (hi_pow < Rational(kk))
        count += r.multiplicity;
      else if (!(lo_pow > Rational(kk)) && !(lo_pow == Rational(kk)))
        undecided = true;
    }
    if (!undecided) {
      rep.count_below = count;
      rep.ok = static_cast<double>(count) <= rep.bound + 1e-9;
      return rep;
    }
    goal_now /= Rational(Integer(1) << 32);
    if (goal_now < Rational(1, int_pow(Integer(2), 4096)))
      throw PrecisionExhausted("root modulus straddles a(k)");
  }
}

JensenReport jensen_root_count_check(const IntPolynomial& P, long k, const Integer& l) {
  if (P.is_zero() || k < 1 || l < 1) throw std::invalid_argument("jensen_root_count_check: bad inputs");
  return jensenr_impl(P, k, l, Rational(1, Integer(1) << 64), 4096);
}

CloseRootReport close_root(const IntPolynomial& P, const Rational& lambda, const Rational& r,
                           const Rational& eps, const Integer& l, double c) {
  if (P.is_zero()) throw HypothesisViolated("P must be nonzero");
  long n = P.degree() + 1;
  if (P.height() > l) throw HypothesisViolated("P outside P_l^(n): coefficient above l");
  if (l < 3) throw HypothesisViolated("l >= 3 required");
  Rational abs_lambda = lambda >= 0 ? lambda : Rational(-lambda);
  if (!(eps <= abs_lambda && abs_lambda <= 1 - eps))
    throw HypothesisViolated("lambda outside [eps, 1-eps]");
  Rational vl = P.eval(lambda);
  Rational abs_v = vl >= 0 ? vl : Rational(-vl);
  if (abs_v > r) throw HypothesisViolated("|P(lambda)| exceeds r");
  Rational cap = pow_rational(eps / 2, static_cast<unsigned long>(n));
  if (!(r < cap)) throw HypothesisViolated("r >= eps^n 2^-n");

  if (vl == 0) {
    // lambda is itself a root: the lemma is witnessed at distance zero
    CloseRootReport rep;
    rep.root.center_re = lambda;
    rep.root.center_im = 0;
    rep.root.radius = 0;
    rep.root.is_real = true;
    Rational a = lambda >= 0 ? lambda : Rational(-lambda);
    rep.root.abs_lo = rep.root.abs_hi = a;
    rep.distance = 0;
    rep.radius_bound = 0;
    rep.achieved_c = std::numeric_limits<double>::infinity();
    rep.within_radius = true;
    return rep;
  }

  auto rs = find_roots(P, Rational(1, Integer(1) << 96));
  if (rs.roots.empty()) throw HypothesisViolated("P has no roots");

  // distance from lambda to each certified disk, upper bounds
  const CertifiedRoot* best = nullptr;
  Rational best_hi;
  for (const auto& root : rs.roots) {
    Rational dx = lambda - root.center_re;
    Rational d2 = dx * dx + root.center_im * root.center_im;
    Rational hi = sqrt_rational_dir(d2, 256, true) + root.radius;
    if (!best || hi < best_hi) {
      best = &root;
      best_hi = hi;
    }
  }

  CloseRootReport rep;
  rep.root = *best;
  rep.distance = to_double(best_hi);
  // radius bound (2^n eps^-n r)^{c/log l} through logarithms
  double log_base = n * M_LN2 - n * log_rational(eps) + log_rational(r);
  double log_l = std::log(l.get_d());
  rep.radius_bound = std::exp(c / log_l * log_base);
  rep.within_radius = rep.distance <= rep.radius_bound * (1 + 1e-12);
  if (best_hi == 0)
    rep.achieved_c = std::numeric_limits<double>::infinity();
  else
    rep.achieved_c = log_rational(best_hi) * log_l / log_base;
  return rep;
}

namespace {

ValueBoundReport value_bound_impl(const IntPolynomial& P, const AlgebraicNumber& lambda,
                                  const Rational& bound_hi) {
  ValueBoundReport rep;
  NumberFieldElement v(lambda.field(), QPoly(P));
  if (v.is_zero()) {
    rep.is_zero = true;
    rep.certified_ge = true;
    rep.bound = to_double(bound_hi);
    return rep;
  }
  // certified |P(lambda)| enclosure; tighten until comparable with the bound
  Rational eps = bound_hi / 1024;
  for (int iter = 0; iter < 64; ++iter) {
    auto [lo, hi] = lambda.enclose_abs(v, eps);
    if (lo >= bound_hi) {
      rep.value = to_double((lo + hi) / 2);
      rep.bound = to_double(bound_hi);
      rep.certified_ge = true;
      return rep;
    }
    if (hi < bound_hi) {  // genuinely below the stated bound
      rep.value = to_double((lo + hi) / 2);
      rep.bound = to_double(bound_hi);
      rep.certified_ge = false;
      return rep;
    }
    eps /= 1024;
  }
  throw PrecisionExhausted("value/bound comparison did not separate");
}

}  // namespace

ValueBoundReport value_lower_bound_check(const IntPolynomial& P, const AlgebraicNumber& lambda,
                                         const Integer& l, long n) {
  // bound (l n)^{-deg lambda} M(lambda)^{-n}; the certified check uses the
  // upper end of the bound interval, i.e. the Mahler lower bound
  auto [mlo, mhi] = mahler_enclosure(lambda);
  Rational mlo_clamped = std::max(Rational(1), mlo);
  Rational bound_hi = Rational(1, int_pow(l * Integer(n), static_cast<unsigned long>(lambda.degree()))) /
                      pow_rational(mlo_clamped, static_cast<unsigned long>(n));
  return value_bound_impl(P, lambda, bound_hi);
}

ValueBoundReport value_lower_bound_at_root_check(const IntPolynomial& P, const AlgebraicNumber& lambda,
                                                 const Integer& l, long n) {
  Rational bound(Integer(1), int_pow(l * Integer(n), static_cast<unsigned long>(2 * n)));
  return value_bound_impl(P, lambda, bound);
}

DimitrovReport dimitrov_test(const IntPolynomial& P, const PointArg& lambda, const AlgebraicNumber& eta,
                             long k, const Rational& alpha, long nprime) {
  DimitrovReport rep;
  if (P.is_zero()) {
    rep.failing_clause = "P = 0";
    return rep;
  }
  if (nprime <= 0) nprime = P.degree() + 1;
  if (P.degree() >= nprime) {
    rep.failing_clause = "P outside P_l^(nprime)";
    return rep;
  }
  long n = eta.degree();
  Integer l = std::max(P.height(), Integer(1));

  // alpha threshold: alpha^{n'} > 2 n'^{n(k+1)+k+2} l^{n+1}, exact
  Integer rhs = Integer(2) * int_pow(Integer(nprime), static_cast<unsigned long>(n * (k + 1) + k + 2)) *
                int_pow(l, static_cast<unsigned long>(n + 1));
  Rational alpha_pow = pow_rational(alpha, static_cast<unsigned long>(nprime));
  if (!(alpha_pow > Rational(rhs))) {
    rep.failing_clause = "log_alpha_threshold";
    return rep;
  }

  auto [mlo, mhi] = mahler_enclosure(eta);
  Rational aM_hi = alpha * std::max(mhi, Rational(1));
  Rational aM_pow = pow_rational(aM_hi, static_cast<unsigned long>(nprime));

  // |lambda - eta| and |P(lambda)| enclosures
  Rational dist_lo, dist_hi, pval_lo, pval_hi;
  if (std::holds_alternative<Rational>(lambda)) {
    const Rational& lam = std::get<Rational>(lambda);
    Rational pv = P.eval(lam);
    pval_lo = pval_hi = pv >= 0 ? pv : Rational(-pv);
    NumberFieldElement diff =
        NumberFieldElement::from_rational(eta.field(), lam) - eta.as_element();
    if (diff.is_zero()) {
      rep.failing_clause = "eta_equals_lambda";
      return rep;
    }
    // tighten relative to the window scale
    Rational eps = Rational(1, Integer(1) << 8) / aM_pow;
    auto d = eta.enclose_abs(diff, eps);
    dist_lo = d.first;
    dist_hi = d.second;
  } else if (std::holds_alternative<NumberFieldElement>(lambda)) {
    const NumberFieldElement& lam = std::get<NumberFieldElement>(lambda);
    NumberFieldElement diff = lam - eta.as_element();
    if (diff.is_zero()) {
      rep.failing_clause = "eta_equals_lambda";
      return rep;
    }
    Rational eps = Rational(1, Integer(1) << 8) / aM_pow;
    auto d = eta.enclose_abs(diff, eps);
    dist_lo = d.first;
    dist_hi = d.second;
    // |P(lambda)| with lambda in Q(eta): exact field evaluation
    NumberFieldElement pv = NumberFieldElement::from_rational(eta.field(), Rational(0));
    NumberFieldElement xpow = NumberFieldElement::from_rational(eta.field(), Rational(1));
    for (size_t i = 0; i < P.size(); ++i) {
      pv = pv + xpow * Rational(P.coeff(i));
      xpow = xpow * lam;
    }
    if (pv.is_zero()) {
      pval_lo = pval_hi = 0;
    } else {
      Rational eps2 = eps * eps;
      auto pe = eta.enclose_abs(pv, eps2);
      pval_lo = pe.first;
      pval_hi = pe.second;
    }
  } else {
    const AlgebraicNumber& lam = std::get<AlgebraicNumber>(lambda);
    AlgebraicNumber lam_copy = lam, eta_copy = eta;
    Rational target = Rational(1, Integer(1) << 16) / aM_pow;
    lam_copy.refine_below(target);
    eta_copy.refine_below(target);
    Rational lo = lam_copy.lo() - eta_copy.hi();
    Rational hi = lam_copy.hi() - eta_copy.lo();
    if (lo <= 0 && hi >= 0) {
      rep.failing_clause = "eta_lambda_indistinguishable";
      return rep;
    }
    if (lo > 0) {
      dist_lo = lo;
      dist_hi = hi;
    } else {
      dist_lo = -hi;
      dist_hi = -lo;
    }
    auto pv = interval_eval(QPoly(P), lam_copy.lo(), lam_copy.hi());
    if (pv.first <= 0 && pv.second >= 0) {
      pval_lo = 0;
      pval_hi = std::max(Rational(-pv.first), pv.second);
    } else if (pv.first > 0) {
      pval_lo = pv.first;
      pval_hi = pv.second;
    } else {
      pval_lo = Rational(-pv.second);
      pval_hi = Rational(-pv.first);
    }
  }

  // upper window: |lambda-eta| <= (alpha M)^{-n'}
  if (!(dist_hi * aM_pow <= 1)) {
    rep.failing_clause = "window_upper";
    return rep;
  }
  // lower window: (alpha M)^{n'} |P(lambda)| <= |lambda-eta|^k
  if (!(aM_pow * pval_hi <= pow_rational(dist_lo, static_cast<unsigned long>(k)))) {
    rep.failing_clause = "window_lower";
    return rep;
  }

  rep.hypotheses_hold = true;
  rep.order = vanishing_order(P, eta.min_poly());
  rep.order_ge_k = rep.order >= k;
  return rep;
}

TuranReport turan_bound(const std::vector<std::complex<double>>& z, const std::vector<std::complex<double>>& b,
                        long m, double d1, double d2) {
  long n = static_cast<long>(z.size());
  if (n < 1 || b.size() != z.size()) throw HypothesisViolated("need matching nonempty z and b");
  if (std::abs(z[0]) == 0) throw HypothesisViolated("z_1 must be nonzero");
  if (m < 0) throw HypothesisViolated("m >= 0 required");
  for (long i = 2; i < n; ++i)
    if (std::abs(z[0] - z[i - 1]) > std::abs(z[0] - z[i]) * (1 + 1e-12))
      throw HypothesisViolated("z not sorted by |z_1 - z_i|");
  if (!(0 < d2 && d2 < d1 && d1 < static_cast<double>(n) / (m + n + 1)))
    throw HypothesisViolated("need 0 < delta_2 < delta_1 < n/(m+n+1)");

  double az1 = std::abs(z[0]);
  long h = 0;
  for (long i = 0; i < n; ++i)
    if (std::abs(z[0] - z[i]) < az1 * d2) h = i + 1;
  if (h < n && !(std::abs(z[0] - z[h]) > az1 * d1))
    throw HypothesisViolated("gap condition fails at h");

  std::complex<double> bsum = 0;
  for (long i = 0; i < h; ++i) bsum += b[i];
  double factor = 2.0 * std::pow((d1 - d2) / (12.0 * std::exp(1.0)), static_cast<double>(n)) * std::abs(bsum);

  TuranReport rep;
  rep.h = h;
  rep.guaranteed_lower = std::numeric_limits<double>::infinity();
  for (long j = m + 1; j <= m + n; ++j) {
    std::complex<double> s = 0;
    for (long i = 0; i < n; ++i) s += b[i] * std::pow(z[i], static_cast<double>(j));
    double sj = std::abs(s);
    double bound_j = factor * std::pow(az1, static_cast<double>(j));
    rep.max_power_sum = std::max(rep.max_power_sum, sj);
    rep.guaranteed_lower = std::min(rep.guaranteed_lower, bound_j);
    if (sj >= bound_j * (1 - 1e-9) && !rep.holds) {
      rep.holds = true;
      rep.witness_j = j;
    }
  }
  return rep;
}

double power_sum_delta_regime(double epsilon, long M) {
  double eps0 = std::min(1.0 / 3.0, epsilon / std::pow(2.0, static_cast<double>(M + 2)));
  double d = eps0 / std::pow(2.0, static_cast<double>(2 * M + 2));
  return 2.0 * std::pow(d / (12.0 * std::exp(1.0)), static_cast<double>(2 * M));
}

PowerSumReport power_sum_multiset_check(const std::vector<std::complex<double>>& U,
                                        const std::vector<std::complex<double>>& W, long M, double delta,
                                        double epsilon) {
  if (static_cast<long>(U.size()) > M || static_cast<long>(W.size()) > M)
    throw HypothesisViolated("|U|, |W| must be at most M");
  for (const auto& u : U)
    if (std::abs(u) < 1 - 1e-12) throw HypothesisViolated("all moduli must be >= 1");
  for (const auto& w : W)
    if (std::abs(w) < 1 - 1e-12) throw HypothesisViolated("all moduli must be >= 1");

  // canonical summation order: equal multisets give bitwise-equal sums
  auto sorted = [](std::vector<std::complex<double>> v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    return v;
  };
  auto su_list = sorted(U);
  auto sw_list = sorted(W);

  PowerSumReport rep;
  rep.hypothesis_holds = true;
  for (long j = 1; j <= 2 * M; ++j) {
    std::complex<double> su = 0, sw = 0;
    for (const auto& u : su_list) su += std::pow(u, static_cast<double>(j));
    for (const auto& w : sw_list) sw += std::pow(w, static_cast<double>(j));
    if (std::abs(su - sw) > delta) {
      rep.hypothesis_holds = false;
      break;
    }
  }
  rep.delta_in_regime = delta <= power_sum_delta_regime(epsilon, M);
  rep.sizes_equal = U.size() == W.size();
  std::complex<double> pu = 1, pw = 1;
  for (const auto& u : su_list) pu *= u;
  for (const auto& w : sw_list) pw *= w;
  rep.product_ratio_dev = std::abs(1.0 - pu / pw);
  rep.ratio_ok = rep.product_ratio_dev <= epsilon;
  return rep;
}

}  // namespace garsia
