#include "garsia/sweeps.hpp"

#include <cmath>
#include <random>

#include "garsia/derivs.hpp"
#include "garsia/dioph.hpp"
#include "garsia/ffield.hpp"
#include "garsia/json_io.hpp"
#include "garsia/scale_entropy.hpp"
#include "garsia/selfsim.hpp"

namespace garsia {

namespace {

struct Rng {
  std::mt19937_64 g;
  explicit Rng(uint64_t seed) : g(seed) {}
  uint64_t next() { return g(); }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  Rational rational(long num_abs, long den_max) {
    Rational q(range(-num_abs, num_abs), range(1, den_max));
    q.canonicalize();
    return q;
  }
  Rational positive_rational(long num_max, long den_max) {
    Rational q(range(1, num_max), range(1, den_max));
    q.canonicalize();
    return q;
  }
};

// random probability vector with exact rational entries
std::vector<Rational> random_weights(Rng& rng, size_t m) {
  std::vector<long> w(m);
  long total = 0;
  for (auto& x : w) {
    x = rng.range(1, 9);
    total += x;
  }
  std::vector<Rational> p;
  p.reserve(m);
  for (long x : w) {
    Rational q(x, total);
    q.canonicalize();
    p.push_back(q);
  }
  return p;
}

DiscreteDistribution<Rational> random_rational_measure(Rng& rng, size_t max_atoms, long num_abs,
                                                       long den_max) {
  size_t n = static_cast<size_t>(rng.range(1, static_cast<long>(max_atoms)));
  std::vector<Rational> values;
  while (values.size() < n) {
    Rational v = rng.rational(num_abs, den_max);
    bool dup = false;
    for (const auto& x : values) dup |= (x == v);
    if (!dup) values.push_back(v);
  }
  auto probs = random_weights(rng, values.size());
  DiscreteDistribution<Rational> d;
  for (size_t i = 0; i < values.size(); ++i) d.add(values[i], probs[i]);
  return d;
}

IntPolynomial random_poly(Rng& rng, long coeff_abs, long max_deg, bool nonzero) {
  for (;;) {
    std::vector<Integer> c(static_cast<size_t>(rng.range(1, max_deg + 1)));
    for (auto& x : c) x = Integer(rng.range(-coeff_abs, coeff_abs));
    IntPolynomial p(std::move(c));
    if (!nonzero || !p.is_zero()) return p;
  }
}

// random R in R_1 with an integral power-series expansion
RationalMap random_r1_series(Rng& rng, long max_deg) {
  std::vector<Integer> num(static_cast<size_t>(rng.range(1, max_deg + 1)));
  std::vector<Integer> den(static_cast<size_t>(rng.range(1, max_deg + 1)));
  for (auto& x : num) x = Integer(rng.range(-1, 1));
  for (auto& x : den) x = Integer(rng.range(-1, 1));
  den[0] = rng.range(0, 1) ? Integer(1) : Integer(-1);
  IntPolynomial n(std::move(num)), d(std::move(den));
  if (n.is_zero()) n = IntPolynomial({1});
  return RationalMap(std::move(n), std::move(d), Integer(1));
}

// --- individual suites -------------------------------------------------

SweepResult sweep_separation(uint64_t seed, size_t /*count*/) {
  SweepResult res{"separation", seed};
  const long n = 5;
  const Integer l(1);
  Rational bound = root_separation_bound(n, l);
  Rational goal(1, Integer(1) << 160);

  // all nonzero P in P_1^(5) up to sign
  std::vector<IntPolynomial> polys;
  for (long code = 1; code < 243; ++code) {
    long c = code;
    std::vector<Integer> coeffs(5);
    for (int i = 0; i < 5; ++i) {
      coeffs[i] = Integer(c % 3 - 1);
      c /= 3;
    }
    IntPolynomial p{std::move(coeffs)};
    if (p.is_zero()) continue;
    // sign normalization halves the work; -P has the same roots
    long lead = 0;
    for (size_t i = 0; i < p.size() && lead == 0; ++i) lead = sgn(p.coeff(i));
    if (lead < 0) continue;
    polys.push_back(std::move(p));
  }

  std::vector<RootSet> sets;
  sets.reserve(polys.size());
  for (const auto& p : polys) sets.push_back(find_roots(p, goal));

  Rational min_gap(-1);
  size_t pairs = 0, skipped_equal = 0;
  for (size_t i = 0; i < sets.size() && res.violations == 0; ++i)
    for (size_t j = i; j < sets.size() && res.violations == 0; ++j) {
      std::vector<std::pair<const CertifiedRoot*, const CertifiedRoot*>> cand;
      for (const auto& a : sets[i].roots)
        for (const auto& b : sets[j].roots) {
          if (i == j && &a >= &b) continue;
          cand.emplace_back(&a, &b);
        }
      for (auto [pa, pb] : cand) {
        Rational lo = root_distance_lo(*pa, *pb);
        if (lo >= bound) {
          ++pairs;
          if (min_gap < 0 || lo < min_gap) min_gap = lo;
          continue;
        }
        if (i == j) {  // same squarefree system: distinct by certification
          ++res.violations;
          res.detail["violation"] = {{"p", poly_to_json(polys[i])}, {"q", poly_to_json(polys[j])}};
          break;
        }
        // possibly the same algebraic number: decide through the gcd
        QPoly g = gcd(QPoly(polys[i]), QPoly(polys[j]));
        bool equal = false;
        if (g.degree() >= 1) {
          auto grs = find_roots(g.to_int_primitive(), goal);
          for (const auto& gr : grs.roots) {
            bool meets_a = root_distance_lo(gr, *pa) == 0;
            bool meets_b = root_distance_lo(gr, *pb) == 0;
            if (meets_a && meets_b) {
              equal = true;
              break;
            }
          }
        }
        if (equal) {
          ++skipped_equal;
        } else {
          ++res.violations;
          res.detail["violation"] = {{"p", poly_to_json(polys[i])},
                                     {"q", poly_to_json(polys[j])},
                                     {"gap_below", to_string(lo)}};
          break;
        }
      }
    }
  res.cases = pairs;
  res.detail["distinct_pairs"] = pairs;
  res.detail["identified_equal"] = skipped_equal;
  res.detail["min_gap"] = min_gap >= 0 ? to_double(min_gap) : -1.0;
  res.detail["bound"] = to_double(bound);
  return res;
}

SweepResult sweep_jensen(uint64_t seed, size_t count) {
  SweepResult res{"jensen", seed};
  Rng rng(seed);
  for (size_t i = 0; i < count; ++i) {
    IntPolynomial p = random_poly(rng, 2, 8, true);
    long k = rng.range(1, 4);
    auto rep = jensen_root_count_check(p, k, Integer(2));
    ++res.cases;
    if (!rep.ok) {
      ++res.violations;
      res.detail["violation"] = {{"p", poly_to_json(p)}, {"k", k}, {"count", rep.count_below},
                                 {"bound", rep.bound}};
      break;
    }
  }
  return res;
}

SweepResult sweep_value_bound(uint64_t seed, size_t /*count*/) {
  SweepResult res{"value-bound", seed};
  // exhaustive over P_1^(4) at the golden ratio
  AlgebraicNumber phi = AlgebraicNumber::real_root(IntPolynomial({-1, -1, 1}), Rational(1), Rational(2));
  for (long code = 1; code < 81; ++code) {
    long c = code;
    std::vector<Integer> coeffs(4);
    for (int i = 0; i < 4; ++i) {
      coeffs[i] = Integer(c % 3 - 1);
      c /= 3;
    }
    IntPolynomial p{std::move(coeffs)};
    if (p.is_zero()) continue;
    auto rep = value_lower_bound_check(p, phi, Integer(1), 4);
    auto rep2 = value_lower_bound_at_root_check(p, phi, Integer(1), 4);
    ++res.cases;
    if (!(rep.is_zero || rep.certified_ge) || !(rep2.is_zero || rep2.certified_ge)) {
      ++res.violations;
      res.detail["violation"] = {{"p", poly_to_json(p)}, {"value", rep.value}, {"bound", rep.bound}};
      break;
    }
  }
  return res;
}

SweepResult sweep_dimitrov(uint64_t seed, size_t count) {
  SweepResult res{"dimitrov", seed};
  Rng rng(seed);
  size_t holds = count / 2, misses = count - holds;

  struct Gen {
    AlgebraicNumber eta;
    Rational m_hi;  // upper bound on M(eta), rational
  };
  std::vector<Gen> gens;
  gens.push_back({AlgebraicNumber::from_rational(Rational(1, 2)), Rational(2)});
  gens.push_back({AlgebraicNumber::from_rational(Rational(1, 3)), Rational(3)});
  gens.push_back({AlgebraicNumber::from_rational(Rational(2, 5)), Rational(5)});
  gens.push_back({AlgebraicNumber::real_root(IntPolynomial({-1, 1, 1}), Rational(0), Rational(1)),
                  Rational(17, 10)});  // positive root of X^2+X-1, M = phi < 1.7

  size_t false_certs = 0;
  for (size_t i = 0; i < holds; ++i) {
    const Gen& g = gens[rng.next() % gens.size()];
    long k = rng.range(2, 3);
    // P = minpoly^{k+1} * G with small G keeps the exact order at k+1
    IntPolynomial G = random_poly(rng, 1, 3, true);
    IntPolynomial P = pow(g.eta.min_poly(), static_cast<unsigned>(k + 1)) * G;
    long nprime = 96 + 8 * rng.range(0, 4);
    // lambda = eta + s (2 M)^{-2 n'} inside the window
    Rational step = 1 / pow_rational(2 * g.m_hi, static_cast<unsigned long>(2 * nprime));
    Rational s(rng.range(1, 7), 8);
    s.canonicalize();
    DimitrovReport rep;
    if (g.eta.is_rational()) {
      rep = dimitrov_test(P, g.eta.rational_value() + s * step, g.eta, k, Rational(2), nprime);
    } else {
      NumberFieldElement lam = g.eta.as_element() + NumberFieldElement::from_rational(
                                                        g.eta.field(), s * step);
      rep = dimitrov_test(P, lam, g.eta, k, Rational(2), nprime);
    }
    ++res.cases;
    if (!rep.hypotheses_hold || !rep.order_ge_k) {
      ++res.violations;
      res.detail["violation"] = {{"kind", "constructed_hold"},
                                 {"p", poly_to_json(P)},
                                 {"clause", rep.failing_clause},
                                 {"order", rep.order}};
      break;
    }
  }

  for (size_t i = 0; i < misses && res.violations == 0; ++i) {
    const Gen& g = gens[rng.next() % gens.size()];
    long k = rng.range(2, 3);
    IntPolynomial P = pow(g.eta.min_poly(), static_cast<unsigned>(k + 1));
    long nprime = 96;
    DimitrovReport rep;
    long miss_kind = rng.range(0, 2);
    if (miss_kind == 0) {
      // window too wide: |lambda - eta| ~ (2M)^{-n'/2}
      Rational step = 1 / pow_rational(2 * g.m_hi, static_cast<unsigned long>(nprime / 2));
      if (g.eta.is_rational())
        rep = dimitrov_test(P, g.eta.rational_value() + step, g.eta, k, Rational(2), nprime);
      else
        rep = dimitrov_test(P, g.eta.as_element() + NumberFieldElement::from_rational(g.eta.field(), step),
                            g.eta, k, Rational(2), nprime);
    } else if (miss_kind == 1) {
      // alpha threshold fails: degree too small for the coefficient budget
      IntPolynomial Q = pow(g.eta.min_poly(), static_cast<unsigned>(k + 1));
      Rational step(1, 1000000);
      if (g.eta.is_rational())
        rep = dimitrov_test(Q, g.eta.rational_value() + step, g.eta, k);
      else
        rep = dimitrov_test(
            Q, g.eta.as_element() + NumberFieldElement::from_rational(g.eta.field(), step), g.eta, k);
    } else {
      // order too small at eta: P built from a different generator
      IntPolynomial P2 = pow(IntPolynomial({1, 1}), static_cast<unsigned>(k + 2));  // roots at -1 only
      Rational step = 1 / pow_rational(2 * g.m_hi, static_cast<unsigned long>(2 * nprime));
      if (g.eta.is_rational())
        rep = dimitrov_test(P2, g.eta.rational_value() + step, g.eta, k, Rational(2), nprime);
      else
        rep = dimitrov_test(P2, g.eta.as_element() + NumberFieldElement::from_rational(g.eta.field(), step),
                            g.eta, k, Rational(2), nprime);
    }
    ++res.cases;
    // near-miss instances must never certify falsely: either hypotheses fail,
    // or (if they hold) the exact order really is >= k
    if (rep.hypotheses_hold && !rep.order_ge_k) {
      ++false_certs;
      ++res.violations;
      res.detail["violation"] = {{"kind", "false_certification"}, {"order", rep.order}};
      break;
    }
  }
  res.detail["false_certifications"] = false_certs;
  return res;
}

SweepResult sweep_turan(uint64_t seed, size_t count) {
  SweepResult res{"turan", seed};
  Rng rng(seed);
  size_t made = 0;
  while (made < count) {
    long n = rng.range(1, 5);
    long m = rng.range(0, 2);
    double cap = static_cast<double>(n) / static_cast<double>(m + n + 1);
    std::vector<std::complex<double>> z, b;
    double a1 = rng.unit() * 2 * M_PI;
    double r1 = 0.5 + 1.5 * rng.unit();
    z.emplace_back(r1 * std::cos(a1), r1 * std::sin(a1));
    for (long i = 1; i < n; ++i) {
      double ang = rng.unit() * 2 * M_PI;
      double rad = rng.unit() * 2.0;
      z.emplace_back(z[0] + std::polar(rad, ang));
    }
    std::sort(z.begin() + 1, z.end(), [&](auto u, auto v) { return std::abs(z[0] - u) < std::abs(z[0] - v); });
    double d2 = cap * (0.05 + 0.4 * rng.unit());
    double d1 = d2 + cap * (0.05 + 0.4 * rng.unit());
    if (!(d1 < cap)) continue;
    for (long i = 0; i < n; ++i) {
      double ang = rng.unit() * 2 * M_PI;
      double rad = 0.1 + rng.unit();
      b.emplace_back(std::polar(rad, ang));
    }
    TuranReport rep;
    try {
      rep = turan_bound(z, b, m, d1, d2);
    } catch (const HypothesisViolated&) {
      continue;  // resample until admissible
    }
    ++made;
    ++res.cases;
    if (!rep.holds) {
      ++res.violations;
      res.detail["violation"] = {{"n", n}, {"m", m}, {"d1", d1}, {"d2", d2},
                                 {"max", rep.max_power_sum}, {"lower", rep.guaranteed_lower}};
      break;
    }
  }
  return res;
}

SweepResult sweep_power_sum(uint64_t seed, size_t count) {
  SweepResult res{"power-sum", seed};
  Rng rng(seed);
  const long M = 4;
  for (size_t i = 0; i < count; ++i) {
    size_t sz = static_cast<size_t>(rng.range(1, M));
    std::vector<std::complex<double>> U;
    for (size_t j = 0; j < sz; ++j) {
      double rad = 1.0 + rng.unit();
      U.push_back(std::polar(rad, rng.unit() * 2 * M_PI));
    }
    std::vector<std::complex<double>> W = U;
    for (size_t j = 1; j < W.size(); ++j) std::swap(W[j - 1], W[rng.next() % W.size()]);
    auto rep = power_sum_multiset_check(U, W, M, 0.0, 1e-6);
    ++res.cases;
    bool ok = rep.hypothesis_holds && rep.delta_in_regime && rep.sizes_equal && rep.ratio_ok;
    if (!ok) {
      ++res.violations;
      res.detail["violation"] = {{"case", i}, {"dev", rep.product_ratio_dev}};
      break;
    }
  }
  return res;
}

SweepResult sweep_kv(uint64_t seed, size_t count) {
  SweepResult res{"kv", seed};
  Rng rng(seed);
  for (size_t i = 0; i < count; ++i) {
    DiscreteDistribution<Rational> mu, nu;
    size_t na = static_cast<size_t>(rng.range(1, 4)), nb = static_cast<size_t>(rng.range(1, 4));
    auto pa = random_weights(rng, na);
    auto pb = random_weights(rng, nb);
    std::vector<long> va, vb;
    while (va.size() < na) {
      long v = rng.range(0, 12);
      if (std::find(va.begin(), va.end(), v) == va.end()) va.push_back(v);
    }
    while (vb.size() < nb) {
      long v = rng.range(0, 12);
      if (std::find(vb.begin(), vb.end(), v) == vb.end()) vb.push_back(v);
    }
    for (size_t j = 0; j < na; ++j) mu.add(Rational(va[j]), pa[j]);
    for (size_t j = 0; j < nb; ++j) nu.add(Rational(vb[j]), pb[j]);
    unsigned n = static_cast<unsigned>(rng.range(1, 4));
    auto [lhs, rhs] = kv_inequality_gap(mu, nu, n);
    ++res.cases;
    if (lhs > rhs + 1e-9) {
      ++res.violations;
      res.detail["violation"] = {{"lhs", lhs}, {"rhs", rhs}, {"n", n}};
      break;
    }
  }
  return res;
}

SweepResult sweep_scale_entropy(uint64_t seed, size_t count) {
  SweepResult res{"scale-entropy", seed};
  Rng rng(seed);
  for (size_t i = 0; i < count; ++i) {
    auto nu = random_rational_measure(rng, 6, 64, 64);
    Rational r1 = rng.positive_rational(8, 16);
    Rational r2 = r1 + rng.positive_rational(8, 16);
    double diff = scale_entropy_between(nu, r1, r2);
    double cap = 2 * (log_rational(r2) - log_rational(r1));
    ++res.cases;
    bool ok = diff >= -1e-9 && diff <= cap + 1e-9;
    // spot-check the closed form against the Riemann oracle
    if (ok && i % 10 == 0) {
      auto small = random_rational_measure(rng, 5, 16, 16);
      Rational r = rng.positive_rational(4, 8);
      double exact = scale_entropy(small, r).value;
      double approx = scale_entropy_riemann(small, r, 10000);
      ok = std::fabs(exact - approx) <= 1e-3;
      if (!ok) res.detail["violation"] = {{"kind", "riemann"}, {"exact", exact}, {"approx", approx}};
    }
    if (!ok) {
      ++res.violations;
      if (!res.detail.contains("violation"))
        res.detail["violation"] = {{"diff", diff}, {"cap", cap}};
      break;
    }
  }
  return res;
}

SweepResult sweep_monotone_ff(uint64_t seed, size_t count) {
  SweepResult res{"monotone-ff", seed};
  Rng rng(seed);
  auto spec = IfsSpec::standard3(Parameter::transcendental(), Parameter::transcendental());
  for (size_t i = 0; i < count; ++i) {
    RationalMap R = random_r1_series(rng, 6);
    auto seq = ff_dim_lower_sequence(spec, R, 6);
    ++res.cases;
    bool ok = true;
    for (size_t k = 1; k < seq.size(); ++k) ok &= seq[k] >= seq[k - 1] - 1e-9;
    if (!ok) {
      ++res.violations;
      res.detail["violation"] = {{"num", poly_to_json(R.num())}, {"den", poly_to_json(R.den())}};
      break;
    }
  }
  return res;
}

SweepResult sweep_recursion_oracle(uint64_t seed, size_t count) {
  SweepResult res{"recursion-oracle", seed};
  Rng rng(seed);
  for (size_t i = 0; i < count; ++i) {
    // random R with small coefficients, lambda rational in (0,1) off the poles
    IntPolynomial num = random_poly(rng, 2, 4, true);
    IntPolynomial den = random_poly(rng, 2, 4, true);
    Rational lam(rng.range(1, 9), 10);
    lam.canonicalize();
    if (den.eval(lam) == 0) den = den + IntPolynomial({1});
    if (den.is_zero() || den.eval(lam) == 0) continue;
    DerivSystem sys = DerivSystem::standard3(RationalMap(num, den), Parameter::rational(lam),
                                             static_cast<size_t>(rng.range(1, 4)));
    size_t n = static_cast<size_t>(rng.range(0, 8));
    Digits digits(n);
    for (auto& d : digits) d = static_cast<uint8_t>(rng.range(0, 2));
    ++res.cases;
    try {
      auto B = b_state(sys, digits);  // throws logic_error on mismatch
      if (n == 1) {
        auto v = translation_vector(sys, digits[0]);
        if (v != B) throw std::logic_error("n=1 state differs from v_j");
      }
    } catch (const std::logic_error& e) {
      ++res.violations;
      res.detail["violation"] = {{"case", i}, {"what", e.what()}};
      break;
    }
  }
  return res;
}

}  // namespace

const std::vector<std::string>& sweep_names() {
  static const std::vector<std::string> names = {
      "separation", "jensen",       "value-bound", "dimitrov",    "turan",
      "power-sum",  "kv",           "scale-entropy", "monotone-ff", "recursion-oracle"};
  return names;
}

SweepResult run_sweep(const std::string& suite, uint64_t seed, size_t count) {
  if (suite == "separation") return sweep_separation(seed, count);
  if (suite == "jensen") return sweep_jensen(seed, count);
  if (suite == "value-bound") return sweep_value_bound(seed, count);
  if (suite == "dimitrov") return sweep_dimitrov(seed, count);
  if (suite == "turan") return sweep_turan(seed, count);
  if (suite == "power-sum") return sweep_power_sum(seed, count);
  if (suite == "kv") return sweep_kv(seed, count);
  if (suite == "scale-entropy") return sweep_scale_entropy(seed, count);
  if (suite == "monotone-ff") return sweep_monotone_ff(seed, count);
  if (suite == "recursion-oracle") return sweep_recursion_oracle(seed, count);
  throw ParseError("unknown suite: " + suite);
}

}  // namespace garsia
