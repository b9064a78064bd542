#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "garsia/scale_entropy.hpp"

using namespace garsia;

namespace {

DiscreteDistribution<Rational> uniform_on(std::vector<Rational> values) {
  DiscreteDistribution<Rational> d;
  Rational p(1, static_cast<long>(values.size()));
  for (auto& v : values) d.add(v, p);
  return d;
}

std::vector<Rational> sorted_probs(const DiscreteDistribution<Rational>& d) {
  std::vector<Rational> out;
  for (const auto& [k, p] : d) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

std::mt19937_64 rng(4242);

DiscreteDistribution<Rational> random_measure(size_t max_atoms) {
  size_t n = 1 + rng() % max_atoms;
  DiscreteDistribution<Rational> d;
  std::vector<long> w(n);
  long total = 0;
  for (auto& x : w) {
    x = 1 + static_cast<long>(rng() % 9);
    total += x;
  }
  std::vector<Rational> vals;
  while (vals.size() < n) {
    Rational v(static_cast<long>(rng() % 65) - 32, 1 + static_cast<long>(rng() % 16));
    v.canonicalize();
    if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
  }
  for (size_t i = 0; i < n; ++i) {
    Rational p(w[i], total);
    p.canonicalize();
    d.add(vals[i], p);
  }
  return d;
}

}  // namespace

TEST_CASE("shannon entropy closed forms") {
  CHECK(shannon_entropy(uniform_on({Rational(0), Rational(1), Rational(2)})) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-14));
  CHECK(shannon_entropy(DiscreteDistribution<Rational>::delta(Rational(5))) == 0.0);
  DiscreteDistribution<Rational> d;
  d.add(Rational(0), Rational(2, 9));
  d.add(Rational(1), Rational(2, 9));
  for (long i = 2; i <= 6; ++i) d.add(Rational(i), Rational(1, 9));
  CHECK(shannon_entropy(d) ==
        doctest::Approx(std::log(9.0) - (4.0 / 9) * std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("convolution examples") {
  auto u01 = uniform_on({Rational(0), Rational(1)});
  // delta translate preserves the multiset of probabilities exactly
  auto shifted = convolve(DiscreteDistribution<Rational>::delta(Rational(7, 3)), random_measure(6));
  auto base = random_measure(6);
  auto moved = convolve(DiscreteDistribution<Rational>::delta(Rational(-5, 2)), base);
  CHECK(sorted_probs(moved) == sorted_probs(base));
  CHECK(shannon_entropy(moved) == doctest::Approx(shannon_entropy(base)).epsilon(1e-14));
  (void)shifted;

  auto sq = convolve(u01, u01);
  CHECK(sq.size() == 3);
  CHECK(sq.prob(Rational(0)) == Rational(1, 4));
  CHECK(sq.prob(Rational(1)) == Rational(1, 2));
  CHECK(sq.prob(Rational(2)) == Rational(1, 4));

  auto four = convolve(u01, uniform_on({Rational(0), Rational(2)}));
  CHECK(four.size() == 4);
  for (const auto& [k, p] : four) CHECK(p == Rational(1, 4));
  CHECK(shannon_entropy(four) == doctest::Approx(std::log(4.0)).epsilon(1e-14));
}

TEST_CASE("convolution guardrail") {
  std::vector<Rational> vals;
  for (long i = 0; i < 200; ++i) vals.emplace_back(i);
  auto big = uniform_on(vals);
  CHECK_THROWS_AS(convolve(big, big, 1000), GuardrailExceeded);
}

TEST_CASE("scale entropy closed forms") {
  CHECK(scale_entropy(DiscreteDistribution<Rational>::delta(Rational(0)), Rational(3, 7)).value == 0.0);

  Rational r(2, 5);
  auto two_cells = uniform_on({Rational(0), r});
  CHECK(scale_entropy(two_cells, r).value == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  auto half_split = uniform_on({Rational(0), r / 2});
  CHECK(scale_entropy(half_split, r).value == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("scale entropy between scales") {
  auto u01 = uniform_on({Rational(0), Rational(1)});
  CHECK(scale_entropy_between(u01, Rational(1, 3), Rational(1, 3)) == 0.0);

  double d = scale_entropy_between(u01, Rational(1, 2), Rational(2));
  CHECK(d >= -1e-12);
  CHECK(d <= 2 * std::log(4.0) + 1e-12);

  auto quarters = uniform_on({Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)});
  double direct = scale_entropy(quarters, Rational(1, 4)).value - scale_entropy(quarters, Rational(1)).value;
  CHECK(scale_entropy_between(quarters, Rational(1, 4), Rational(1)) ==
        doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("scale entropy tends to the atom entropy below the minimal gap") {
  for (int trial = 0; trial < 30; ++trial) {
    auto nu = random_measure(5);
    // minimal gap between atoms
    std::vector<Rational> xs;
    for (const auto& [k, p] : nu) xs.push_back(k);
    Rational gap(-1);
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
      Rational g = xs[i + 1] - xs[i];
      if (gap < 0 || g < gap) gap = g;
    }
    Rational r = xs.size() == 1 ? Rational(1, 7) : gap / 3;
    CHECK(scale_entropy(nu, r).value == doctest::Approx(shannon_entropy(nu)).epsilon(1e-12));
  }
}

TEST_CASE("breakpoint decomposition matches the Riemann oracle") {
  for (int trial = 0; trial < 25; ++trial) {
    auto nu = random_measure(5);
    Rational r(1 + static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 8));
    r.canonicalize();
    double exact = scale_entropy(nu, r).value;
    double approx = scale_entropy_riemann(nu, r, 10000);
    CHECK(std::fabs(exact - approx) <= 1e-3);
  }
}

TEST_CASE("diff-of-entropy bounds on random measures") {
  for (int trial = 0; trial < 200; ++trial) {
    auto nu = random_measure(6);
    Rational r1(1 + static_cast<long>(rng() % 8), 1 + static_cast<long>(rng() % 16));
    r1.canonicalize();
    Rational dr(1 + static_cast<long>(rng() % 8), 1 + static_cast<long>(rng() % 16));
    dr.canonicalize();
    Rational r2 = r1 + dr;
    double d = scale_entropy_between(nu, r1, r2);
    CHECK(d >= -1e-9);
    CHECK(d <= 2 * (log_rational(r2) - log_rational(r1)) + 1e-9);
  }
}

TEST_CASE("Kaimanovich-Vershik inequality") {
  auto u01 = uniform_on({Rational(0), Rational(1)});
  // nu = delta: both sides vanish
  auto flat = kv_inequality_gap(u01, DiscreteDistribution<Rational>::delta(Rational(3)), 3);
  CHECK(flat.lhs == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(flat.rhs == doctest::Approx(0.0).epsilon(1e-14));

  // mu = nu = uniform{0,1}, n = 2: both sides in closed form
  auto pair = kv_inequality_gap(u01, u01, 2);
  double h_fine = -(0.125 * std::log(0.125) * 2 + 0.375 * std::log(0.375) * 2);
  double h_coarse = -(0.25 * std::log(0.25) * 2 + 0.5 * std::log(0.5));
  CHECK(pair.lhs == doctest::Approx(h_fine - std::log(2.0)).epsilon(1e-12));
  CHECK(pair.rhs == doctest::Approx(2 * (h_coarse - std::log(2.0))).epsilon(1e-12));
  CHECK(pair.lhs <= pair.rhs + 1e-12);
}

TEST_CASE("mixing concavity and convolution monotonicity") {
  for (int trial = 0; trial < 100; ++trial) {
    auto mu = random_measure(5);
    auto nu = random_measure(5);
    Rational alpha(1 + static_cast<long>(rng() % 9), 10);
    alpha.canonicalize();
    double mixed = shannon_entropy(mix(alpha, mu, nu));
    CHECK(mixed >= to_double(alpha) * shannon_entropy(mu) +
                       (1 - to_double(alpha)) * shannon_entropy(nu) - 1e-9);
    double conv = shannon_entropy(convolve(mu, nu));
    CHECK(conv >= std::max(shannon_entropy(mu), shannon_entropy(nu)) - 1e-9);
  }
}

TEST_CASE("weighted log bound") {
  auto eq = weighted_log_bound({0.3, 0.7, 1.1}, {0.3, 0.7, 1.1});
  CHECK(eq.lhs == doctest::Approx(eq.rhs).epsilon(1e-12));

  auto ex = weighted_log_bound({1, 1}, {1, 3});
  CHECK(ex.lhs == doctest::Approx(-std::log(3.0)).epsilon(1e-12));
  CHECK(ex.rhs == doctest::Approx(-2 * std::log(2.0)).epsilon(1e-12));
  CHECK(ex.lhs >= ex.rhs - 1e-12);

  std::mt19937_64 g(5);
  for (int trial = 0; trial < 1000; ++trial) {
    size_t n = 1 + g() % 8;
    std::vector<double> y(n), z(n);
    for (auto& v : y) v = 0.01 + (g() % 1000) / 100.0;
    for (auto& v : z) v = 0.01 + (g() % 1000) / 100.0;
    auto r = weighted_log_bound(y, z);
    CHECK(r.lhs >= r.rhs - 1e-9);
  }
}
