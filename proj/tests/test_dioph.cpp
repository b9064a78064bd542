#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "garsia/dioph.hpp"

using namespace garsia;

TEST_CASE("certified roots of small polynomials") {
  auto rs = find_roots(IntPolynomial({-1, -1, 1}));
  REQUIRE(rs.roots.size() == 2);
  CHECK(rs.roots[0].re() == doctest::Approx(-0.6180339887498949).epsilon(1e-10));
  CHECK(rs.roots[1].re() == doctest::Approx(1.6180339887498949).epsilon(1e-10));
  CHECK(rs.roots[0].is_real);
  CHECK(rs.roots[1].is_real);

  auto cube = find_roots(IntPolynomial({0, 0, 0, 1}));
  REQUIRE(cube.roots.size() == 1);
  CHECK(cube.roots[0].multiplicity == 3);
  CHECK(cube.roots[0].radius == 0);

  auto gauss = find_roots(IntPolynomial({1, 0, 1}));
  REQUIRE(gauss.roots.size() == 2);
  CHECK_FALSE(gauss.roots[0].is_real);
  CHECK(gauss.roots[0].im() == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(gauss.roots[1].im() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("vieta check: product of root moduli") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Integer> c(2 + rng() % 5);
    for (auto& x : c) x = Integer(static_cast<long>(rng() % 9) - 4);
    IntPolynomial p(std::move(c));
    if (p.degree() < 1 || p.coeff(0) == 0) continue;
    auto rs = find_roots(p);
    Rational lo(abs(p.leading())), hi(abs(p.leading()));
    for (const auto& r : rs.roots)
      for (int i = 0; i < r.multiplicity; ++i) {
        lo *= r.abs_lo;
        hi *= r.abs_hi;
      }
    CHECK(lo <= Rational(abs(p.coeff(0))));
    CHECK(hi >= Rational(abs(p.coeff(0))));
  }
}

TEST_CASE("mahler measure closed forms") {
  auto two = mahler_measure(IntPolynomial({-1, 2}));
  CHECK(two.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(two.le_l1);

  auto cyc = mahler_measure(IntPolynomial({1, 1, 1}));
  CHECK(cyc.value == doctest::Approx(1.0).epsilon(1e-10));

  auto fib = mahler_measure(IntPolynomial({-1, -1, 1}));
  CHECK(fib.value == doctest::Approx(1.6180339887498949).epsilon(1e-8));
  CHECK(to_double(fib.hi - fib.lo) < 1e-12);
}

TEST_CASE("mahler measure is multiplicative") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Integer> a(2 + rng() % 3), b(2 + rng() % 3);
    for (auto& x : a) x = Integer(static_cast<long>(rng() % 7) - 3);
    for (auto& x : b) x = Integer(static_cast<long>(rng() % 7) - 3);
    IntPolynomial p(std::move(a)), q(std::move(b));
    if (p.is_zero() || q.is_zero()) continue;
    auto mp = mahler_measure(p);
    auto mq = mahler_measure(q);
    auto mpq = mahler_measure(p * q);
    CHECK(mpq.lo <= mp.hi * mq.hi);
    CHECK(mpq.hi >= mp.lo * mq.lo);
    CHECK(mp.le_l1);
    CHECK(mq.le_l1);
  }
}

TEST_CASE("root separation bound formula") {
  // n = 5, l = 1: 2^-6 5^-25
  Rational b = root_separation_bound(5, Integer(1));
  CHECK(b == Rational(Integer(1), Integer(64) * Integer("298023223876953125")));
  CHECK(to_double(b) == doctest::Approx(5.24288e-20).epsilon(1e-3));
  // X-1 and X+1: gap 2 >= bound(1,1) = 1/4
  CHECK(root_separation_bound(1, Integer(1)) == Rational(1, 4));
  auto r1 = find_roots(IntPolynomial({-1, 1}));
  auto r2 = find_roots(IntPolynomial({1, 1}));
  CHECK(root_distance_lo(r1.roots[0], r2.roots[0]) >= root_separation_bound(1, Integer(1)));
}

TEST_CASE("jensen root count") {
  // a(1) = 1/4
  auto rep = jensen_root_count_check(IntPolynomial({-1, 0, 0, 0, 0, 1}), 1, Integer(1));
  CHECK(rep.a_k == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(rep.count_below == 0);  // roots of X^5-1 sit on the unit circle
  CHECK(rep.bound == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.ok);
  // a polynomial with a genuinely small root: 8X - 1
  auto rep2 = jensen_root_count_check(IntPolynomial({-1, 8}), 1, Integer(8));
  CHECK(rep2.count_below == 1);
  CHECK(rep2.ok);
}

TEST_CASE("close root lemma checker") {
  // lambda itself a root: distance zero
  IntPolynomial p = IntPolynomial({-2, 5}) * IntPolynomial({3, 1, 1});
  auto rep = close_root(p, Rational(2, 5), Rational(0), Rational(1, 4), Integer(15));
  CHECK(rep.distance <= 1e-20);
  CHECK(rep.within_radius);

  // lambda a 60-bit dyadic approximation of a root of 2X^2-4X+1
  IntPolynomial q({1, -4, 2});
  Rational eta_lo(Integer("5404617132B80C4", 16), Integer(1) << 60);  // ~ (2-sqrt2)/2
  auto rs = find_roots(q);
  // use the certified center, rounded to 60 bits
  Rational lam = rs.roots[0].center_re;
  Rational scale(Integer(1) << 60);
  lam = Rational(floor_int(lam * scale)) / scale;
  Rational val = q.eval(lam);
  Rational r = val >= 0 ? val : Rational(-val);
  auto rep2 = close_root(q, lam, r, Rational(1, 4), Integer(4));
  CHECK(rep2.within_radius);
  CHECK(rep2.distance < rep2.radius_bound);
  CHECK(rep2.achieved_c > 1.0);  // far stronger than the default exponent

  // hypothesis violations are reported with the failing clause
  CHECK_THROWS_AS(close_root(q, Rational(99, 100), Rational(1, 100), Rational(1, 10), Integer(4)),
                  HypothesisViolated);
  (void)eta_lo;
}

TEST_CASE("polynomial value lower bounds") {
  auto half = AlgebraicNumber::from_rational(Rational(1, 2));
  // P = min_poly(lambda): exact zero
  auto z = value_lower_bound_check(IntPolynomial({-1, 2}), half, Integer(1), 2);
  CHECK(z.is_zero);
  // P = X^2 - X at 1/2: |P| = 1/4 >= (1*3)^-1 2^-3 = 1/24
  auto rep = value_lower_bound_check(IntPolynomial({0, -1, 1}), half, Integer(1), 3);
  CHECK_FALSE(rep.is_zero);
  CHECK(rep.value == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(rep.bound == doctest::Approx(1.0 / 24).epsilon(1e-12));
  CHECK(rep.certified_ge);
}

TEST_CASE("value bound sweep at the golden ratio") {
  auto phi = AlgebraicNumber::real_root(IntPolynomial({-1, -1, 1}), Rational(1), Rational(2));
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
    CHECK((rep.is_zero || rep.certified_ge));
    auto rep2 = value_lower_bound_at_root_check(p, phi, Integer(1), 4);
    CHECK((rep2.is_zero || rep2.certified_ge));
  }
}

TEST_CASE("dimitrov multiplicity test") {
  auto half = AlgebraicNumber::from_rational(Rational(1, 2));
  long k = 2;
  const long nprime = 192;
  // constructed: order k+1 zero at 1/2, lambda deep inside the window
  IntPolynomial P = pow(half.min_poly(), 3) * IntPolynomial({1, 1});
  Rational step = 1 / pow_rational(Rational(4), 2 * nprime);
  auto rep = dimitrov_test(P, Rational(1, 2) + step, half, k, Rational(2), nprime);
  CHECK(rep.hypotheses_hold);
  CHECK(rep.order == 3);
  CHECK(rep.order_ge_k);

  // window violated: |lambda - eta| far too large
  auto rep2 = dimitrov_test(P, Rational(1, 2) + Rational(1, 1000), half, k, Rational(2), nprime);
  CHECK_FALSE(rep2.hypotheses_hold);
  CHECK(rep2.failing_clause == "window_upper");

  // alpha threshold fails when nprime is too small for the coefficient budget
  auto rep_small = dimitrov_test(P, Rational(1, 2) + step, half, k);
  CHECK_FALSE(rep_small.hypotheses_hold);
  CHECK(rep_small.failing_clause == "log_alpha_threshold");

  // P(lambda) = 0 reading: when the order at eta is below k, a root lambda
  // of P must stay OUTSIDE the window (the refinement of the separation
  // lemma). S = 2X - 1 + X^d has a simple root mu ~ 1/2 - 2^-(d+1); P = m S
  // vanishes at mu and has order 1 < k at eta = 1/2, so the upper window
  // must fail and no certification may happen.
  const unsigned d = 420;
  IntPolynomial S = IntPolynomial({-1, 2}) + IntPolynomial::monomial(d);
  Rational lo = Rational(1, 2) - Rational(1, Integer(1) << (d - 2));
  auto mu = AlgebraicNumber::real_root(S, lo, Rational(1, 2) - Rational(1, Integer(1) << (d + 4)));
  IntPolynomial P3 = half.min_poly() * S;
  auto rep3 = dimitrov_test(P3, mu, half, k, Rational(2), P3.degree() + 1);
  CHECK_FALSE(rep3.hypotheses_hold);
  CHECK(rep3.failing_clause == "window_upper");
}

TEST_CASE("turan power sums") {
  auto rep = turan_bound({{1.0, 0.0}}, {{1.0, 0.0}}, 0, 0.4, 0.2);
  CHECK(rep.max_power_sum == doctest::Approx(1.0));
  CHECK(rep.holds);
  CHECK(rep.max_power_sum >= rep.guaranteed_lower);

  // z = (1, -1), b = (1, 1): sums alternate 0, 2
  auto rep2 = turan_bound({{1.0, 0.0}, {-1.0, 0.0}}, {{1.0, 0.0}, {1.0, 0.0}}, 0, 0.5, 0.25);
  CHECK(rep2.max_power_sum == doctest::Approx(2.0));
  CHECK(rep2.h == 1);
  CHECK(rep2.holds);

  CHECK_THROWS_AS(turan_bound({{1.0, 0.0}}, {{1.0, 0.0}}, 0, 0.6, 0.2), HypothesisViolated);
}

TEST_CASE("power sum multiset check") {
  std::vector<std::complex<double>> u = {{1.5, 0.2}, {-1.1, 0.4}, {2.0, 0.0}};
  std::vector<std::complex<double>> w = {u[2], u[0], u[1]};
  auto rep = power_sum_multiset_check(u, w, 4, 0.0, 1e-9);
  CHECK(rep.hypothesis_holds);
  CHECK(rep.delta_in_regime);
  CHECK(rep.sizes_equal);
  CHECK(rep.ratio_ok);

  // small perturbation: conclusions still factually hold
  auto w2 = w;
  w2[0] += std::complex<double>(1e-9, 0);
  auto rep2 = power_sum_multiset_check(u, w2, 4, 1e-5, 1e-5);
  CHECK(rep2.hypothesis_holds);
  CHECK(rep2.sizes_equal);
  CHECK(rep2.ratio_ok);

  // wildly different sums: hypothesis fails, nothing asserted
  std::vector<std::complex<double>> v = {{5.0, 0.0}};
  auto rep3 = power_sum_multiset_check(u, v, 4, 1e-6, 1e-6);
  CHECK_FALSE(rep3.hypothesis_holds);
}
