#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "garsia/algebraic.hpp"
#include "garsia/rational_map.hpp"

using namespace garsia;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("0.35") == Rational(7, 20));
  CHECK(to_string(Rational(-3, 7)) == "-3/7");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(frac_part(Rational(-7, 2)) == Rational(1, 2));
  CHECK(floor_int(Rational(-7, 2)) == Integer(-4));
}

TEST_CASE("eval_poly basics") {
  CHECK(eval_poly(IntPolynomial({1, 1}), Rational(1, 2)) == Rational(3, 2));
  CHECK(eval_poly(IntPolynomial::zero(), Rational(7)) == Rational(0));
  CHECK(eval_poly(IntPolynomial({-1, -1, 1}), Rational(2)) == Rational(1));
}

TEST_CASE("eval_map on rationals and poles") {
  RationalMap r1(IntPolynomial({1, 1}), IntPolynomial({1, -1}));
  CHECK(r1.eval(Rational(1, 2)) == Rational(3));
  RationalMap r2(IntPolynomial({1}), IntPolynomial({1, -1}));
  CHECK_THROWS_AS(r2.eval(Rational(1)), PoleError);
}

TEST_CASE("eval_map reduces in the number field") {
  // X^2 - X - 1 evaluated at its own root collapses to zero
  auto phi = AlgebraicNumber::real_root(IntPolynomial({-1, -1, 1}), Rational(1), Rational(2));
  RationalMap r(IntPolynomial({-1, -1, 1}), IntPolynomial({1}));
  CHECK(r.eval(phi).is_zero());
  // and a nontrivial value stays nonzero
  RationalMap r2(IntPolynomial({1, 1}), IntPolynomial({1, -1}));
  CHECK_FALSE(r2.eval(phi).is_zero());
}

TEST_CASE("series_prefix expansions") {
  RationalMap geo(IntPolynomial({1}), IntPolynomial({1, -1}));
  auto c = geo.series_prefix(4);
  CHECK(c == std::vector<Rational>{1, 1, 1, 1});
  RationalMap lin(IntPolynomial({1, -1}), IntPolynomial({1}));
  auto c2 = lin.series_prefix(3);
  CHECK(c2 == std::vector<Rational>{1, -1, 0});
  RationalMap bad(IntPolynomial({1}), IntPolynomial({0, 1}));
  CHECK_THROWS_AS(bad.series_prefix(3), NotPowerSeriesError);
}

TEST_CASE("R_1 series coefficients are integers bounded by 2^j") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Integer> num(1 + rng() % 6), den(1 + rng() % 6);
    for (auto& x : num) x = Integer(static_cast<long>(rng() % 3) - 1);
    for (auto& x : den) x = Integer(static_cast<long>(rng() % 3) - 1);
    den[0] = (rng() & 1) ? Integer(1) : Integer(-1);
    IntPolynomial n(std::move(num)), d(std::move(den));
    if (n.is_zero()) n = IntPolynomial({1});
    RationalMap r(n, d, Integer(1));
    auto c = r.series_prefix(10);
    Integer cap(1);
    for (size_t j = 0; j < c.size(); ++j) {
      CHECK(c[j].get_den() == 1);
      CHECK(abs(c[j].get_num()) <= cap);
      cap *= 2;
    }
  }
}

TEST_CASE("series_prefix reconstructs num modulo X^n") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Integer> num(1 + rng() % 5), den(1 + rng() % 5);
    for (auto& x : num) x = Integer(static_cast<long>(rng() % 7) - 3);
    for (auto& x : den) x = Integer(static_cast<long>(rng() % 7) - 3);
    if (den[0] == 0) den[0] = 1;
    IntPolynomial n(std::move(num)), d(std::move(den));
    RationalMap r(n, d);
    size_t prefix = 8;
    auto c = r.series_prefix(prefix);
    for (size_t j = 0; j < prefix; ++j) {
      Rational acc = 0;
      for (size_t i = 0; i <= j; ++i)
        if (i < d.size()) acc += Rational(d.coeff(i)) * c[j - i];
      CHECK(acc == Rational(n.coeff(j)));
    }
  }
}

TEST_CASE("vanishing_order by exact division") {
  IntPolynomial fib({-1, -1, 1});
  auto phi = AlgebraicNumber::real_root(fib, Rational(1), Rational(2));
  CHECK(vanishing_order(fib * fib, phi.min_poly()) == 2);
  auto half = AlgebraicNumber::from_rational(Rational(1, 2));
  CHECK(vanishing_order(fib, half.min_poly()) == 0);
  IntPolynomial p = pow(fib, 3) * IntPolynomial({-1, 1});
  CHECK(vanishing_order(p, phi.min_poly()) == 3);
  // divisibility cross-check: min_poly^3 divides, min_poly^4 does not
  QPoly q(p), m(phi.min_poly());
  QPoly quot, rem;
  QPoly::divmod(q, m * m * m, quot, rem);
  CHECK(rem.is_zero());
  QPoly::divmod(q, m * m * m * m, quot, rem);
  CHECK_FALSE(rem.is_zero());
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Integer> a(1 + rng() % 5), b(1 + rng() % 5);
    for (auto& x : a) x = Integer(static_cast<long>(rng() % 5) - 2);
    for (auto& x : b) x = Integer(static_cast<long>(rng() % 5) - 2);
    IntPolynomial p(std::move(a)), q(std::move(b));
    Rational x(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 7));
    x.canonicalize();
    CHECK(eval_poly(p * q, x) == eval_poly(p, x) * eval_poly(q, x));
  }
}

TEST_CASE("number field arithmetic") {
  auto phi = AlgebraicNumber::real_root(IntPolynomial({-1, -1, 1}), Rational(1), Rational(2));
  auto g = phi.as_element();
  // phi^2 = phi + 1 in the field
  CHECK(g * g == g + NumberFieldElement::from_rational(phi.field(), Rational(1)));
  CHECK(g * g.inverse() == NumberFieldElement::from_rational(phi.field(), Rational(1)));
  CHECK(phi.sign_of(g - NumberFieldElement::from_rational(phi.field(), Rational(3, 2))) == 1);
  CHECK(phi.sign_of(g - NumberFieldElement::from_rational(phi.field(), Rational(2))) == -1);
}

TEST_CASE("algebraic number isolation and refinement") {
  CHECK_THROWS(AlgebraicNumber::real_root(IntPolynomial({-1, -1, 1}), Rational(0), Rational(1)));
  auto phi = AlgebraicNumber::real_root(IntPolynomial({-1, -1, 1}), Rational(0), Rational(17, 10));
  CHECK(phi.to_double() == doctest::Approx(1.6180339887498949).epsilon(1e-12));
  auto copy = phi;
  copy.refine_below(Rational(1, 1000000));
  CHECK(copy.hi() - copy.lo() < Rational(1, 1000000));
  CHECK(copy == phi);
}

TEST_CASE("taylor expansion of rational maps") {
  RationalMap r(IntPolynomial({1}), IntPolynomial({1, -1}));  // geometric kernel
  auto t = r.taylor_at(Rational(1, 2), 3);
  CHECK(t[0] == Rational(2));
  CHECK(t[1] == Rational(4));
  CHECK(t[2] == Rational(8));  // second derivative 16 = 2 * 8
  CHECK_THROWS_AS(r.taylor_at(Rational(1), 2), PoleError);
}
