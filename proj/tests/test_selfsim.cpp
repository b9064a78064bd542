#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "garsia/scale_entropy.hpp"
#include "garsia/selfsim.hpp"

using namespace garsia;

namespace {

const double kLog3 = std::log(3.0);
const double kLog2 = std::log(2.0);
const double kCurveRate = kLog3 - (2.0 / 3) * kLog2;

IfsSpec half_two() {
  return IfsSpec::standard3(Parameter::rational(Rational(1, 2)), Parameter::rational(Rational(2)));
}

std::mt19937_64 rng(31337);

IfsSpec random_rational_spec() {
  Rational lam(1 + static_cast<long>(rng() % 8), 9);
  lam.canonicalize();
  Rational tau(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 4));
  tau.canonicalize();
  return IfsSpec::standard3(Parameter::rational(lam), Parameter::rational(tau));
}

}  // namespace

TEST_CASE("enumerate_level at (1/2, 2)") {
  auto d = enumerate_level(half_two(), 2);
  REQUIRE(d.size() == 7);
  std::vector<Rational> probs;
  for (const auto& [k, p] : d) probs.push_back(p);
  std::sort(probs.begin(), probs.end());
  // (1,1,2,1,2,1,1)/9 sorted
  CHECK(probs == std::vector<Rational>{{Rational(1, 9), Rational(1, 9), Rational(1, 9), Rational(1, 9),
                                        Rational(1, 9), Rational(2, 9), Rational(2, 9)}});
}

TEST_CASE("free symbols stay uniform") {
  auto spec = IfsSpec::standard3(Parameter::transcendental(), Parameter::transcendental());
  auto d = enumerate_level(spec, 3);
  CHECK(d.size() == 27);
  for (const auto& [k, p] : d) CHECK(p == Rational(1, 27));
}

TEST_CASE("tau = 1 collapses digits to a biased coin") {
  auto spec = IfsSpec::standard3(Parameter::transcendental(), Parameter::rational(Rational(1)));
  auto d = enumerate_level(spec, 2);
  CHECK(d.size() == 4);
  CHECK(garsia_entropy(spec, 5) == doctest::Approx(5 * kCurveRate).epsilon(1e-13));
}

TEST_CASE("garsia entropy values") {
  CHECK(garsia_entropy(half_two(), 1) == doctest::Approx(kLog3).epsilon(1e-13));
  CHECK(garsia_entropy(half_two(), 2) ==
        doctest::Approx(2 * kLog3 - (4.0 / 9) * kLog2).epsilon(1e-13));
}

TEST_CASE("entropy rate upper bound") {
  auto free3 = IfsSpec::standard3(Parameter::transcendental(), Parameter::transcendental());
  CHECK(entropy_rate_upper(free3, 4) == doctest::Approx(kLog3).epsilon(1e-13));

  // (1/2, 2): the k=2 bound log3 - (2/9)log2 dominates the sequence head
  double rate = entropy_rate_upper(half_two(), 4);
  CHECK(rate <= kLog3 - (2.0 / 9) * kLog2 + 1e-12);

  // rate is nonincreasing in n
  double prev = entropy_rate_upper(half_two(), 1);
  for (size_t n = 2; n <= 5; ++n) {
    double cur = entropy_rate_upper(half_two(), n);
    CHECK(cur <= prev + 1e-12);
    prev = cur;
  }

  auto curve = IfsSpec::standard3(Parameter::transcendental(), Parameter::rational(Rational(1)));
  for (size_t n = 1; n <= 5; ++n)
    CHECK(entropy_rate_upper(curve, n) == doctest::Approx(kCurveRate).epsilon(1e-13));
}

TEST_CASE("find_overlap witnesses") {
  auto w = find_overlap(half_two(), 4);
  REQUIRE(w.has_value());
  CHECK(w->level == 2);
  CHECK(w->p1 == IntPolynomial({1}));
  CHECK(w->p2 == IntPolynomial({0, -1}));
  // Q(1/2, 1, 2) = 0 exactly
  CHECK(w->p1.eval(Rational(1, 2)) + Rational(2) * w->p2.eval(Rational(1, 2)) == 0);

  auto lam = AlgebraicNumber::real_root(IntPolynomial({-1, 1, 1}), Rational(0), Rational(1));
  auto bern = IfsSpec::bernoulli(Parameter::algebraic(lam));
  auto w2 = find_overlap(bern, 5);
  REQUIRE(w2.has_value());
  CHECK(w2->level == 3);
  CHECK(w2->p1 == IntPolynomial({1, -1, -1}));
  CHECK(w2->p2.is_zero());
  // number-field confirmation of the witness
  CHECK(NumberFieldElement(lam.field(), QPoly(w2->p1)).is_zero());

  auto free3 = IfsSpec::standard3(Parameter::transcendental(), Parameter::transcendental());
  CHECK_FALSE(find_overlap(free3, 6).has_value());
}

TEST_CASE("overlap witnesses extend to deeper levels") {
  // monotonicity: a witness at n stays a witness at n' >= n (pad equal digits)
  auto w = find_overlap(half_two(), 2);
  REQUIRE(w.has_value());
  for (size_t pad = 1; pad <= 2; ++pad) {
    Digits a = w->first, b = w->second;
    for (size_t i = 0; i < pad; ++i) {
      a.push_back(0);
      b.push_back(0);
    }
    auto [p1, p2] = overlap_polynomials(half_two(), a, b);
    CHECK(p1.eval(Rational(1, 2)) + Rational(2) * p2.eval(Rational(1, 2)) == 0);
    CHECK_FALSE((p1.is_zero() && p2.is_zero()));
  }
  // and find_overlap at a larger n_max still reports the smallest level
  auto w4 = find_overlap(half_two(), 4);
  CHECK(w4->level == 2);
}

TEST_CASE("full entropy iff no overlap") {
  for (int trial = 0; trial < 15; ++trial) {
    auto spec = random_rational_spec();
    auto hs = garsia_entropy_sequence(spec, 4);
    auto ov = find_overlap(spec, 4);
    double hp = spec.weight_entropy();
    bool full = true;
    for (size_t k = 0; k < hs.size(); ++k)
      full &= std::fabs(hs[k] - static_cast<double>(k + 1) * hp) < 1e-9;
    CHECK(full == !ov.has_value());
  }
}

TEST_CASE("subadditivity of garsia entropy") {
  for (int trial = 0; trial < 10; ++trial) {
    auto spec = random_rational_spec();
    auto hs = garsia_entropy_sequence(spec, 6);
    for (size_t a = 1; a <= 5; ++a)
      for (size_t b = 1; a + b <= 6; ++b)
        CHECK(hs[a + b - 1] <= hs[a - 1] + hs[b - 1] + 1e-9);
  }
}

TEST_CASE("xn membership") {
  // (1/2, 2) lies on two independent level-2 relations
  auto w = xn_membership(half_two(), 2);
  REQUIRE(w.has_value());
  IntPolynomial cross = w->p1 * w->q2 - w->p2 * w->q1;
  CHECK_FALSE(cross.is_zero());
  auto half = AlgebraicNumber::from_rational(Rational(1, 2));
  CHECK_FALSE(NumberFieldElement(half.field(), QPoly(w->p2)).is_zero());
  // both relations vanish at the point
  CHECK(w->p1.eval(Rational(1, 2)) + Rational(2) * w->p2.eval(Rational(1, 2)) == 0);
  CHECK(w->q1.eval(Rational(1, 2)) + Rational(2) * w->q2.eval(Rational(1, 2)) == 0);

  // no overlaps at all: no witness
  auto clean = IfsSpec::standard3(Parameter::rational(Rational(1, 3)), Parameter::rational(Rational(1, 5)));
  REQUIRE_FALSE(find_overlap(clean, 3).has_value());
  CHECK_FALSE(xn_membership(clean, 3).has_value());

  // exactly one curve through (1/3, 3): single relation, no independent pair
  auto one_curve = IfsSpec::standard3(Parameter::rational(Rational(1, 3)), Parameter::rational(Rational(3)));
  REQUIRE(find_overlap(one_curve, 2).has_value());
  CHECK_FALSE(xn_membership(one_curve, 2).has_value());
}

TEST_CASE("curve entropies") {
  auto base = IfsSpec::standard3(Parameter::transcendental(), Parameter::transcendental());
  // R = 1: per-digit collapse
  CHECK(curve_entropy(base, CurveSpec::non_degenerate(RationalMap::constant(1)), 4) ==
        doctest::Approx(4 * kCurveRate).epsilon(1e-13));
  // degenerate with symbolic lambda0: free semigroup
  CHECK(curve_entropy(base, CurveSpec::degenerate(Parameter::transcendental()), 3) ==
        doctest::Approx(3 * kLog3).epsilon(1e-13));

  // degenerate at the golden-conjugate point, Bernoulli forms: drop at n=3
  auto lam = AlgebraicNumber::real_root(IntPolynomial({-1, 1, 1}), Rational(0), Rational(1));
  auto bern = IfsSpec::bernoulli(Parameter::transcendental());
  auto curve = CurveSpec::degenerate(Parameter::algebraic(lam));
  auto seq = curve_entropy_sequence(bern, curve, 3);
  CHECK(seq[0] == doctest::Approx(kLog2).epsilon(1e-13));
  CHECK(seq[1] == doctest::Approx(2 * kLog2).epsilon(1e-13));
  CHECK(seq[2] < 3 * kLog2 - 1e-6);
  auto ov = find_overlap(IfsSpec::bernoulli(Parameter::algebraic(lam)), 3);
  REQUIRE(ov.has_value());
  CHECK(ov->level == 3);
}

TEST_CASE("curve entropy dominates specialization") {
  std::mt19937_64 g(11);
  auto base = IfsSpec::standard3(Parameter::transcendental(), Parameter::transcendental());
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Integer> num(1 + g() % 3), den(1 + g() % 3);
    for (auto& x : num) x = Integer(static_cast<long>(g() % 3) - 1);
    for (auto& x : den) x = Integer(static_cast<long>(g() % 3) - 1);
    IntPolynomial n(std::move(num)), d(std::move(den));
    if (n.is_zero()) n = IntPolynomial({1});
    if (d.is_zero()) d = IntPolynomial({1});
    RationalMap R(n, d, Integer(1));
    Rational lambda(1 + static_cast<long>(g() % 5), 7);
    lambda.canonicalize();
    if (R.den().eval(lambda) == 0) continue;
    IfsSpec point = IfsSpec::standard3(Parameter::rational(lambda), Parameter::rational(R.eval(lambda)));
    size_t n_lvl = 4;
    double curve_h = curve_entropy(base, CurveSpec::non_degenerate(R), n_lvl);
    double point_h = garsia_entropy(point, n_lvl);
    CHECK(curve_h >= point_h - 1e-9);
  }
}

TEST_CASE("restricted measures") {
  auto spec = half_two();
  auto empty = restricted_measure(spec, {});
  CHECK(empty.size() == 1);
  CHECK(shannon_entropy(empty) == 0.0);

  // disjoint-union convolution identity, exact
  auto full = restricted_measure(spec, {0, 1});
  auto part = convolve(restricted_measure(spec, {0}), restricted_measure(spec, {1}));
  CHECK(full == part);

  for (int trial = 0; trial < 10; ++trial) {
    auto s = random_rational_spec();
    std::vector<size_t> I, I1, I2;
    for (size_t j = 0; j < 5; ++j)
      if (rng() & 1) {
        I.push_back(j);
        (rng() & 1 ? I1 : I2).push_back(j);
      }
    auto lhs = restricted_measure(s, I);
    auto rhs = convolve(restricted_measure(s, I1), restricted_measure(s, I2));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("scaling identity for restricted measures") {
  // H(mu^I; r1 | r2) = H(mu^{k+I}; lambda^k r1 | lambda^k r2) at (1/2, 1, {0,1})
  IfsSpec spec = IfsSpec::standard3(Parameter::rational(Rational(1, 2)), Parameter::rational(Rational(2)));
  auto mu_I = restricted_measure_rational(spec, {0, 1});
  auto mu_shift = restricted_measure_rational(spec, {1, 2});
  Rational r1(1, 3), r2(5, 3);
  double lhs = scale_entropy(mu_I, r1).value - scale_entropy(mu_I, r2).value;
  double rhs = scale_entropy(mu_shift, r1 / 2).value - scale_entropy(mu_shift, r2 / 2).value;
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("dimension bounds") {
  auto free3 = IfsSpec::standard3(Parameter::rational(Rational(1, 2)), Parameter::transcendental());
  CHECK(dim_upper_bound(free3, 2) == doctest::Approx(1.0).epsilon(1e-13));

  // (1/2, 2), n=2: uncapped value H(2)/(2 log 2) ~ 1.3626, capped to 1
  double h2 = garsia_entropy(half_two(), 2);
  CHECK(h2 / (2 * kLog2) == doctest::Approx(1.3626).epsilon(1e-3));
  CHECK(dim_upper_bound(half_two(), 2) == 1.0);

  auto bern = IfsSpec::bernoulli(Parameter::rational(Rational(1, 2)));
  CHECK(dim_upper_bound(bern, 1) == doctest::Approx(1.0).epsilon(1e-13));

  auto sd = similarity_dimension(IfsSpec::standard3(Parameter::rational(Rational(1, 3)),
                                                    Parameter::transcendental()));
  CHECK(sd.value == doctest::Approx(1.0).epsilon(1e-13));
  auto sd2 = similarity_dimension(IfsSpec::standard3(Parameter::rational(Rational(1, 2)),
                                                     Parameter::transcendental()));
  CHECK(sd2.value == 1.0);
  CHECK(sd2.uncapped == doctest::Approx(kLog3 / kLog2).epsilon(1e-13));

  IfsSpec weighted = IfsSpec::standard3(Parameter::rational(Rational(1, 2)), Parameter::transcendental());
  weighted.weights = {Rational(1, 2), Rational(1, 4), Rational(1, 4)};
  auto sd3 = similarity_dimension(weighted);
  CHECK(sd3.uncapped == doctest::Approx(1.5).epsilon(1e-13));
  CHECK(sd3.value == 1.0);
}

TEST_CASE("guardrails trip") {
  auto free3 = IfsSpec::standard3(Parameter::transcendental(), Parameter::transcendental());
  EnumOptions tight;
  tight.max_raw_strings = 100;
  CHECK_THROWS_AS(garsia_entropy(free3, 8, tight), GuardrailExceeded);
  EnumOptions small;
  small.atom_limit = 10;
  CHECK_THROWS_AS(garsia_entropy(free3, 5, small), GuardrailExceeded);
}

TEST_CASE("parallel enumeration is deterministic") {
  auto spec = half_two();
  EnumOptions seq, par;
  par.jobs = 4;
  auto a = enumerate_level(spec, 12, seq);
  auto b = enumerate_level(spec, 12, par);
  CHECK(a == b);
}
