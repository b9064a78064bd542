#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>

#include "garsia/algebraic.hpp"
#include "garsia/roots.hpp"

namespace garsia {

struct MahlerReport {
  double value = 1;       // midpoint of the certified enclosure
  Rational lo, hi;        // certified enclosure of M(P)
  Integer l1;             // length l1(P)
  bool le_l1 = false;     // certified M(P) <= l1(P)
};

// M(P) = |lead| * prod over roots outside the unit disk of |root|.
MahlerReport mahler_measure(const IntPolynomial& P, const Rational& radius_goal = Rational(1, Integer(1) << 80));

// Certified rational enclosure of the Mahler measure of an algebraic number.
std::pair<Rational, Rational> mahler_enclosure(const AlgebraicNumber& a);

// 2^{-n-1} n^{-5n} l^{-4n}, exact.
Rational root_separation_bound(long n, const Integer& l);

struct JensenReport {
  long count_below = 0;    // certified # of nonzero roots with |z| < a(k)
  double bound = 0;        // k (1 + log l / log(k+1))
  double a_k = 0;          // the radius a(k)
  bool ok = false;         // count_below <= bound
};

// a(k) = k/(k+1) * (k+1)^{-1/k}; comparisons against |z| are exact
// (both sides raised to the k-th power).
JensenReport jensen_root_count_check(const IntPolynomial& P, long k, const Integer& l);

struct CloseRootReport {
  CertifiedRoot root;      // nearest root of P to lambda
  double distance = 0;     // certified upper bound on |lambda - root|
  double radius_bound = 0; // (2^n eps^-n r)^{c / log l}
  double achieved_c = 0;   // smallest exponent that certifies the containment
  bool within_radius = false;
};

// Lemma: |P(lambda)| <= r with r < eps^n 2^-n and eps <= |lambda| <= 1-eps
// forces a root within (2^n eps^-n r)^{c/log l}. c is nonconstructive in
// the statement; the checker takes it as input (default 1) and reports the
// achieved exponent. Throws HypothesisViolated naming the failing clause.
CloseRootReport close_root(const IntPolynomial& P, const Rational& lambda, const Rational& r,
                           const Rational& eps, const Integer& l, double c = 1.0);

struct ValueBoundReport {
  bool is_zero = false;
  double value = 0;        // |P(lambda)| when nonzero
  double bound = 0;
  bool certified_ge = false;  // value >= bound, certified through rational enclosures
};

// P(lambda) = 0 or |P(lambda)| >= (l n)^{-deg lambda} M(lambda)^{-n}.
ValueBoundReport value_lower_bound_check(const IntPolynomial& P, const AlgebraicNumber& lambda,
                                         const Integer& l, long n);

// Variant when lambda is itself a root of a nonzero member of P_l^(n):
// P(lambda) = 0 or |P(lambda)| >= (l n)^{-2n}.
ValueBoundReport value_lower_bound_at_root_check(const IntPolynomial& P, const AlgebraicNumber& lambda,
                                                 const Integer& l, long n);

// lambda for the Dimitrov test: a rational, an element of Q(eta), or an
// independent real algebraic number.
using PointArg = std::variant<Rational, NumberFieldElement, AlgebraicNumber>;

struct DimitrovReport {
  bool hypotheses_hold = false;
  std::string failing_clause;  // set when !hypotheses_hold
  long order = -1;             // exact vanishing order of P at eta (when hypotheses hold)
  bool order_ge_k = false;
};

// Multiplicity lemma: under the alpha-threshold and the two-sided window
// (alpha M(eta))^{n'/k} |P(lambda)|^{1/k} <= |lambda-eta| <= (alpha M(eta))^{-n'},
// eta is a zero of P of order >= k. All window comparisons are performed in
// exact rational arithmetic (k-th powers, integer exponents). A Hold verdict
// is conservative: it certifies the true hypotheses, then cross-checks the
// exact order. nprime declares the membership P in P_l^(n') and may exceed
// deg P + 1; 0 means deg P + 1.
DimitrovReport dimitrov_test(const IntPolynomial& P, const PointArg& lambda, const AlgebraicNumber& eta,
                             long k, const Rational& alpha = Rational(2), long nprime = 0);

struct TuranReport {
  double max_power_sum = 0;    // max over j in {m+1..m+n} of |sum b_i z_i^j|
  double guaranteed_lower = 0; // min over the same j of the theorem's bound
  long h = 0;
  long witness_j = 0;          // a j achieving |S_j| >= bound_j
  bool holds = false;
};

// Turan power-sum theorem: there is j in {m+1..m+n} with
// |b_1 z_1^j + ... + b_n z_n^j| >= 2 ((d1-d2)/12e)^n |b_1+...+b_h| |z_1|^j.
// Requires z_1 != 0, the list ordered by |z_1 - z_i| ascending,
// 0 < d2 < d1 < n/(m+n+1), and the gap condition at h.
TuranReport turan_bound(const std::vector<std::complex<double>>& z, const std::vector<std::complex<double>>& b,
                        long m, double d1, double d2);

struct PowerSumReport {
  bool hypothesis_holds = false;  // power sums within delta for j = 1..2M
  bool delta_in_regime = false;   // delta small enough for the conclusion
  bool sizes_equal = false;
  double product_ratio_dev = 0;   // |1 - prod U / prod W|
  bool ratio_ok = false;          // deviation <= epsilon
};

// Close power sums up to order 2M force equal multiset sizes and nearly
// equal products. delta_regime(epsilon, M) is the explicit threshold from
// the proof's Turan application.
double power_sum_delta_regime(double epsilon, long M);
PowerSumReport power_sum_multiset_check(const std::vector<std::complex<double>>& U,
                                        const std::vector<std::complex<double>>& W, long M, double delta,
                                        double epsilon);

}  // namespace garsia
