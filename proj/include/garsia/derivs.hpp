#pragma once

#include "garsia/enumerate.hpp"
#include "garsia/ifs.hpp"

namespace garsia {

// The derivative system of order K at an exact lambda: the random vectors
// B^(n) = (A^(n)(lambda), A^(n)'(lambda), ..., A^(n)^{(K-1)}(lambda)).
struct DerivSystem {
  RationalMap R = RationalMap::constant(1);
  Parameter lambda;  // Rational or Algebraic, not a pole of R
  size_t K = 1;
  std::vector<std::pair<long, long>> forms;
  std::vector<Rational> weights;

  void validate() const;
  static DerivSystem standard3(RationalMap R, Parameter lambda, size_t K);
};

// Lower bidiagonal K x K matrix: diagonal lambda, subdiagonal 1..K-1.
struct DerivMatrix {
  size_t K = 0;
  std::vector<std::vector<Rational>> entries;
};

DerivMatrix theta(const Rational& lambda, size_t K);

// v_j = (T_j(1, R(lambda)), T_j(0, R'(lambda)), ..., T_j(0, R^{(K-1)}(lambda))),
// exact in Q; the lambda must be rational here.
std::vector<Rational> translation_vector(const DerivSystem& sys, size_t j);

// B-vector of a concrete digit string, computed BOTH by the one-step affine
// recursion and by direct symbolic differentiation; the two are asserted
// exactly equal before returning.
std::vector<Rational> b_state(const DerivSystem& sys, const Digits& digits);

// Level system with derivative-vector keys over Q or Q(eta).
LevelSystem deriv_level_system(const DerivSystem& sys, size_t n);

double deriv_entropy(const DerivSystem& sys, size_t n, const EnumOptions& opts = {});
std::vector<double> deriv_entropy_sequence(const DerivSystem& sys, size_t n, const EnumOptions& opts = {});
double deriv_entropy_rate_upper(const DerivSystem& sys, size_t n, const EnumOptions& opts = {});

// Collision predicate straight from the definition: the integer polynomial
// dP1*den(R) + dP2*num(R) built from the digit difference vanishes to order
// >= K at lambda. Used to cross-check the enumeration keys.
bool digits_collide_by_order(const DerivSystem& sys, const Digits& a, const Digits& b);

// Upper bound h/log(lambda^-1) on the dimension of the limiting self-affine
// measure (which this artifact does not materialize).
double deriv_dim_upper_report(const DerivSystem& sys, size_t n, const EnumOptions& opts = {});

// Explicit threshold for the multiplicity lemma: if P1, P2 have coefficients
// bounded by l, R in R_l, lambda in (eps, 1-eps), and P1 + P2 R vanishes at
// lambda to order >= this value, then the first N series coefficients of
// P1 + P2 R vanish. Derived from Jensen's formula on the disk of radius
// 1 - eps/2 with the coefficient bound |c_j| <= 2 l^2 (j+1).
double multiplicity_order_threshold(double eps, long N, const Integer& l);

}  // namespace garsia
