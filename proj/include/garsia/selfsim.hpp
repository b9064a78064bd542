#pragma once

#include "garsia/enumerate.hpp"
#include "garsia/ifs.hpp"

namespace garsia {

// A level-n overlap relation Q(X,Y1,Y2) = P1(X)Y1 + P2(X)Y2 in Q^(n),
// produced as the difference of two digit strings with equal value.
struct OverlapWitness {
  size_t level = 0;
  Digits first, second;
  IntPolynomial p1, p2;  // sign-normalized: first nonzero coefficient of (p1,p2) positive
};

struct XnWitness {
  IntPolynomial p1, p2;    // Q with P2(eta) != 0
  IntPolynomial q1, q2;    // Qtilde, independent: p1*q2 - p2*q1 != 0
};

struct SimilarityDimension {
  double value = 0;     // min{1, H(p)/log lambda^{-1}}
  double uncapped = 0;  // H(p)/log lambda^{-1}
};

// The level system of A^(n): digit j at position k contributes T_j(1,tau)*lambda^k,
// keys in the (lambda,tau)-mode's value domain. n bounds the positions used.
LevelSystem point_level_system(const IfsSpec& spec, size_t n);

// The level system of A_gamma^(n) along a curve in Gamma.
LevelSystem curve_level_system(const IfsSpec& spec, const CurveSpec& curve, size_t n);

// Law of A^(n) as a distribution over collision classes.
DiscreteDistribution<QVec> enumerate_level(const IfsSpec& spec, size_t n, const EnumOptions& opts = {});

// H(A^(n)) in nats.
double garsia_entropy(const IfsSpec& spec, size_t n, const EnumOptions& opts = {});

// H(A^(k)) for k = 1..n.
std::vector<double> garsia_entropy_sequence(const IfsSpec& spec, size_t n, const EnumOptions& opts = {});

// min over k <= n of H(A^(k))/k; certified upper bound for h(lambda,tau).
double entropy_rate_upper(const IfsSpec& spec, size_t n, const EnumOptions& opts = {});

// Smallest n <= n_max admitting 0 != Q in Q^(n) with Q(lambda,1,tau) = 0.
std::optional<OverlapWitness> find_overlap(const IfsSpec& spec, size_t n_max, const EnumOptions& opts = {});

// Membership in X^(n) for exact algebraic (eta, sigma): two vanishing
// relations, not all proportional, with P2(eta) != 0.
std::optional<XnWitness> xn_membership(const IfsSpec& spec, size_t n, const EnumOptions& opts = {});

double curve_entropy(const IfsSpec& spec, const CurveSpec& curve, size_t n, const EnumOptions& opts = {});
std::vector<double> curve_entropy_sequence(const IfsSpec& spec, const CurveSpec& curve, size_t n,
                                           const EnumOptions& opts = {});

// Law of sum_{j in I} T_j(1,tau) lambda^j over the mode's value domain.
DiscreteDistribution<QVec> restricted_measure(const IfsSpec& spec, const std::vector<size_t>& I,
                                              const EnumOptions& opts = {});
// Rational-parameter convenience: atoms on Q, usable with scale_entropy.
DiscreteDistribution<Rational> restricted_measure_rational(const IfsSpec& spec, const std::vector<size_t>& I,
                                                           const EnumOptions& opts = {});

// log lambda^{-1} for a numeric lambda
double log_inv_lambda(const Parameter& lambda);

// min{1, H(A^(n)) / (n log lambda^{-1})}
double dim_upper_bound(const IfsSpec& spec, size_t n, const EnumOptions& opts = {});

SimilarityDimension similarity_dimension(const IfsSpec& spec);

// Q polynomial pair from a pair of digit strings (difference of forms).
std::pair<IntPolynomial, IntPolynomial> overlap_polynomials(const IfsSpec& spec, const Digits& a,
                                                            const Digits& b);

}  // namespace garsia
