#pragma once

#include "garsia/enumerate.hpp"
#include "garsia/ifs.hpp"
#include "garsia/selfsim.hpp"

namespace garsia {

// Law of the coefficient prefix of A_R = sum T_{xi_j}(1, R) X^j: atoms are
// collision classes keyed by the exact rational prefix vector.
struct SeriesDistribution {
  RationalMap R;
  size_t depth = 0;       // digits used
  size_t prefix_len = 0;  // coefficients tracked (key dimension)
  DiscreteDistribution<QVec> atoms;
};

// Level system whose key is the first prefix_len series coefficients.
// Digit j at position k contributes a_j at index k and b_j * c_i of R's
// expansion at indices k+i.
LevelSystem series_level_system(const IfsSpec& spec, const RationalMap& R, size_t prefix_len);

SeriesDistribution series_distribution(const IfsSpec& spec, const RationalMap& R, size_t depth,
                                       size_t prefix_len, const EnumOptions& opts = {});

// H(A_R; n): entropy of the joint law of the first n coefficients.
double coeff_prefix_entropy(const IfsSpec& spec, const RationalMap& R, size_t n,
                            const EnumOptions& opts = {});

// (1/n) H(A_R; n) for n = 1..n_max; nondecreasing, limit dim mu_R.
std::vector<double> ff_dim_lower_sequence(const IfsSpec& spec, const RationalMap& R, size_t n_max,
                                          const EnumOptions& opts = {});

// H(A_R^(n); l): first l coefficients of the depth-n truncation, l >= n.
double truncated_series_entropy(const IfsSpec& spec, const RationalMap& R, size_t n, size_t l,
                                const EnumOptions& opts = {});

// Smallest n <= n_max with 0 != Q in Q^(n), Q(X,1,R(X)) = 0, i.e.
// P1*den(R) + P2*num(R) = 0 identically.
std::optional<OverlapWitness> relation_search(const IfsSpec& spec, const RationalMap& R, size_t n_max,
                                              const EnumOptions& opts = {});

// marginal law of the first k coefficients
DiscreteDistribution<QVec> project_prefix(const DiscreteDistribution<QVec>& dist, size_t k);

// H(dist; full | first n-1 coords)
double conditional_entropy_last(const DiscreteDistribution<QVec>& dist, size_t n);

struct EntropyGrowthReport {
  double h_a = 0;   // H(A; n|n-1)
  double h_b = 0;   // H(B; n|n-1)
  double gain = 0;  // H(A+B; n|n-1) - H(A; n|n-1)
};

// Entropy growth of the coefficient-level sum of two independent series
// laws at common depth; the growth theorem's delta is measured, not asserted.
EntropyGrowthReport series_conditional_entropy_growth(const SeriesDistribution& a,
                                                      const SeriesDistribution& b,
                                                      const EnumOptions& opts = {});

}  // namespace garsia
