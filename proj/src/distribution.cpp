#include "garsia/distribution.hpp"

#include <cmath>

namespace garsia {

double entropy_of_prob(const Rational& p) {
  if (p <= 0 || p >= 1) return 0.0;
  return -to_double(p) * log_rational(p);
}

InequalityPair weighted_log_bound(const std::vector<double>& y, const std::vector<double>& z) {
  if (y.size() != z.size()) throw std::invalid_argument("weighted_log_bound: length mismatch");
  double Y = 0, Z = 0;
  for (size_t i = 0; i < y.size(); ++i) {
    if (y[i] <= 0 || z[i] <= 0) throw std::invalid_argument("weighted_log_bound: entries must be positive");
    Y += y[i];
    Z += z[i];
  }
  double lhs = 0, rhs = 0;
  for (size_t i = 0; i < y.size(); ++i) {
    lhs += y[i] * (-std::log(z[i]));
    rhs += y[i] * (-std::log(y[i] * Z / Y));
  }
  return {lhs, rhs};
}

}  // namespace garsia
