#pragma once

#include "garsia/distribution.hpp"

namespace garsia {

struct ScaleEntropyReport {
  Rational r;
  double value = 0;  // nats, >= 0
  size_t breakpoint_count = 0;
};

// Averaged entropy at scale r: the integral over t in [0,1) of the entropy
// of floor(x/r + t), x ~ nu. The integrand is piecewise constant in t with
// breakpoints at 1 - frac(x_i/r); the integral is evaluated in closed form
// as the breakpoint-weighted sum of piece entropies.
ScaleEntropyReport scale_entropy(const DiscreteDistribution<Rational>& nu, const Rational& r);

// H(nu; r1) - H(nu; r2); lies in [0, 2 log(r2/r1)] for 0 < r1 <= r2.
double scale_entropy_between(const DiscreteDistribution<Rational>& nu, const Rational& r1, const Rational& r2);

// Riemann-sum evaluation on a uniform t-grid; test oracle for the
// breakpoint decomposition, not used by the closed form.
double scale_entropy_riemann(const DiscreteDistribution<Rational>& nu, const Rational& r, size_t grid_points);

}  // namespace garsia
