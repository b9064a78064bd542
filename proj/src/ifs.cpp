#include "garsia/ifs.hpp"

#include <cmath>
#include <set>

#include "garsia/distribution.hpp"

namespace garsia {

double Parameter::to_double() const {
  switch (kind_) {
    case Kind::Rational:
      return garsia::to_double(*rat_);
    case Kind::Algebraic:
      return alg_->to_double();
    default:
      throw std::invalid_argument("parameter has no numeric value");
  }
}

long IfsSpec::coeff_bound_L() const {
  long L = 0;
  for (const auto& [ai, bi] : forms)
    for (const auto& [aj, bj] : forms) {
      L = std::max(L, ai - aj);
      L = std::max(L, bi - bj);
    }
  return L;
}

double IfsSpec::weight_entropy() const {
  double h = 0;
  for (const auto& p : weights) h += entropy_of_prob(p);
  return h;
}

void IfsSpec::validate() const {
  if (forms.size() < 2) throw std::invalid_argument("IFS needs at least two maps");
  if (forms.size() != weights.size()) throw std::invalid_argument("forms/weights length mismatch");
  std::set<std::pair<long, long>> seen(forms.begin(), forms.end());
  if (seen.size() != forms.size()) throw std::invalid_argument("forms must be pairwise distinct");
  Rational total = 0;
  for (const auto& p : weights) {
    if (p <= 0) throw std::invalid_argument("weights must be positive");
    total += p;
  }
  if (total != 1) throw std::invalid_argument("weights must sum to 1");
  if (lambda.kind() == Parameter::Kind::FieldElement)
    throw std::invalid_argument("lambda cannot be a field element of tau");
  if (tau.kind() == Parameter::Kind::FieldElement && lambda.kind() != Parameter::Kind::Algebraic)
    throw std::invalid_argument("tau as a field element requires algebraic lambda");
  if (tau.kind() == Parameter::Kind::Algebraic && lambda.kind() == Parameter::Kind::Algebraic)
    throw std::invalid_argument(
        "independently algebraic lambda and tau are not supported; express tau in Q(lambda)");
  if (lambda.kind() == Parameter::Kind::Rational && (lambda.rat() <= 0 || lambda.rat() >= 1))
    throw std::invalid_argument("lambda must lie in (0,1)");
}

IfsSpec IfsSpec::standard3(Parameter lambda, Parameter tau) {
  IfsSpec s;
  s.forms = {{0, 0}, {1, 0}, {0, 1}};
  s.weights = {Rational(1, 3), Rational(1, 3), Rational(1, 3)};
  s.lambda = std::move(lambda);
  s.tau = std::move(tau);
  return s;
}

IfsSpec IfsSpec::bernoulli(Parameter lambda) {
  IfsSpec s;
  s.forms = {{0, 0}, {1, 0}};
  s.weights = {Rational(1, 2), Rational(1, 2)};
  s.lambda = std::move(lambda);
  s.tau = Parameter::transcendental();
  return s;
}

}  // namespace garsia
