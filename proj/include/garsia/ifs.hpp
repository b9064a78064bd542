#pragma once

#include <optional>
#include <string>
#include <vector>

#include "garsia/rational_map.hpp"

namespace garsia {

// One coordinate of a parameter pair (lambda, tau). Transcendental values
// are formal symbols: expression equality holds iff it holds identically
// as polynomials.
class Parameter {
 public:
  enum class Kind { Rational, Algebraic, FieldElement, Transcendental };

  static Parameter rational(Rational q) {
    Parameter p;
    p.kind_ = Kind::Rational;
    p.rat_ = std::move(q);
    return p;
  }
  static Parameter algebraic(AlgebraicNumber a) {
    Parameter p;
    p.kind_ = Kind::Algebraic;
    p.alg_ = std::move(a);
    return p;
  }
  // element of the *other* parameter's number field (tau in Q(lambda))
  static Parameter field_element(NumberFieldElement e) {
    Parameter p;
    p.kind_ = Kind::FieldElement;
    p.elem_ = std::move(e);
    return p;
  }
  static Parameter transcendental() {
    Parameter p;
    p.kind_ = Kind::Transcendental;
    return p;
  }

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ != Kind::Transcendental; }
  const Rational& rat() const { return *rat_; }
  const AlgebraicNumber& alg() const { return *alg_; }
  const NumberFieldElement& elem() const { return *elem_; }

  // numeric value when the parameter is a number (not a symbol)
  double to_double() const;

 private:
  Kind kind_ = Kind::Transcendental;
  std::optional<Rational> rat_;
  std::optional<AlgebraicNumber> alg_;
  std::optional<NumberFieldElement> elem_;
};

// Homogeneous IFS f_j(x) = lambda*x + T_j(1,tau) with linear forms
// T_j(Y1,Y2) = a_j*Y1 + b_j*Y2 and a strictly positive probability vector.
struct IfsSpec {
  std::vector<std::pair<long, long>> forms;  // (a_j, b_j), pairwise distinct
  std::vector<Rational> weights;
  Parameter lambda = Parameter::transcendental();
  Parameter tau = Parameter::transcendental();

  size_t m() const { return forms.size(); }
  // L = max{a_i - a_j, b_i - b_j}
  long coeff_bound_L() const;
  double weight_entropy() const;  // H(p) in nats

  void validate() const;

  static IfsSpec standard3(Parameter lambda, Parameter tau);  // forms 0, Y1, Y2, uniform weights
  static IfsSpec bernoulli(Parameter lambda);                 // forms 0, Y1, uniform weights
};

// Element of Gamma: a graph tau = R(lambda) or a vertical line lambda = lambda0.
struct CurveSpec {
  static CurveSpec non_degenerate(RationalMap R) { return CurveSpec{false, std::move(R), std::nullopt}; }
  static CurveSpec degenerate(Parameter lambda0) {
    return CurveSpec{true, std::nullopt, std::move(lambda0)};
  }

  bool is_degenerate;
  std::optional<RationalMap> R;       // non-degenerate
  std::optional<Parameter> lambda0;   // degenerate
};

}  // namespace garsia
