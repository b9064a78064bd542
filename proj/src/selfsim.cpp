#include "garsia/selfsim.hpp"

#include <cmath>
#include <set>

namespace garsia {

namespace {

void place_block(QVec& out, size_t offset, const std::vector<Rational>& block) {
  for (size_t i = 0; i < block.size(); ++i) out[offset + i] = block[i];
}

// powers lambda^k in the rational mode
std::vector<Rational> rational_powers(const Rational& x, size_t n) {
  std::vector<Rational> p(n);
  Rational acc = 1;
  for (size_t k = 0; k < n; ++k) {
    p[k] = acc;
    acc *= x;
  }
  return p;
}

std::vector<NumberFieldElement> field_powers(const NumberFieldElement& x, size_t n) {
  std::vector<NumberFieldElement> p;
  p.reserve(n);
  NumberFieldElement acc = NumberFieldElement::from_rational(x.field(), Rational(1));
  for (size_t k = 0; k < n; ++k) {
    p.push_back(acc);
    acc = acc * x;
  }
  return p;
}

}  // namespace

LevelSystem point_level_system(const IfsSpec& spec, size_t n) {
  spec.validate();
  LevelSystem sys;
  sys.num_digits = spec.m();
  sys.weights = spec.weights;
  const auto forms = spec.forms;

  using PK = Parameter::Kind;
  PK lk = spec.lambda.kind(), tk = spec.tau.kind();

  if (lk == PK::Rational) {
    auto pow = rational_powers(spec.lambda.rat(), n);
    if (tk == PK::Rational) {
      Rational t = spec.tau.rat();
      sys.key_dim = 1;
      sys.increment = [forms, pow, t](size_t j, size_t k) {
        return QVec{(Rational(forms[j].first) + t * Rational(forms[j].second)) * pow[k]};
      };
    } else if (tk == PK::Algebraic) {
      auto fld = spec.tau.alg().field();
      NumberFieldElement sigma = spec.tau.alg().as_element();
      size_t d = static_cast<size_t>(fld->degree());
      sys.key_dim = d;
      sys.increment = [forms, pow, sigma, fld, d](size_t j, size_t k) {
        NumberFieldElement v = (NumberFieldElement::from_rational(fld, Rational(forms[j].first)) +
                                sigma * Rational(forms[j].second)) *
                               pow[k];
        QVec out(d, Rational(0));
        place_block(out, 0, v.rep_padded());
        return out;
      };
    } else {  // tau transcendental
      sys.key_dim = 2;
      sys.increment = [forms, pow](size_t j, size_t k) {
        return QVec{Rational(forms[j].first) * pow[k], Rational(forms[j].second) * pow[k]};
      };
    }
    return sys;
  }

  if (lk == PK::Algebraic) {
    auto fld = spec.lambda.alg().field();
    size_t d = static_cast<size_t>(fld->degree());
    auto pow = field_powers(spec.lambda.alg().as_element(), n);
    if (tk == PK::Rational || tk == PK::FieldElement) {
      NumberFieldElement sigma = tk == PK::Rational
                                     ? NumberFieldElement::from_rational(fld, spec.tau.rat())
                                     : spec.tau.elem();
      sys.key_dim = d;
      sys.increment = [forms, pow, sigma, fld, d](size_t j, size_t k) {
        NumberFieldElement v = (NumberFieldElement::from_rational(fld, Rational(forms[j].first)) +
                                sigma * Rational(forms[j].second)) *
                               pow[k];
        QVec out(d, Rational(0));
        place_block(out, 0, v.rep_padded());
        return out;
      };
    } else {  // tau transcendental: track P1(lambda) and P2(lambda) separately
      sys.key_dim = 2 * d;
      sys.increment = [forms, pow, d](size_t j, size_t k) {
        QVec out(2 * d, Rational(0));
        place_block(out, 0, (pow[k] * Rational(forms[j].first)).rep_padded());
        place_block(out, d, (pow[k] * Rational(forms[j].second)).rep_padded());
        return out;
      };
    }
    return sys;
  }

  // lambda transcendental: values are polynomials in the symbol
  if (tk == PK::Rational) {
    Rational t = spec.tau.rat();
    sys.key_dim = n;
    sys.increment = [forms, t, n](size_t j, size_t k) {
      QVec out(n, Rational(0));
      out[k] = Rational(forms[j].first) + t * Rational(forms[j].second);
      return out;
    };
  } else if (tk == PK::Algebraic) {
    auto fld = spec.tau.alg().field();
    NumberFieldElement sigma = spec.tau.alg().as_element();
    size_t d = static_cast<size_t>(fld->degree());
    sys.key_dim = n * d;
    sys.increment = [forms, sigma, fld, d, n](size_t j, size_t k) {
      NumberFieldElement v = NumberFieldElement::from_rational(fld, Rational(forms[j].first)) +
                             sigma * Rational(forms[j].second);
      QVec out(n * d, Rational(0));
      place_block(out, k * d, v.rep_padded());
      return out;
    };
  } else {  // both symbols free
    sys.key_dim = 2 * n;
    sys.increment = [forms, n](size_t j, size_t k) {
      QVec out(2 * n, Rational(0));
      out[2 * k] = Rational(forms[j].first);
      out[2 * k + 1] = Rational(forms[j].second);
      return out;
    };
  }
  return sys;
}

LevelSystem curve_level_system(const IfsSpec& spec, const CurveSpec& curve, size_t n) {
  if (curve.is_degenerate) {
    // tau unconstrained along the vertical line (assumes tau not in Q(lambda0))
    IfsSpec line = spec;
    line.lambda = *curve.lambda0;
    line.tau = Parameter::transcendental();
    return point_level_system(line, n);
  }
  spec.validate();
  const RationalMap& R = *curve.R;
  LevelSystem sys;
  sys.num_digits = spec.m();
  sys.weights = spec.weights;
  const auto forms = spec.forms;
  // collision along the graph tau = R(lambda): the digit difference satisfies
  // (dP1)*den + (dP2)*num = 0 identically, so the class key is the polynomial
  // P1*den + P2*num laid out as its coefficient vector
  size_t poly_len = static_cast<size_t>(std::max(R.num().degree(), R.den().degree())) + n;
  sys.key_dim = poly_len;
  IntPolynomial num = R.num(), den = R.den();
  sys.increment = [forms, num, den, poly_len](size_t j, size_t k) {
    IntPolynomial contrib =
        (den * Integer(forms[j].first) + num * Integer(forms[j].second)) * IntPolynomial::monomial(k);
    QVec out(poly_len, Rational(0));
    for (size_t i = 0; i < contrib.size(); ++i) out[i] = Rational(contrib[i]);
    return out;
  };
  return sys;
}

DiscreteDistribution<QVec> enumerate_level(const IfsSpec& spec, size_t n, const EnumOptions& opts) {
  auto sys = point_level_system(spec, n);
  std::vector<size_t> positions(n);
  for (size_t i = 0; i < n; ++i) positions[i] = i;
  return fold_distribution(sys, positions, opts);
}

double garsia_entropy(const IfsSpec& spec, size_t n, const EnumOptions& opts) {
  return shannon_entropy(enumerate_level(spec, n, opts));
}

std::vector<double> garsia_entropy_sequence(const IfsSpec& spec, size_t n, const EnumOptions& opts) {
  return fold_entropy_sequence(point_level_system(spec, n), n, opts);
}

double entropy_rate_upper(const IfsSpec& spec, size_t n, const EnumOptions& opts) {
  auto hs = garsia_entropy_sequence(spec, n, opts);
  double best = hs[0];
  for (size_t k = 1; k < hs.size(); ++k) best = std::min(best, hs[k] / static_cast<double>(k + 1));
  return best;
}

std::pair<IntPolynomial, IntPolynomial> overlap_polynomials(const IfsSpec& spec, const Digits& a,
                                                            const Digits& b) {
  std::vector<Integer> c1(a.size(), Integer(0)), c2(a.size(), Integer(0));
  for (size_t k = 0; k < a.size(); ++k) {
    c1[k] = Integer(spec.forms[a[k]].first - spec.forms[b[k]].first);
    c2[k] = Integer(spec.forms[a[k]].second - spec.forms[b[k]].second);
  }
  IntPolynomial p1{std::vector<Integer>(c1)}, p2{std::vector<Integer>(c2)};
  // normalize overall sign: first nonzero coefficient of (p1, p2) positive
  int lead = 0;
  for (size_t k = 0; k < a.size() && lead == 0; ++k) {
    if (p1.coeff(k) != 0)
      lead = sgn(p1.coeff(k));
    else if (p2.coeff(k) != 0)
      lead = sgn(p2.coeff(k));
  }
  if (lead < 0) {
    p1 = -p1;
    p2 = -p2;
  }
  return {p1, p2};
}

std::optional<OverlapWitness> find_overlap(const IfsSpec& spec, size_t n_max, const EnumOptions& opts) {
  auto sys = point_level_system(spec, n_max);
  auto hit = first_collision(sys, n_max, opts);
  if (!hit) return std::nullopt;
  OverlapWitness w;
  w.level = hit->level;
  w.first = hit->first;
  w.second = hit->second;
  auto [p1, p2] = overlap_polynomials(spec, w.first, w.second);
  w.p1 = p1;
  w.p2 = p2;
  return w;
}

std::optional<XnWitness> xn_membership(const IfsSpec& spec, size_t n, const EnumOptions& opts) {
  using PK = Parameter::Kind;
  if (spec.lambda.kind() != PK::Algebraic && spec.lambda.kind() != PK::Rational)
    throw std::invalid_argument("xn_membership needs exact algebraic parameters");
  if (!spec.tau.is_exact()) throw std::invalid_argument("xn_membership needs exact tau");

  auto classes = collision_classes(point_level_system(spec, n), n, opts);

  // eta as an algebraic number for the exact P2(eta) != 0 test
  AlgebraicNumber eta = spec.lambda.kind() == PK::Rational
                            ? AlgebraicNumber::from_rational(spec.lambda.rat())
                            : spec.lambda.alg();

  constexpr size_t kWitnessCap = 4096;
  std::set<std::pair<IntPolynomial, IntPolynomial>> seen;
  std::vector<std::pair<IntPolynomial, IntPolynomial>> qs;
  for (const auto& [key, strings] : classes) {
    if (strings.size() < 2) continue;
    for (size_t i = 0; i < strings.size(); ++i)
      for (size_t j = i + 1; j < strings.size(); ++j) {
        auto q = overlap_polynomials(spec, strings[i], strings[j]);
        if (q.first.is_zero() && q.second.is_zero()) continue;
        if (seen.insert(q).second) {
          qs.push_back(q);
          if (qs.size() > kWitnessCap)
            throw GuardrailExceeded("too many vanishing relations at level " + std::to_string(n));
        }
      }
  }

  auto p2_nonzero_at_eta = [&](const IntPolynomial& p2) {
    if (p2.is_zero()) return false;
    NumberFieldElement v(eta.field(), QPoly(p2));
    return !v.is_zero();
  };

  for (size_t i = 0; i < qs.size(); ++i) {
    if (!p2_nonzero_at_eta(qs[i].second)) continue;
    for (size_t j = 0; j < qs.size(); ++j) {
      if (j == i) continue;
      IntPolynomial cross = qs[i].first * qs[j].second - qs[i].second * qs[j].first;
      if (!cross.is_zero()) {
        XnWitness w;
        w.p1 = qs[i].first;
        w.p2 = qs[i].second;
        w.q1 = qs[j].first;
        w.q2 = qs[j].second;
        return w;
      }
    }
  }
  return std::nullopt;
}

double curve_entropy(const IfsSpec& spec, const CurveSpec& curve, size_t n, const EnumOptions& opts) {
  auto sys = curve_level_system(spec, curve, n);
  std::vector<size_t> positions(n);
  for (size_t i = 0; i < n; ++i) positions[i] = i;
  return shannon_entropy(fold_distribution(sys, positions, opts));
}

std::vector<double> curve_entropy_sequence(const IfsSpec& spec, const CurveSpec& curve, size_t n,
                                           const EnumOptions& opts) {
  return fold_entropy_sequence(curve_level_system(spec, curve, n), n, opts);
}

DiscreteDistribution<QVec> restricted_measure(const IfsSpec& spec, const std::vector<size_t>& I,
                                              const EnumOptions& opts) {
  if (!spec.lambda.is_exact() || !spec.tau.is_exact())
    throw std::invalid_argument("restricted_measure needs exact parameters");
  size_t n = 0;
  for (size_t j : I) n = std::max(n, j + 1);
  auto sys = point_level_system(spec, std::max<size_t>(n, 1));
  return fold_distribution(sys, I, opts);
}

DiscreteDistribution<Rational> restricted_measure_rational(const IfsSpec& spec, const std::vector<size_t>& I,
                                                           const EnumOptions& opts) {
  if (spec.lambda.kind() != Parameter::Kind::Rational || spec.tau.kind() != Parameter::Kind::Rational)
    throw std::invalid_argument("rational restricted measure needs rational parameters");
  auto dist = restricted_measure(spec, I, opts);
  DiscreteDistribution<Rational> out;
  for (const auto& [k, p] : dist) out.add(k[0], p);
  return out;
}

double log_inv_lambda(const Parameter& lambda) {
  if (lambda.kind() == Parameter::Kind::Rational) return -log_rational(lambda.rat());
  return -std::log(lambda.to_double());
}

double dim_upper_bound(const IfsSpec& spec, size_t n, const EnumOptions& opts) {
  double h = garsia_entropy(spec, n, opts);
  double denom = static_cast<double>(n) * log_inv_lambda(spec.lambda);
  return std::min(1.0, h / denom);
}

SimilarityDimension similarity_dimension(const IfsSpec& spec) {
  double uncapped = spec.weight_entropy() / log_inv_lambda(spec.lambda);
  return {std::min(1.0, uncapped), uncapped};
}

}  // namespace garsia
