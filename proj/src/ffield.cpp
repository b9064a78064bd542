#include "garsia/ffield.hpp"

namespace garsia {

LevelSystem series_level_system(const IfsSpec& spec, const RationalMap& R, size_t prefix_len) {
  if (!R.is_power_series()) throw NotPowerSeriesError("R is not a power series (den(0) = 0)");
  LevelSystem sys;
  sys.num_digits = spec.m();
  sys.weights = spec.weights;
  sys.key_dim = prefix_len;
  auto expansion = R.series_prefix(prefix_len);
  auto forms = spec.forms;
  sys.increment = [forms, expansion, prefix_len](size_t j, size_t k) {
    QVec out(prefix_len, Rational(0));
    if (k < prefix_len) out[k] += Rational(forms[j].first);
    for (size_t i = 0; k + i < prefix_len; ++i) out[k + i] += Rational(forms[j].second) * expansion[i];
    return out;
  };
  return sys;
}

SeriesDistribution series_distribution(const IfsSpec& spec, const RationalMap& R, size_t depth,
                                       size_t prefix_len, const EnumOptions& opts) {
  auto sys = series_level_system(spec, R, prefix_len);
  std::vector<size_t> positions(depth);
  for (size_t i = 0; i < depth; ++i) positions[i] = i;
  return {R, depth, prefix_len, fold_distribution(sys, positions, opts)};
}

double coeff_prefix_entropy(const IfsSpec& spec, const RationalMap& R, size_t n, const EnumOptions& opts) {
  // the first n coefficients depend only on the first n digits
  return shannon_entropy(series_distribution(spec, R, n, n, opts).atoms);
}

DiscreteDistribution<QVec> project_prefix(const DiscreteDistribution<QVec>& dist, size_t k) {
  DiscreteDistribution<QVec> out;
  for (const auto& [key, p] : dist) {
    QVec head(key.begin(), key.begin() + std::min(k, key.size()));
    out.add(std::move(head), p);
  }
  return out;
}

std::vector<double> ff_dim_lower_sequence(const IfsSpec& spec, const RationalMap& R, size_t n_max,
                                          const EnumOptions& opts) {
  // one fold at prefix length n_max; H(A_R; k) is the entropy of the
  // first-k-coordinate marginal after k digits (later digits do not touch
  // coefficients below k)
  auto sys = series_level_system(spec, R, n_max);
  std::vector<double> out;
  out.reserve(n_max);
  auto cur = DiscreteDistribution<QVec>::delta(QVec(sys.key_dim, Rational(0)));
  std::vector<size_t> one(1);
  for (size_t k = 0; k < n_max; ++k) {
    one[0] = k;
    // single-position fold step reusing the kernel
    DiscreteDistribution<QVec> next;
    for (const auto& [key, p] : cur)
      for (size_t j = 0; j < sys.num_digits; ++j) {
        QVec kk = key;
        add_in_place(kk, sys.increment(j, k));
        next.add(std::move(kk), p * sys.weights[j]);
      }
    if (next.size() > opts.atom_limit) throw GuardrailExceeded("atom limit exceeded");
    cur = std::move(next);
    out.push_back(shannon_entropy(project_prefix(cur, k + 1)) / static_cast<double>(k + 1));
  }
  return out;
}

double truncated_series_entropy(const IfsSpec& spec, const RationalMap& R, size_t n, size_t l,
                                const EnumOptions& opts) {
  if (l < n) throw std::invalid_argument("truncated_series_entropy requires l >= n");
  return shannon_entropy(series_distribution(spec, R, n, l, opts).atoms);
}

std::optional<OverlapWitness> relation_search(const IfsSpec& spec, const RationalMap& R, size_t n_max,
                                              const EnumOptions& opts) {
  if (!R.is_power_series()) throw NotPowerSeriesError("relation_search needs R in Q[[X]]");
  IfsSpec free_spec = spec;
  free_spec.lambda = Parameter::transcendental();
  free_spec.tau = Parameter::transcendental();
  auto sys = curve_level_system(free_spec, CurveSpec::non_degenerate(R), n_max);
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

double conditional_entropy_last(const DiscreteDistribution<QVec>& dist, size_t n) {
  if (n == 0) throw std::invalid_argument("conditional_entropy_last: n >= 1");
  return shannon_entropy(dist) - shannon_entropy(project_prefix(dist, n - 1));
}

EntropyGrowthReport series_conditional_entropy_growth(const SeriesDistribution& a,
                                                      const SeriesDistribution& b,
                                                      const EnumOptions& opts) {
  if (a.prefix_len != b.prefix_len)
    throw std::invalid_argument("series laws must share the prefix length");
  size_t n = a.prefix_len;
  EntropyGrowthReport rep;
  rep.h_a = conditional_entropy_last(a.atoms, n);
  rep.h_b = conditional_entropy_last(b.atoms, n);
  auto sum = convolve(a.atoms, b.atoms, opts.atom_limit);
  rep.gain = conditional_entropy_last(sum, n) - rep.h_a;
  return rep;
}

}  // namespace garsia
