#include "garsia/scale_entropy.hpp"

#include <algorithm>
#include <vector>

namespace garsia {

namespace {

struct ScaledAtom {
  Integer base;    // floor(x/r)
  Rational frac;   // frac(x/r) in [0,1)
  Rational prob;
};

double entropy_at(const std::vector<ScaledAtom>& atoms, const Rational& t) {
  // cell of atom i at shift t is base_i + (frac_i + t >= 1)
  std::map<Integer, Rational> cells;
  for (const auto& a : atoms) {
    Integer cell = a.base;
    if (a.frac + t >= 1) cell += 1;
    auto [it, inserted] = cells.emplace(cell, a.prob);
    if (!inserted) it->second += a.prob;
  }
  double h = 0;
  for (const auto& [c, p] : cells) h += entropy_of_prob(p);
  return h;
}

std::vector<ScaledAtom> scaled_atoms(const DiscreteDistribution<Rational>& nu, const Rational& r) {
  std::vector<ScaledAtom> atoms;
  atoms.reserve(nu.size());
  for (const auto& [x, p] : nu) {
    Rational y = x / r;
    atoms.push_back({floor_int(y), frac_part(y), p});
  }
  return atoms;
}

}  // namespace

ScaleEntropyReport scale_entropy(const DiscreteDistribution<Rational>& nu, const Rational& r) {
  if (r <= 0) throw std::invalid_argument("scale_entropy: r must be positive");
  nu.check_valid();
  auto atoms = scaled_atoms(nu, r);

  std::vector<Rational> cuts;
  cuts.push_back(Rational(0));
  for (const auto& a : atoms)
    if (a.frac > 0) cuts.push_back(1 - a.frac);
  cuts.push_back(Rational(1));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double value = 0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double w = to_double(cuts[i + 1] - cuts[i]);
    value += w * entropy_at(atoms, cuts[i]);
  }
  return {r, value, cuts.size() - 2};
}

double scale_entropy_between(const DiscreteDistribution<Rational>& nu, const Rational& r1, const Rational& r2) {
  if (!(r1 > 0 && r1 <= r2)) throw std::invalid_argument("scale_entropy_between: need 0 < r1 <= r2");
  return scale_entropy(nu, r1).value - scale_entropy(nu, r2).value;
}

double scale_entropy_riemann(const DiscreteDistribution<Rational>& nu, const Rational& r, size_t grid_points) {
  auto atoms = scaled_atoms(nu, r);
  double acc = 0;
  for (size_t i = 0; i < grid_points; ++i) {
    Rational t(2 * static_cast<long>(i) + 1, 2 * static_cast<long>(grid_points));  // midpoint rule
    t.canonicalize();
    acc += entropy_at(atoms, t);
  }
  return acc / static_cast<double>(grid_points);
}

}  // namespace garsia
