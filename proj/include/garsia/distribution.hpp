#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "garsia/errors.hpp"
#include "garsia/rational.hpp"

namespace garsia {

// Default cap on atom counts for operations that can blow up.
inline constexpr size_t kDefaultAtomLimit = 20'000'000;

// Finite distribution with exact rational probabilities over a canonically
// ordered value domain. Immutable in spirit: build once, then query.
template <class Key>
class DiscreteDistribution {
 public:
  using Map = std::map<Key, Rational>;

  DiscreteDistribution() = default;

  static DiscreteDistribution delta(Key k) {
    DiscreteDistribution d;
    d.atoms_.emplace(std::move(k), Rational(1));
    return d;
  }

  static DiscreteDistribution from_atoms(std::vector<std::pair<Key, Rational>> atoms) {
    DiscreteDistribution d;
    for (auto& [k, p] : atoms) d.add(std::move(k), std::move(p));
    d.check_valid();
    return d;
  }

  // merge-add an atom (duplicate keys accumulate)
  void add(Key k, Rational p) {
    auto [it, inserted] = atoms_.emplace(std::move(k), p);
    if (!inserted) it->second += p;
  }

  void check_valid() const {
    Rational total = 0;
    for (const auto& [k, p] : atoms_) {
      if (p <= 0) throw std::invalid_argument("non-positive atom probability");
      total += p;
    }
    if (total != 1) throw std::invalid_argument("probabilities do not sum to 1");
  }

  size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  const Map& atoms() const { return atoms_; }
  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }

  Rational prob(const Key& k) const {
    auto it = atoms_.find(k);
    return it == atoms_.end() ? Rational(0) : it->second;
  }

  bool operator==(const DiscreteDistribution& o) const { return atoms_ == o.atoms_; }

 private:
  Map atoms_;
};

double entropy_of_prob(const Rational& p);

// Shannon entropy in nats: -sum p log p, exact rational atoms, float logs.
template <class Key>
double shannon_entropy(const DiscreteDistribution<Key>& nu) {
  double h = 0;
  for (const auto& [k, p] : nu) h += entropy_of_prob(p);
  return h;
}

// Law of X+Y for independent X ~ a, Y ~ b over an additive key domain.
template <class Key>
DiscreteDistribution<Key> convolve(const DiscreteDistribution<Key>& a, const DiscreteDistribution<Key>& b,
                                   size_t atom_limit = kDefaultAtomLimit) {
  if (a.size() > 0 && b.size() > atom_limit / a.size() + 1)
    throw GuardrailExceeded("convolution would exceed the atom limit");
  DiscreteDistribution<Key> out;
  for (const auto& [ka, pa] : a)
    for (const auto& [kb, pb] : b) {
      out.add(ka + kb, pa * pb);
      if (out.size() > atom_limit) throw GuardrailExceeded("convolution exceeded the atom limit");
    }
  return out;
}

template <class Key>
DiscreteDistribution<Key> convolve_power(const DiscreteDistribution<Key>& nu, unsigned n,
                                         size_t atom_limit = kDefaultAtomLimit) {
  if (n == 0) throw std::invalid_argument("convolve_power: n >= 1 required");
  DiscreteDistribution<Key> out = nu;
  for (unsigned i = 1; i < n; ++i) out = convolve(out, nu, atom_limit);
  return out;
}

// alpha*mu + (1-alpha)*nu
template <class Key>
DiscreteDistribution<Key> mix(const Rational& alpha, const DiscreteDistribution<Key>& mu,
                              const DiscreteDistribution<Key>& nu) {
  DiscreteDistribution<Key> out;
  if (alpha > 0)
    for (const auto& [k, p] : mu) out.add(k, alpha * p);
  if (alpha < 1)
    for (const auto& [k, p] : nu) out.add(k, (1 - alpha) * p);
  return out;
}

struct InequalityPair {
  double lhs = 0;
  double rhs = 0;
};

// Kaimanovich-Vershik: H(mu*nu^{*n}) - H(mu) <= n*(H(mu*nu) - H(mu)).
template <class Key>
InequalityPair kv_inequality_gap(const DiscreteDistribution<Key>& mu, const DiscreteDistribution<Key>& nu,
                                 unsigned n, size_t atom_limit = kDefaultAtomLimit) {
  double hmu = shannon_entropy(mu);
  double h1 = shannon_entropy(convolve(mu, nu, atom_limit));
  double hn = shannon_entropy(convolve(mu, convolve_power(nu, n, atom_limit), atom_limit));
  return {hn - hmu, static_cast<double>(n) * (h1 - hmu)};
}

// sum y_j log(1/z_j) >= sum y_j log(Y/(y_j Z)), both sides returned.
InequalityPair weighted_log_bound(const std::vector<double>& y, const std::vector<double>& z);

}  // namespace garsia
