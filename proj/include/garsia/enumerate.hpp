#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "garsia/distribution.hpp"

namespace garsia {

// Canonical collision-class key: fixed-length rational vector. Every
// parameter mode (rational, number-field, symbolic) embeds its value
// domain here, so one enumeration kernel serves points, curves, series
// prefixes and derivative vectors.
struct QVec : std::vector<Rational> {
  using std::vector<Rational>::vector;

  friend QVec operator+(const QVec& a, const QVec& b) {
    QVec out(a);
    for (size_t i = 0; i < b.size() && i < out.size(); ++i) out[i] += b[i];
    return out;
  }
  friend bool operator<(const QVec& a, const QVec& b) {
    return static_cast<const std::vector<Rational>&>(a) < static_cast<const std::vector<Rational>&>(b);
  }
  friend bool operator==(const QVec& a, const QVec& b) {
    return static_cast<const std::vector<Rational>&>(a) == static_cast<const std::vector<Rational>&>(b);
  }
};

QVec& add_in_place(QVec& a, const QVec& b);

struct EnumOptions {
  size_t atom_limit = kDefaultAtomLimit;
  // cap on raw digit strings m^n before dedup (default sized for m=3, n=14)
  size_t max_raw_strings = 5'000'000;
  unsigned jobs = 1;
};

// Digit-indexed key increments for one position of the digit expansion.
// increment(j, k) is the contribution of digit j at position k.
struct LevelSystem {
  size_t key_dim = 0;
  size_t num_digits = 0;
  std::vector<Rational> weights;  // size num_digits
  std::function<QVec(size_t digit, size_t position)> increment;
};

// Law of the digit sum over the given positions: the fold of per-position
// convolutions with exact merging of equal keys.
DiscreteDistribution<QVec> fold_distribution(const LevelSystem& sys, const std::vector<size_t>& positions,
                                             const EnumOptions& opts = {});

// Entropies H(level k) for k = 1..n in one pass over positions 0..n-1.
std::vector<double> fold_entropy_sequence(const LevelSystem& sys, size_t n, const EnumOptions& opts = {});

using Digits = std::vector<uint8_t>;

struct CollisionWitness {
  size_t level = 0;   // smallest n with a collision
  Digits first, second;  // distinct digit strings of that length with equal value
};

// Level-by-level search for the first pair of digit strings with equal key;
// nullopt when all m^n strings stay distinct up to n_max.
std::optional<CollisionWitness> first_collision(const LevelSystem& sys, size_t n_max,
                                                const EnumOptions& opts = {});

// All digit strings of length n grouped into collision classes.
std::map<QVec, std::vector<Digits>> collision_classes(const LevelSystem& sys, size_t n,
                                                      const EnumOptions& opts = {});

}  // namespace garsia
