#include "garsia/enumerate.hpp"

#include <cmath>
#include <thread>

namespace garsia {

QVec& add_in_place(QVec& a, const QVec& b) {
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

namespace {

void check_raw_strings(const LevelSystem& sys, size_t n, const EnumOptions& opts) {
  double raw = std::pow(static_cast<double>(sys.num_digits), static_cast<double>(n));
  if (raw > static_cast<double>(opts.max_raw_strings))
    throw GuardrailExceeded("m^n exceeds the raw-string guardrail (" + std::to_string(n) + " levels)");
}

// one convolution step of the fold; parallel over chunks of the current map
DiscreteDistribution<QVec> fold_step(const DiscreteDistribution<QVec>& cur, const LevelSystem& sys,
                                     size_t pos, const EnumOptions& opts) {
  std::vector<std::pair<QVec, Rational>> incs;
  incs.reserve(sys.num_digits);
  for (size_t j = 0; j < sys.num_digits; ++j) {
    QVec inc = sys.increment(j, pos);
    bool merged = false;
    for (auto& [k, p] : incs)
      if (k == inc) {  // equal digit contributions merge up front
        p += sys.weights[j];
        merged = true;
        break;
      }
    if (!merged) incs.emplace_back(std::move(inc), sys.weights[j]);
  }

  unsigned jobs = opts.jobs;
  if (jobs <= 1 || cur.size() < 512) {
    DiscreteDistribution<QVec> next;
    for (const auto& [key, p] : cur) {
      for (const auto& [inc, w] : incs) {
        QVec k = key;
        add_in_place(k, inc);
        next.add(std::move(k), p * w);
      }
      if (next.size() > opts.atom_limit) throw GuardrailExceeded("atom limit exceeded during enumeration");
    }
    return next;
  }

  // deterministic parallel reduce: chunk the ordered atom list, merge in order
  std::vector<std::pair<const QVec*, const Rational*>> atoms;
  atoms.reserve(cur.size());
  for (const auto& [key, p] : cur) atoms.emplace_back(&key, &p);
  size_t chunk = (atoms.size() + jobs - 1) / jobs;
  std::vector<std::map<QVec, Rational>> partial(jobs);
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < jobs; ++t) {
    threads.emplace_back([&, t]() {
      size_t lo = t * chunk, hi = std::min(atoms.size(), (t + 1) * chunk);
      auto& out = partial[t];
      for (size_t i = lo; i < hi; ++i)
        for (const auto& [inc, w] : incs) {
          QVec k = *atoms[i].first;
          add_in_place(k, inc);
          auto [it, inserted] = out.emplace(std::move(k), *atoms[i].second * w);
          if (!inserted) it->second += *atoms[i].second * w;
        }
    });
  }
  for (auto& th : threads) th.join();
  DiscreteDistribution<QVec> next;
  for (auto& part : partial) {
    for (auto& [k, p] : part) next.add(k, p);
    if (next.size() > opts.atom_limit) throw GuardrailExceeded("atom limit exceeded during enumeration");
  }
  return next;
}

}  // namespace

DiscreteDistribution<QVec> fold_distribution(const LevelSystem& sys, const std::vector<size_t>& positions,
                                             const EnumOptions& opts) {
  check_raw_strings(sys, positions.size(), opts);
  auto cur = DiscreteDistribution<QVec>::delta(QVec(sys.key_dim, Rational(0)));
  for (size_t pos : positions) cur = fold_step(cur, sys, pos, opts);
  return cur;
}

std::vector<double> fold_entropy_sequence(const LevelSystem& sys, size_t n, const EnumOptions& opts) {
  check_raw_strings(sys, n, opts);
  std::vector<double> h;
  h.reserve(n);
  auto cur = DiscreteDistribution<QVec>::delta(QVec(sys.key_dim, Rational(0)));
  for (size_t pos = 0; pos < n; ++pos) {
    cur = fold_step(cur, sys, pos, opts);
    h.push_back(shannon_entropy(cur));
  }
  return h;
}

std::optional<CollisionWitness> first_collision(const LevelSystem& sys, size_t n_max,
                                                const EnumOptions& opts) {
  std::map<QVec, Digits> cur;
  cur.emplace(QVec(sys.key_dim, Rational(0)), Digits{});
  for (size_t pos = 0; pos < n_max; ++pos) {
    if (cur.size() * sys.num_digits > opts.max_raw_strings)
      throw GuardrailExceeded("overlap search exceeded the raw-string guardrail at level " +
                              std::to_string(pos + 1));
    std::map<QVec, Digits> next;
    for (const auto& [key, digits] : cur) {
      for (size_t j = 0; j < sys.num_digits; ++j) {
        QVec k = key;
        add_in_place(k, sys.increment(j, pos));
        auto it = next.find(k);
        if (it != next.end()) {
          CollisionWitness w;
          w.level = pos + 1;
          w.first = it->second;
          w.second = digits;
          w.second.push_back(static_cast<uint8_t>(j));
          return w;
        }
        Digits d = digits;
        d.push_back(static_cast<uint8_t>(j));
        next.emplace(std::move(k), std::move(d));
      }
    }
    cur = std::move(next);
  }
  return std::nullopt;
}

std::map<QVec, std::vector<Digits>> collision_classes(const LevelSystem& sys, size_t n,
                                                      const EnumOptions& opts) {
  check_raw_strings(sys, n, opts);
  std::map<QVec, std::vector<Digits>> cur;
  cur.emplace(QVec(sys.key_dim, Rational(0)), std::vector<Digits>{Digits{}});
  for (size_t pos = 0; pos < n; ++pos) {
    std::map<QVec, std::vector<Digits>> next;
    for (const auto& [key, strings] : cur)
      for (size_t j = 0; j < sys.num_digits; ++j) {
        QVec k = key;
        add_in_place(k, sys.increment(j, pos));
        auto& bucket = next[std::move(k)];
        for (const auto& s : strings) {
          Digits d = s;
          d.push_back(static_cast<uint8_t>(j));
          bucket.push_back(std::move(d));
        }
      }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace garsia
