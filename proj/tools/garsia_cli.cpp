// garsia: entropy-theoretic computations for homogeneous IFS parameter pairs.
// Subcommands: entropy (single spec), scan (parameter grids to CSV),
// lemmas (seeded property sweeps).

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "garsia/derivs.hpp"
#include "garsia/dioph.hpp"
#include "garsia/ffield.hpp"
#include "garsia/json_io.hpp"
#include "garsia/sweeps.hpp"

using namespace garsia;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuardrail = 3;

struct GridAxis {
  Rational lo, hi;
  size_t steps = 0;
  Rational at(size_t i) const {
    if (steps <= 1) return lo;
    return lo + (hi - lo) * Rational(static_cast<long>(i)) / Rational(static_cast<long>(steps - 1));
  }
};

GridAxis parse_axis(const std::string& text) {
  GridAxis axis;
  auto c1 = text.find(':');
  auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw garsia::ParseError("grid axis must be lo:hi:steps");
  axis.lo = parse_rational(text.substr(0, c1));
  axis.hi = parse_rational(text.substr(c1 + 1, c2 - c1 - 1));
  axis.steps = static_cast<size_t>(std::stoul(text.substr(c2 + 1)));
  return axis;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int cmd_entropy(const std::string& spec_path, size_t n, size_t atom_limit, unsigned jobs) {
  IfsSpec spec = spec_from_file(spec_path);
  EnumOptions opts;
  opts.atom_limit = atom_limit;
  opts.jobs = jobs;
  auto hs = garsia_entropy_sequence(spec, n, opts);
  double h_n = hs.back();
  double rate = hs[0];
  for (size_t k = 1; k < hs.size(); ++k) rate = std::min(rate, hs[k] / static_cast<double>(k + 1));

  Json out;
  out["n"] = n;
  out["garsia_entropy"] = h_n;
  out["entropy_rate_upper"] = rate;
  out["weight_entropy"] = spec.weight_entropy();
  if (spec.lambda.is_exact() && spec.lambda.kind() != Parameter::Kind::FieldElement) {
    double loginv = log_inv_lambda(spec.lambda);
    out["dim_upper_bound"] = std::min(1.0, h_n / (static_cast<double>(n) * loginv));
    auto sd = similarity_dimension(spec);
    out["similarity_dimension"] = sd.value;
    out["similarity_dimension_uncapped"] = sd.uncapped;
  } else {
    out["dim_upper_bound"] = nullptr;
    out["similarity_dimension"] = nullptr;
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

struct ScanRow {
  Rational lambda, tau;
  double rate = 0;
  long overlap_n = -1;
  double dim_upper = 0;
};

int cmd_scan(const std::string& grid_text, size_t n, const std::string& mode, const std::string& out_path,
             const std::string& spec_path, size_t atom_limit, unsigned jobs) {
  if (mode != "entropy-rate" && mode != "overlap-flag" && mode != "dim-upper")
    throw garsia::ParseError("mode must be entropy-rate | overlap-flag | dim-upper");
  auto comma = grid_text.find(',');
  if (comma == std::string::npos) throw garsia::ParseError("grid must be l0:l1:steps,t0:t1:steps");
  GridAxis lax = parse_axis(grid_text.substr(0, comma));
  GridAxis tax = parse_axis(grid_text.substr(comma + 1));

  IfsSpec base = spec_path.empty()
                     ? IfsSpec::standard3(Parameter::transcendental(), Parameter::transcendental())
                     : spec_from_file(spec_path);

  EnumOptions opts;
  opts.atom_limit = atom_limit;
  opts.jobs = 1;  // parallelism is across cells

  std::vector<std::pair<Rational, Rational>> cells;
  for (size_t i = 0; i < lax.steps; ++i) {
    Rational lam = lax.at(i);
    if (lam <= 0 || lam >= 1) throw garsia::ParseError("lambda grid must stay inside (0,1)");
    for (size_t j = 0; j < tax.steps; ++j) cells.emplace_back(lam, tax.at(j));
  }

  std::vector<ScanRow> rows(cells.size());
  std::exception_ptr first_error;
  std::mutex err_mtx;
  auto work = [&](size_t begin, size_t end) {
    for (size_t idx = begin; idx < end; ++idx) {
      try {
        IfsSpec spec = base;
        spec.lambda = Parameter::rational(cells[idx].first);
        spec.tau = Parameter::rational(cells[idx].second);
        ScanRow row;
        row.lambda = cells[idx].first;
        row.tau = cells[idx].second;
        auto hs = garsia_entropy_sequence(spec, n, opts);
        row.rate = hs[0];
        for (size_t k = 1; k < hs.size(); ++k)
          row.rate = std::min(row.rate, hs[k] / static_cast<double>(k + 1));
        auto ov = find_overlap(spec, n, opts);
        row.overlap_n = ov ? static_cast<long>(ov->level) : -1;
        row.dim_upper = std::min(1.0, hs.back() / (static_cast<double>(n) * log_inv_lambda(spec.lambda)));
        rows[idx] = std::move(row);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mtx);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  unsigned nthreads = std::max(1u, jobs);
  if (nthreads == 1 || cells.size() < 2) {
    work(0, cells.size());
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (cells.size() + nthreads - 1) / nthreads;
    for (unsigned t = 0; t < nthreads; ++t) {
      size_t b = t * chunk, e = std::min(cells.size(), (t + 1) * chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw garsia::ParseError("cannot open output file: " + out_path);
    os = &file;
  }
  *os << "# garsia scan v1 mode=" << mode << " n=" << n << "\n";
  *os << "lambda,tau,rate_upper,overlap_n,dim_upper\n";
  for (const auto& row : rows)
    *os << to_string(row.lambda) << "," << to_string(row.tau) << "," << fmt_double(row.rate) << ","
        << row.overlap_n << "," << fmt_double(row.dim_upper) << "\n";
  return kExitOk;
}

int cmd_lemmas(const std::string& suite, uint64_t seed, size_t count) {
  auto res = run_sweep(suite, seed, count);
  Json out;
  out["suite"] = res.suite;
  out["seed"] = res.seed;
  out["cases"] = res.cases;
  out["violations"] = res.violations;
  out["detail"] = res.detail;
  std::cout << out.dump(2) << "\n";
  return res.violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropy, overlap and dimension computations for self-similar digit systems"};
  app.require_subcommand(1);

  std::string spec_path, grid_text, mode = "entropy-rate", out_path, suite;
  size_t n = 4, atom_limit = kDefaultAtomLimit, count = 100;
  unsigned jobs = 1;
  uint64_t seed = 1;

  auto* entropy = app.add_subcommand("entropy", "entropy report for one parameter pair");
  entropy->add_option("--spec", spec_path, "IFS spec JSON file")->required();
  entropy->add_option("--n", n, "level");
  entropy->add_option("--atom-limit", atom_limit, "atom guardrail");
  entropy->add_option("--jobs", jobs, "worker threads");

  auto* scan = app.add_subcommand("scan", "grid scan emitting CSV");
  scan->add_option("--grid", grid_text, "l0:l1:steps,t0:t1:steps (exact rationals)")->required();
  scan->add_option("--n", n, "level");
  scan->add_option("--mode", mode, "entropy-rate | overlap-flag | dim-upper");
  scan->add_option("--out", out_path, "output CSV path (default stdout)");
  scan->add_option("--spec", spec_path, "base spec for forms/weights");
  scan->add_option("--atom-limit", atom_limit, "atom guardrail");
  scan->add_option("--jobs", jobs, "worker threads");
  scan->add_option("--seed", seed, "accepted for interface parity; scans are deterministic");

  auto* lemmas = app.add_subcommand("lemmas", "run a named property sweep");
  lemmas->add_option("--suite", suite, "sweep name")->required();
  lemmas->add_option("--seed", seed, "rng seed");
  lemmas->add_option("--count", count, "cases");

  try {
    app.parse(argc, argv);
    if (entropy->parsed()) return cmd_entropy(spec_path, n, atom_limit, jobs);
    if (scan->parsed()) return cmd_scan(grid_text, n, mode, out_path, spec_path, atom_limit, jobs);
    if (lemmas->parsed()) return cmd_lemmas(suite, seed, count);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const GuardrailExceeded& e) {
    std::cerr << "guardrail: " << e.what() << "\n";
    return kExitGuardrail;
  } catch (const garsia::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
}
