#pragma once

#include <stdexcept>
#include <string>

namespace garsia {

struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

struct NotPowerSeriesError : std::runtime_error {
  explicit NotPowerSeriesError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an enumeration would exceed the configured atom limit.
struct GuardrailExceeded : std::runtime_error {
  explicit GuardrailExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct PrecisionExhausted : std::runtime_error {
  explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

// A lemma checker's preconditions do not hold; carries the failing clause.
struct HypothesisViolated : std::runtime_error {
  explicit HypothesisViolated(const std::string& clause) : std::runtime_error(clause) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace garsia
