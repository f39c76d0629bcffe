#pragma once

#include <stdexcept>
#include <string>

namespace gencase {

/// Malformed input: out-of-range letters, arity mismatches, bad text formats.
struct InvalidInputError : std::runtime_error {
  explicit InvalidInputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An operation was refused because it would exceed a configured budget
/// (enumeration size, lazy-ball vertex count). Carries the estimate.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A query walked past the explored radius of a lazily built graph.
struct RadiusError : std::runtime_error {
  explicit RadiusError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Config file problems, reported with line context where available.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Internal soundness violation (e.g. two solvers disagree on a definite
/// answer). Never masked, always fatal.
struct SoundnessError : std::logic_error {
  explicit SoundnessError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace gencase
