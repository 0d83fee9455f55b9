#pragma once

#include <stdexcept>
#include <string>

namespace mtp {

// Pre/postcondition violations: wrong shapes, bad arguments, empty inputs.
struct ContractError : std::runtime_error {
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

// Corrupt or mismatching on-disk artifacts (demo files, checkpoints).
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid run configuration (unknown keys, constraint violations).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Operation issued before its prerequisite state exists (e.g. unfitted codebook).
struct StateError : std::runtime_error {
  explicit StateError(const std::string& what) : std::runtime_error(what) {}
};

// NaN/Inf escaped a numeric computation.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Scripted data generation could not produce a valid episode.
struct GenerationError : std::runtime_error {
  explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw ContractError(msg);
}

}  // namespace mtp
