#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace ionlink {

using cd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cd kI{0.0, 1.0};

// Process exit codes used by the CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 1,
  kExitRuntimeError = 2,
  kExitNonConvergence = 3,
};

// Bad or inconsistent configuration input.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A module operation was requested in an order the protocol forbids
// (e.g. a local entangling gate while the data still sits on the
// circuit qubit).
struct ProtocolOrderError : std::logic_error {
  explicit ProtocolOrderError(const std::string& what) : std::logic_error(what) {}
};

// An iterative numerical procedure failed to reach its tolerance.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// The cooperative scheduler found every agent blocked.
struct DeadlockError : std::runtime_error {
  explicit DeadlockError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ionlink
