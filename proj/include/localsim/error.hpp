#pragma once

#include <stdexcept>
#include <string>

namespace localsim {

// Failure classes surfaced by the library. WhpFailure marks the reported
// low-probability events (budget exhaustion, degree-bound violations) that
// the randomized procedures may legitimately hit; everything else indicates
// misuse, bad input, or a broken environment.
enum class ErrorKind {
  InvalidArgument,
  Io,
  LocalityViolation,
  ComputeBudget,
  ClusterTooLarge,
  WhpFailure,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Io: return "io";
    case ErrorKind::LocalityViolation: return "locality-violation";
    case ErrorKind::ComputeBudget: return "compute-budget";
    case ErrorKind::ClusterTooLarge: return "cluster-too-large";
    case ErrorKind::WhpFailure: return "whp-failure";
  }
  return "unknown";
}

class SimError : public std::runtime_error {
public:
  SimError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace localsim
