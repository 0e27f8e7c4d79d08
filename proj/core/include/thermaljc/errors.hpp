#pragma once

#include <stdexcept>
#include <string>

namespace thermaljc {

/// Argument outside the mathematical domain of an operation (negative time,
/// non-positive temperature, non-hermitian matrix).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller broke a documented precondition (e.g. resonant path with Δ ≠ 0).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed state violates its invariants beyond tolerance.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Trace deficit larger than tolerance: the Fock-space truncation is too coarse.
class TruncationError : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

}  // namespace thermaljc
