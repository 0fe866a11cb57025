#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deconv {

/// Input sizes do not line up (vector lengths, matrix shapes, offsets).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A structural precondition on a sparsity pattern was violated.
struct StructureError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Cholesky pivot fell below tolerance; carries the failing pivot index.
struct NotPositiveDefiniteError : std::runtime_error {
  NotPositiveDefiniteError(std::size_t pivot_index, double pivot_value)
      : std::runtime_error("matrix not positive definite at pivot " +
                           std::to_string(pivot_index)),
        pivot(pivot_index),
        value(pivot_value) {}
  std::size_t pivot;
  double value;
};

/// Argument outside the mathematical domain of a special function or density.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Evaluation point sits on a prism face or edge where the closed form blows up.
struct SingularityError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Sampler diagnostics detected a dead chain (e.g. zero acceptance in warmup).
struct DiagnosticsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File could not be read or written, or its contents are malformed.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace deconv
