#pragma once

#include <stdexcept>

namespace hopflift {

/// A coordinate tuple violates the unit-norm invariant of its sphere.
struct OffSphereError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A design file is malformed or inconsistent.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The equal-weight interval solver exhausted its escalation budget.
struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature could not reach the requested error bound.
struct QuadratureFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hopflift
