#pragma once

#include <array>
#include <cstddef>
#include <functional>

namespace hopflift {

// Adaptive tensor-product Gauss-Legendre quadrature over an axis-aligned box
// in up to 3 dimensions. Used as the independent numeric oracle for the
// closed-form sphere moments: integrate the monomial in chart coordinates and
// compare.

struct AdaptiveOptions {
  double abs_tol = 1e-10;
  std::size_t max_panels = 20000;
};

struct Estimate {
  double value = 0.0;
  double error = 0.0;        // accumulated per-panel error indicator
  std::size_t evaluations = 0;
};

/// Integrates f over the box [lo[i], hi[i]], i < dim (dim in 1..3). Panels
/// are accepted when the 8- and 16-point tensor rules agree to the panel's
/// share of abs_tol, else split along their widest axis. Throws
/// QuadratureFailure when the panel budget runs out.
Estimate integrate_adaptive(const std::function<double(const std::array<double, 3>&)>& f,
                            int dim, const std::array<double, 3>& lo,
                            const std::array<double, 3>& hi,
                            const AdaptiveOptions& options = {});

}  // namespace hopflift
