#pragma once

#include <string>
#include <vector>

#include "hopflift/design.hpp"
#include "hopflift/design_io.hpp"
#include "hopflift/monomials.hpp"

namespace hopflift {

// Design certification: a weighted point set has strength t when the weighted
// sum of every monomial of degree <= t matches its exact sphere moment. The
// moments are rationals, so the only noise in a residual is coordinate
// roundoff; the default tolerance sits far above that and far below any real
// violation.

inline constexpr double kDefaultCertifyTol = 1e-9;

struct DegreeResidual {
  int degree = 0;
  std::size_t basis_size = 0;
  double max_residual = 0.0;
};

struct StrengthReport {
  double tolerance = kDefaultCertifyTol;
  int max_degree = 0;
  int certified_strength = -1;  // largest t with all residuals <= tolerance through degree t
  std::vector<DegreeResidual> degrees;

  /// Degree-by-degree residual table, one line per degree.
  std::string to_string() const;
  /// The same data as a JSON object.
  std::string to_json() const;
};

enum class Exec { kSerial, kParallel };

/// |sum_x w(x) m(x) - moment(m)|.
double residual(const DesignS1& design, const MonomialS1& m);
double residual(const DesignS2& design, const MonomialS2& m);
double residual(const DesignS3& design, const MonomialS3& m);

/// Scans every monomial of degree <= max_degree. The parallel path splits the
/// monomial list across threads; each monomial's point sum runs in a fixed
/// order, so serial and parallel reports are identical.
StrengthReport certify(const DesignS1& design, int max_degree,
                       double tol = kDefaultCertifyTol, Exec exec = Exec::kParallel);
StrengthReport certify(const DesignS2& design, int max_degree,
                       double tol = kDefaultCertifyTol, Exec exec = Exec::kParallel);
StrengthReport certify(const DesignS3& design, int max_degree,
                       double tol = kDefaultCertifyTol, Exec exec = Exec::kParallel);
StrengthReport certify(const AnyDesign& design, int max_degree,
                       double tol = kDefaultCertifyTol, Exec exec = Exec::kParallel);

/// Same contract as certify, but moments come from adaptive numeric
/// quadrature in spherical coordinates instead of the closed forms. Oracle
/// for validating the moment formulas; deliberately slow.
/// pre: max_degree <= 6 and |X| <= 1000 (std::invalid_argument otherwise);
/// throws QuadratureFailure if the quadrature error estimate exceeds 1e-9.
StrengthReport brute_force_certify(const DesignS1& design, int max_degree,
                                   double tol = kDefaultCertifyTol);
StrengthReport brute_force_certify(const DesignS2& design, int max_degree,
                                   double tol = kDefaultCertifyTol);
StrengthReport brute_force_certify(const DesignS3& design, int max_degree,
                                   double tol = kDefaultCertifyTol);
StrengthReport brute_force_certify(const AnyDesign& design, int max_degree,
                                   double tol = kDefaultCertifyTol);

struct MomentEstimate {
  double value = 0.0;
  double error = 0.0;
};

/// The quadrature behind brute_force_certify, exposed for direct moment
/// comparisons: integrates the monomial against the normalized measure.
MomentEstimate moment_by_quadrature(const MonomialS1& m);
MomentEstimate moment_by_quadrature(const MonomialS2& m);
MomentEstimate moment_by_quadrature(const MonomialS3& m);

}  // namespace hopflift
