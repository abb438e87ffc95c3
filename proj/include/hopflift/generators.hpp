#pragma once

#include <cstdint>
#include <vector>

#include "hopflift/design.hpp"
#include "hopflift/points.hpp"

namespace hopflift {

/// Regular n-gon {e^{i(phase + 2 pi j / n)}}: an (n-1)-design on S1.
DesignS1 regular_gon(int n, double phase = 0.0);

/// North and south poles of S2: the smallest 1-design.
DesignS2 antipodal_pair();

/// Equal-weight quadrature nodes for the uniform measure on (-1,1):
/// (1/M) sum f(nodes[j]) matches (1/2) integral f for deg(f) <= t.
struct IntervalDesign {
  std::vector<double> nodes;
  double node_weight = 0.0;  // 1/M, kept for weighted callers
  int strength = 0;
};

struct IntervalSolveOptions {
  int node_hint = 0;         // 0 = pick from strength
  double residual_tol = 1e-13;
  int max_newton_iterations = 200;
  int max_escalations = 3;   // node-count doublings before giving up
};

/// Solves the symmetric equal-weight moment system for strength t. Throws
/// NoConvergenceError when escalation runs out.
IntervalDesign interval_design(int t, const IntervalSolveOptions& options = {});
IntervalDesign interval_design(int t, int node_hint);

struct GaussLegendreRule {
  std::vector<double> nodes;    // in (-1,1), ascending
  std::vector<double> weights;  // normalized to sum to 1
};

/// n-point Gauss-Legendre rule for the uniform measure on (-1,1), exact
/// through degree 2n-1.
GaussLegendreRule gauss_legendre_rule(int n);

enum class PhaseMode { kZero, kRandom, kExplicit };

struct LatitudePhases {
  PhaseMode mode = PhaseMode::kZero;
  std::uint64_t seed = 0;
  std::vector<double> values;  // used by kExplicit, one per latitude
};

/// Deterministic phase in [0, 2 pi) for a given seed and fiber index.
double phase_for_fiber(std::uint64_t seed, std::uint64_t index);

/// t-design on S2 as a product: interval design in xi times a regular
/// (t+1)-gon in the eta phase at each latitude. Always equal weight.
DesignS2 product_design_s2(int t, const LatitudePhases& phases = {});

/// Same construction but with Gauss-Legendre latitudes and their weights;
/// fewer latitudes, non-equal weights.
DesignS2 product_design_s2_weighted(int t, const LatitudePhases& phases = {});

}  // namespace hopflift
