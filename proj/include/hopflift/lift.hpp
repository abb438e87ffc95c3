#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopflift/design.hpp"
#include "hopflift/generators.hpp"
#include "hopflift/hopf.hpp"

namespace hopflift {

// Lifting a design on S2 through the Hopf map: place a regular gon along the
// fiber over each base point. A t-design with 2t-gons (or better) on the
// fibers yields a 2t-design on S3; odd strengths need one extra gon vertex.

struct LiftConfig {
  int gon_size = 1;
  PhaseMode phase_mode = PhaseMode::kZero;
  std::uint64_t seed = 0;
  std::vector<double> explicit_phases;  // one per base point when kExplicit
  Section section;
  bool merge_duplicates = false;  // coalesce coincident lifted points into weights
};

/// Lifts each base point to a gon_size-gon on its fiber. Equal-weight input
/// gives equal-weight output of size |Y| * gon_size; weighted input divides
/// each base weight evenly along its fiber gon.
DesignS3 lift_design(const DesignS2& base, const LiftConfig& config);

/// Per-fiber gon control for mixed lifts.
struct FiberSpec {
  int gon_size = 1;
  double phase = 0.0;
};

DesignS3 lift_design(const DesignS2& base, const std::vector<FiberSpec>& fibers,
                     const Section& section = {});

/// Size of a design of strength 2t on S3 against the published upper bounds
/// for the minimal size: (2t+1)(t+1)^2 and 2(t+1)^3.
struct CardinalityReport {
  int t = 0;
  std::size_t size = 0;
  std::uint64_t product_bound = 0;  // (2t+1)(t+1)^2
  std::uint64_t cube_bound = 0;     // 2(t+1)^3
  bool within_product_bound = false;
  bool within_cube_bound = false;
  std::string to_string() const;
};

CardinalityReport cardinality_report(int t, const DesignS3& design);
CardinalityReport cardinality_report(int t, std::size_t size);

}  // namespace hopflift
