#include "hopflift/lift.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hopflift/points.hpp"

namespace hopflift {
namespace {

DesignS3 merge_coincident(std::vector<PointS3> pts, std::vector<double> weights) {
  // Coincident lifted points can only come from duplicated base points, so
  // quadratic scan cost is acceptable at realistic sizes.
  constexpr double kMergeTol = 1e-12;
  std::vector<PointS3> kept;
  std::vector<double> kept_w;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool merged = false;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (distance(kept[j], pts[i]) < kMergeTol) {
        kept_w[j] += weights[i];
        merged = true;
        break;
      }
    }
    if (!merged) {
      kept.push_back(pts[i]);
      kept_w.push_back(weights[i]);
    }
  }
  return DesignS3(std::move(kept), std::move(kept_w));
}

}  // namespace

DesignS3 lift_design(const DesignS2& base, const std::vector<FiberSpec>& fibers,
                     const Section& section) {
  if (base.size() == 0) throw std::invalid_argument("lift needs a nonempty base design");
  if (fibers.size() != base.size())
    throw std::invalid_argument("need one fiber spec per base point");
  std::vector<PointS3> pts;
  std::vector<double> weights;
  for (std::size_t i = 0; i < base.size(); ++i) {
    int gon = fibers[i].gon_size;
    if (gon < 1) throw std::invalid_argument("gon_size must be >= 1");
    PointS3 s = section_point(base.points()[i], section);
    double w = base.weights()[i] / gon;
    for (int k = 0; k < gon; ++k) {
      pts.push_back(act(s, unit_phase(fibers[i].phase + 2.0 * std::numbers::pi * k / gon)));
      weights.push_back(w);
    }
  }
  return DesignS3(std::move(pts), std::move(weights));
}

DesignS3 lift_design(const DesignS2& base, const LiftConfig& config) {
  if (config.phase_mode == PhaseMode::kExplicit &&
      config.explicit_phases.size() != base.size()) {
    throw std::invalid_argument("explicit phase list needs one entry per base point");
  }
  std::vector<FiberSpec> fibers(base.size());
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    fibers[i].gon_size = config.gon_size;
    switch (config.phase_mode) {
      case PhaseMode::kZero: fibers[i].phase = 0.0; break;
      case PhaseMode::kRandom: fibers[i].phase = phase_for_fiber(config.seed, i); break;
      case PhaseMode::kExplicit: fibers[i].phase = config.explicit_phases[i]; break;
    }
  }
  DesignS3 lifted = lift_design(base, fibers, config.section);
  if (!config.merge_duplicates) return lifted;
  return merge_coincident(lifted.points(), lifted.weights());
}

std::string CardinalityReport::to_string() const {
  std::ostringstream os;
  os << "|X| = " << size << " for a strength-" << 2 * t << " target (t = " << t << "); "
     << "(2t+1)(t+1)^2 = " << product_bound << ": " << (within_product_bound ? "met" : "exceeded")
     << "; 2(t+1)^3 = " << cube_bound << ": " << (within_cube_bound ? "met" : "exceeded");
  return os.str();
}

CardinalityReport cardinality_report(int t, std::size_t size) {
  if (t < 0) throw std::invalid_argument("cardinality_report needs t >= 0");
  CardinalityReport r;
  r.t = t;
  r.size = size;
  std::uint64_t tp1 = static_cast<std::uint64_t>(t) + 1;
  r.product_bound = (2 * static_cast<std::uint64_t>(t) + 1) * tp1 * tp1;
  r.cube_bound = 2 * tp1 * tp1 * tp1;
  r.within_product_bound = size <= r.product_bound;
  r.within_cube_bound = size <= r.cube_bound;
  return r;
}

CardinalityReport cardinality_report(int t, const DesignS3& design) {
  return cardinality_report(t, design.size());
}

}  // namespace hopflift
