#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hopflift/points.hpp"

namespace hopflift {

// All designs here target the normalized (probability) sphere measures, so
// weights must sum to 1.
inline constexpr double kWeightSumTol = 1e-10;
inline constexpr double kEqualWeightTol = 1e-12;

namespace detail {
// Validates positivity and the weight-sum invariant; returns the equal-weight flag.
bool validate_weights(const std::vector<double>& weights, std::size_t point_count);
}

/// Finite weighted point set on a sphere. Equal weights 1/|X| make it a
/// candidate spherical design; general positive weights make it a candidate
/// weighted design.
template <class P>
class WeightedDesign {
 public:
  WeightedDesign(std::vector<P> points, std::vector<double> weights)
      : points_(std::move(points)), weights_(std::move(weights)) {
    equal_weight_ = detail::validate_weights(weights_, points_.size());
  }

  static WeightedDesign with_equal_weights(std::vector<P> points) {
    std::vector<double> w(points.size(), points.empty() ? 1.0 : 1.0 / static_cast<double>(points.size()));
    return WeightedDesign(std::move(points), std::move(w));
  }

  const std::vector<P>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return points_.size(); }
  bool is_equal_weight() const { return equal_weight_; }

  double total_weight() const {
    double s = 0.0;
    for (double w : weights_) s += w;
    return s;
  }

 private:
  std::vector<P> points_;
  std::vector<double> weights_;
  bool equal_weight_;
};

using DesignS1 = WeightedDesign<PointS1>;
using DesignS2 = WeightedDesign<PointS2>;
using DesignS3 = WeightedDesign<PointS3>;

}  // namespace hopflift
