#include "hopflift/design.hpp"

#include <cmath>
#include <string>

#include "hopflift/errors.hpp"

namespace hopflift::detail {

bool validate_weights(const std::vector<double>& weights, std::size_t point_count) {
  if (weights.size() != point_count) {
    throw ParseError("design has " + std::to_string(point_count) + " points but " +
                     std::to_string(weights.size()) + " weights");
  }
  if (weights.empty()) return true;
  double sum = 0.0;
  double wmin = weights.front();
  double wmax = weights.front();
  for (double w : weights) {
    if (!(w > 0.0)) throw ParseError("design weights must be positive");
    sum += w;
    wmin = std::min(wmin, w);
    wmax = std::max(wmax, w);
  }
  if (std::abs(sum - 1.0) > kWeightSumTol) {
    throw ParseError("design weights sum to " + std::to_string(sum) + ", expected 1");
  }
  return wmax / wmin - 1.0 < kEqualWeightTol;
}

}  // namespace hopflift::detail
