#include "hopflift/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hopflift/errors.hpp"
#include "hopflift/generators.hpp"

namespace hopflift {
namespace {

struct Panel {
  std::array<double, 3> lo;
  std::array<double, 3> hi;
};

double volume(const Panel& p, int dim) {
  double v = 1.0;
  for (int d = 0; d < dim; ++d) v *= p.hi[d] - p.lo[d];
  return v;
}

// Tensor-product rule over the panel: volume times the weighted average of f
// (the rule weights sum to 1 per axis).
double tensor_estimate(const std::function<double(const std::array<double, 3>&)>& f, int dim,
                       const Panel& p, const GaussLegendreRule& rule, std::size_t& evaluations) {
  int n = static_cast<int>(rule.nodes.size());
  std::array<double, 3> mid{}, half{};
  for (int d = 0; d < dim; ++d) {
    mid[d] = 0.5 * (p.lo[d] + p.hi[d]);
    half[d] = 0.5 * (p.hi[d] - p.lo[d]);
  }
  std::array<int, 3> idx{0, 0, 0};
  double sum = 0.0;
  while (true) {
    std::array<double, 3> x{};
    double w = 1.0;
    for (int d = 0; d < dim; ++d) {
      x[d] = mid[d] + half[d] * rule.nodes[idx[d]];
      w *= rule.weights[idx[d]];
    }
    sum += w * f(x);
    ++evaluations;
    int d = 0;
    while (d < dim && ++idx[d] == n) idx[d++] = 0;
    if (d == dim) break;
  }
  return sum * volume(p, dim);
}

}  // namespace

Estimate integrate_adaptive(const std::function<double(const std::array<double, 3>&)>& f, int dim,
                            const std::array<double, 3>& lo, const std::array<double, 3>& hi,
                            const AdaptiveOptions& options) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("integrate_adaptive supports dim 1..3");
  static const GaussLegendreRule coarse = gauss_legendre_rule(8);
  static const GaussLegendreRule fine = gauss_legendre_rule(16);

  Panel root{lo, hi};
  double total_volume = volume(root, dim);

  // One upfront bisection per axis: the integrands are oscillatory along the
  // angular axes, and the accept test is only trustworthy once a panel holds
  // few enough oscillations.
  std::vector<Panel> stack{root};
  for (int d = 0; d < dim; ++d) {
    std::vector<Panel> next;
    for (const Panel& p : stack) {
      double m = 0.5 * (p.lo[d] + p.hi[d]);
      Panel left = p, right = p;
      left.hi[d] = m;
      right.lo[d] = m;
      next.push_back(left);
      next.push_back(right);
    }
    stack = std::move(next);
  }

  Estimate out;
  std::size_t panels_processed = 0;
  while (!stack.empty()) {
    if (++panels_processed > options.max_panels)
      throw QuadratureFailure("adaptive quadrature exceeded its panel budget");
    Panel p = stack.back();
    stack.pop_back();
    double i_coarse = tensor_estimate(f, dim, p, coarse, out.evaluations);
    double i_fine = tensor_estimate(f, dim, p, fine, out.evaluations);
    double err = std::abs(i_fine - i_coarse);
    double share = options.abs_tol * (volume(p, dim) / total_volume);
    if (err <= share) {
      out.value += i_fine;
      out.error += err;
      continue;
    }
    int widest = 0;
    for (int d = 1; d < dim; ++d)
      if (p.hi[d] - p.lo[d] > p.hi[widest] - p.lo[widest]) widest = d;
    double m = 0.5 * (p.lo[widest] + p.hi[widest]);
    Panel left = p, right = p;
    left.hi[widest] = m;
    right.lo[widest] = m;
    stack.push_back(left);
    stack.push_back(right);
  }
  return out;
}

}  // namespace hopflift
