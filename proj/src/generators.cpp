#include "hopflift/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hopflift/errors.hpp"

namespace hopflift {
namespace {

constexpr double kPi = std::numbers::pi;

// Solves A x = b (n x n, row-major) in place by Gaussian elimination with
// partial pivoting. Returns false on a numerically vanishing pivot.
bool solve_dense(std::vector<double>& A, std::vector<double>& b, int n) {
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(A[r * n + col]) > std::abs(A[pivot * n + col])) pivot = r;
    if (std::abs(A[pivot * n + col]) < 1e-14) return false;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(A[col * n + c], A[pivot * n + c]);
      std::swap(b[col], b[pivot]);
    }
    for (int r = col + 1; r < n; ++r) {
      double f = A[r * n + col] / A[col * n + col];
      for (int c = col; c < n; ++c) A[r * n + c] -= f * A[col * n + c];
      b[r] -= f * b[col];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= A[r * n + c] * b[c];
    b[r] = s / A[r * n + r];
  }
  return true;
}

// Even-moment system for a symmetric node set {+-sqrt(u_i)} (plus an optional
// node at 0): F_s(u) = (2/M) sum_i u_i^s - 1/(2s+1) for s = 1..S. Odd moments
// vanish by symmetry, so strength t needs S = floor(t/2) equations.
struct MomentSystem {
  int pairs = 0;
  int total_nodes = 0;
  int constraints = 0;

  void residual(const std::vector<double>& u, std::vector<double>& F) const {
    F.assign(constraints, 0.0);
    for (int s = 1; s <= constraints; ++s) {
      double sum = 0.0;
      for (int i = 0; i < pairs; ++i) sum += std::pow(u[i], s);
      F[s - 1] = 2.0 * sum / total_nodes - 1.0 / (2 * s + 1);
    }
  }

  static double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }

  // Newton iteration with a minimal-norm step when the system is
  // underdetermined and simple halving line search. Returns true when the
  // residual drops below options.residual_tol.
  bool newton(std::vector<double>& u, const IntervalSolveOptions& options) const {
    if (pairs < constraints) return false;
    std::vector<double> F, J(static_cast<std::size_t>(constraints) * pairs);
    for (int iter = 0; iter < options.max_newton_iterations; ++iter) {
      residual(u, F);
      double norm = inf_norm(F);
      if (norm <= options.residual_tol) return true;
      for (int s = 1; s <= constraints; ++s)
        for (int i = 0; i < pairs; ++i)
          J[(s - 1) * pairs + i] = 2.0 * s * std::pow(u[i], s - 1) / total_nodes;

      std::vector<double> step(pairs, 0.0);
      if (pairs == constraints) {
        std::vector<double> A = J, rhs(constraints);
        for (int s = 0; s < constraints; ++s) rhs[s] = -F[s];
        if (!solve_dense(A, rhs, constraints)) return false;
        step = rhs;
      } else {
        // delta = J^T (J J^T)^{-1} (-F)
        std::vector<double> G(static_cast<std::size_t>(constraints) * constraints, 0.0);
        std::vector<double> rhs(constraints);
        for (int r = 0; r < constraints; ++r) {
          rhs[r] = -F[r];
          for (int c = 0; c < constraints; ++c) {
            double dot = 0.0;
            for (int i = 0; i < pairs; ++i) dot += J[r * pairs + i] * J[c * pairs + i];
            G[r * constraints + c] = dot;
          }
        }
        if (!solve_dense(G, rhs, constraints)) return false;
        for (int i = 0; i < pairs; ++i) {
          double acc = 0.0;
          for (int r = 0; r < constraints; ++r) acc += J[r * pairs + i] * rhs[r];
          step[i] = acc;
        }
      }

      bool accepted = false;
      std::vector<double> trial(pairs), Ft;
      for (double lambda = 1.0; lambda >= 1e-6; lambda /= 2.0) {
        bool inside = true;
        for (int i = 0; i < pairs; ++i) {
          trial[i] = u[i] + lambda * step[i];
          if (!(trial[i] > 1e-14 && trial[i] < 1.0 - 1e-14)) {
            inside = false;
            break;
          }
        }
        if (!inside) continue;
        residual(trial, Ft);
        if (inf_norm(Ft) < norm) {
          u = trial;
          accepted = true;
          break;
        }
      }
      if (!accepted) return false;
    }
    return false;
  }
};

// Positive Gauss-Legendre nodes squared: the preferred starting point.
std::vector<double> init_from_gauss(int node_count, int pairs) {
  GaussLegendreRule rule = gauss_legendre_rule(node_count);
  std::vector<double> u;
  for (double x : rule.nodes)
    if (x > 0.0) u.push_back(x * x);
  std::sort(u.begin(), u.end());
  if (static_cast<int>(u.size()) != pairs) u.clear();
  return u;
}

// Equal-mass quantiles of |xi| under the uniform measure: a spread-out
// fallback when the Gauss start stalls.
std::vector<double> init_from_quantiles(int pairs) {
  std::vector<double> u(pairs);
  for (int i = 0; i < pairs; ++i) {
    double xi = (2.0 * i + 1.0) / (2.0 * pairs);
    u[i] = xi * xi;
  }
  return u;
}

int default_node_count(int t) {
  if (t <= 0) return 1;
  return std::max(2, 2 * (t / 2));
}

IntervalDesign build_interval_design(int t, const std::vector<double>& u, int total_nodes) {
  IntervalDesign out;
  out.nodes.reserve(total_nodes);
  for (auto it = u.rbegin(); it != u.rend(); ++it) out.nodes.push_back(-std::sqrt(*it));
  if (total_nodes % 2 != 0) out.nodes.push_back(0.0);
  for (double v : u) out.nodes.push_back(std::sqrt(v));
  std::sort(out.nodes.begin(), out.nodes.end());
  out.node_weight = 1.0 / total_nodes;
  out.strength = t;
  return out;
}

}  // namespace

DesignS1 regular_gon(int n, double phase) {
  if (n < 1) throw std::invalid_argument("regular_gon needs n >= 1");
  std::vector<PointS1> pts;
  pts.reserve(n);
  for (int k = 0; k < n; ++k) pts.push_back(unit_phase(phase + 2.0 * kPi * k / n));
  return DesignS1::with_equal_weights(std::move(pts));
}

DesignS2 antipodal_pair() {
  return DesignS2::with_equal_weights({PointS2(1.0, 0.0), PointS2(-1.0, 0.0)});
}

IntervalDesign interval_design(int t, const IntervalSolveOptions& options) {
  if (t < 0) throw std::invalid_argument("interval_design needs t >= 0");
  int nodes = options.node_hint > 0 ? options.node_hint : default_node_count(t);
  int constraints = t / 2;

  for (int attempt = 0; attempt <= options.max_escalations; ++attempt) {
    MomentSystem system{nodes / 2, nodes, constraints};
    if (system.pairs == 0 && constraints == 0) return build_interval_design(t, {}, nodes);
    if (system.pairs >= constraints) {
      for (int which = 0; which < 2; ++which) {
        std::vector<double> u =
            which == 0 ? init_from_gauss(nodes, system.pairs) : init_from_quantiles(system.pairs);
        if (static_cast<int>(u.size()) != system.pairs) continue;
        if (system.newton(u, options)) {
          std::sort(u.begin(), u.end());
          return build_interval_design(t, u, nodes);
        }
      }
    }
    nodes *= 2;
  }
  throw NoConvergenceError("no equal-weight interval design of strength " + std::to_string(t) +
                           " found with up to " + std::to_string(nodes / 2) + " nodes");
}

IntervalDesign interval_design(int t, int node_hint) {
  IntervalSolveOptions options;
  options.node_hint = node_hint;
  return interval_design(t, options);
}

GaussLegendreRule gauss_legendre_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_rule needs n >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Tricomi-style initial guess, then Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      if (n == 1) p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double pn = n == 0 ? 1.0 : (n == 1 ? x : p1);
      dp = n * (x * pn - p0) / (x * x - 1.0);
      double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[n - 1 - i] = x;
    // Standard weight 2/((1-x^2) P_n'(x)^2), divided by 2 for unit total mass.
    rule.weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  // The iteration tails can leave +-pairs asymmetric at the last ulp; average.
  for (int i = 0, j = n - 1; i < j; ++i, --j) {
    double mag = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    rule.nodes[i] = -mag;
    rule.nodes[j] = mag;
    double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.weights[i] = rule.weights[j] = w;
  }
  if (n % 2 != 0) rule.nodes[n / 2] = 0.0;
  return rule;
}

double phase_for_fiber(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53 * (2.0 * kPi);
}

namespace {

double latitude_phase(const LatitudePhases& phases, std::size_t index) {
  switch (phases.mode) {
    case PhaseMode::kZero:
      return 0.0;
    case PhaseMode::kRandom:
      return phase_for_fiber(phases.seed, index);
    case PhaseMode::kExplicit:
      if (index >= phases.values.size())
        throw std::invalid_argument("explicit phase list shorter than the latitude count");
      return phases.values[index];
  }
  return 0.0;
}

void append_latitude_gon(std::vector<PointS2>& pts, double xi, int gon, double phase) {
  double r = std::sqrt((1.0 - xi) * (1.0 + xi));
  for (int k = 0; k < gon; ++k) {
    double angle = phase + 2.0 * kPi * k / gon;
    pts.emplace_back(xi, Complex(r * std::cos(angle), r * std::sin(angle)));
  }
}

}  // namespace

DesignS2 product_design_s2(int t, const LatitudePhases& phases) {
  if (t < 0) throw std::invalid_argument("product_design_s2 needs t >= 0");
  IntervalDesign latitudes = interval_design(t);
  int gon = t + 1;
  std::vector<PointS2> pts;
  pts.reserve(latitudes.nodes.size() * gon);
  for (std::size_t i = 0; i < latitudes.nodes.size(); ++i)
    append_latitude_gon(pts, latitudes.nodes[i], gon, latitude_phase(phases, i));
  return DesignS2::with_equal_weights(std::move(pts));
}

DesignS2 product_design_s2_weighted(int t, const LatitudePhases& phases) {
  if (t < 0) throw std::invalid_argument("product_design_s2_weighted needs t >= 0");
  GaussLegendreRule rule = gauss_legendre_rule((t + 2) / 2);
  int gon = t + 1;
  std::vector<PointS2> pts;
  std::vector<double> weights;
  pts.reserve(rule.nodes.size() * gon);
  weights.reserve(rule.nodes.size() * gon);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    append_latitude_gon(pts, rule.nodes[i], gon, latitude_phase(phases, i));
    for (int k = 0; k < gon; ++k) weights.push_back(rule.weights[i] / gon);
  }
  return DesignS2(std::move(pts), std::move(weights));
}

}  // namespace hopflift
