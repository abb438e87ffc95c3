#include "hopflift/points.hpp"

#include <cmath>
#include <string>

#include "hopflift/errors.hpp"

namespace hopflift {
namespace detail {

void require_unit(double norm_sq, const char* sphere) {
  if (std::abs(norm_sq - 1.0) > kUnitNormTol) {
    throw OffSphereError(std::string(sphere) + " point has squared norm " +
                         std::to_string(norm_sq));
  }
}

}  // namespace detail

PointS1 PointS1::renormalized(Complex z) {
  double n = std::abs(z);
  if (n == 0.0) throw OffSphereError("cannot renormalize the zero vector onto S1");
  return PointS1(z / n);
}

PointS2 PointS2::renormalized(double xi, Complex eta) {
  double n = std::sqrt(xi * xi + std::norm(eta));
  if (n == 0.0) throw OffSphereError("cannot renormalize the zero vector onto S2");
  return PointS2(xi / n, eta / n);
}

PointS3 PointS3::renormalized(Complex a, Complex b) {
  double n = std::sqrt(std::norm(a) + std::norm(b));
  if (n == 0.0) throw OffSphereError("cannot renormalize the zero vector onto S3");
  return PointS3(a / n, b / n);
}

PointS1 unit_phase(double angle) {
  return PointS1(Complex(std::cos(angle), std::sin(angle)));
}

double distance(const PointS1& p, const PointS1& q) { return std::abs(p.z() - q.z()); }

double distance(const PointS2& p, const PointS2& q) {
  double dxi = p.xi() - q.xi();
  return std::sqrt(dxi * dxi + std::norm(p.eta() - q.eta()));
}

double distance(const PointS3& p, const PointS3& q) {
  return std::sqrt(std::norm(p.a() - q.a()) + std::norm(p.b() - q.b()));
}

}  // namespace hopflift
