#pragma once

#include <complex>

#include "hopflift/errors.hpp"

namespace hopflift {

using Complex = std::complex<double>;

// Construction-time tolerance on |norm^2 - 1|. Points beyond it are rejected,
// not renormalized; renormalization is an explicit opt-in.
inline constexpr double kUnitNormTol = 1e-12;

namespace detail {
void require_unit(double norm_sq, const char* sphere);
}

/// Point on S^1 = { z in C : |z| = 1 }.
class PointS1 {
 public:
  explicit PointS1(Complex z) : z_(z) { detail::require_unit(std::norm(z_), "S1"); }

  static PointS1 renormalized(Complex z);

  Complex z() const { return z_; }

 private:
  Complex z_;
};

/// Point on S^2 = { (xi, eta) in R x C : xi^2 + |eta|^2 = 1 }.
class PointS2 {
 public:
  PointS2(double xi, Complex eta) : xi_(xi), eta_(eta) {
    detail::require_unit(xi_ * xi_ + std::norm(eta_), "S2");
  }

  static PointS2 renormalized(double xi, Complex eta);

  double xi() const { return xi_; }
  Complex eta() const { return eta_; }

 private:
  double xi_;
  Complex eta_;
};

/// Point on S^3 = { (a, b) in C^2 : |a|^2 + |b|^2 = 1 }.
class PointS3 {
 public:
  PointS3(Complex a, Complex b) : a_(a), b_(b) {
    detail::require_unit(std::norm(a_) + std::norm(b_), "S3");
  }

  static PointS3 renormalized(Complex a, Complex b);

  Complex a() const { return a_; }
  Complex b() const { return b_; }

 private:
  Complex a_;
  Complex b_;
};

/// e^{i angle} as a point of S^1.
PointS1 unit_phase(double angle);

double distance(const PointS1& x, const PointS1& y);
double distance(const PointS2& x, const PointS2& y);
double distance(const PointS3& x, const PointS3& y);

}  // namespace hopflift
