#pragma once

#include <complex>
#include <functional>

#include "hopflift/points.hpp"
#include "hopflift/polynomial.hpp"

namespace hopflift {

/// The Hopf map (a,b) -> (|a|^2 - |b|^2, 2*a*b).
PointS2 hopf_map(const PointS3& x);

/// Right circle action (a,b) . z = (a*z, b*conj(z)), z on S1. The Hopf map is
/// invariant under it, so orbits are exactly the fibers.
PointS3 act(const PointS3& x, const PointS1& z);

/// Chart choice for the fiber section. Points with xi > chart_threshold use
/// the chart that excludes the south pole, the rest use the one excluding the
/// north pole; base_phase rotates the section along the fiber.
struct Section {
  double chart_threshold = 0.0;
  double base_phase = 0.0;
};

/// A point of the fiber over y, picked by the section charts:
///   xi > threshold:  ( sqrt((1+xi)/2),       eta/sqrt(2(1+xi)) )
///   otherwise:       ( eta/sqrt(2(1-xi)),    sqrt((1-xi)/2)    )
/// then rotated by base_phase.
PointS3 section_point(const PointS2& y, const Section& section = {});

/// section_point(y) . z: parametrizes the whole fiber over y.
PointS3 fiber_point(const PointS2& y, const PointS1& z, const Section& section = {});

/// Average of the S3 monomial over each fiber, as a polynomial on S2. Zero
/// unless a_pow + b_bar_pow == a_bar_pow + b_pow (the circle action kills
/// every other monomial); otherwise, with m = degree/2:
///   a_pow >= b_pow: (1/2^m) (1+xi)^{a_pow - b_pow} eta^{b_pow} eta_bar^{m - a_pow}
///   a_pow <= b_pow: (1/2^m) (1-xi)^{b_pow - a_pow} eta^{a_pow} eta_bar^{m - b_pow}
PolynomialS2 pushforward_monomial(const MonomialS3& m);

/// Composition with the Hopf map: xi^p eta^q eta_bar^r becomes a degree
/// 2(p+q+r) polynomial in a, conj(a), b, conj(b).
PolynomialS3 pullback_monomial(const MonomialS2& m);

PolynomialS2 pushforward_polynomial(const PolynomialS3& f);

/// n-point trapezoid average of f along the fiber over y. Exact for fiber
/// restrictions of S3 monomials of degree < n in the fiber phase.
std::complex<double> fiber_quadrature(const std::function<std::complex<double>(const PointS3&)>& f,
                                      const PointS2& y, int n, const Section& section = {});

}  // namespace hopflift
