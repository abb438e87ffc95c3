#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hopflift/points.hpp"

namespace hopflift {

// Monomial bases for the three spheres, in the coordinates used throughout:
//   S1: z            -> z^k
//   S2: (xi, eta)    -> xi^p eta^q conj(eta)^r
//   S3: (a, b)       -> a^i conj(a)^j b^k conj(b)^l
// Exponents are kept small (certification degrees), so plain ints suffice.

struct MonomialS1 {
  int exponent = 0;
  int degree() const { return exponent < 0 ? -exponent : exponent; }
  bool operator==(const MonomialS1&) const = default;
};

struct MonomialS2 {
  int xi_pow = 0;
  int eta_pow = 0;
  int eta_bar_pow = 0;
  int degree() const { return xi_pow + eta_pow + eta_bar_pow; }
  bool operator==(const MonomialS2&) const = default;
};

struct MonomialS3 {
  int a_pow = 0;
  int a_bar_pow = 0;
  int b_pow = 0;
  int b_bar_pow = 0;
  int degree() const { return a_pow + a_bar_pow + b_pow + b_bar_pow; }
  bool operator==(const MonomialS3&) const = default;
};

MonomialS2 conjugate(const MonomialS2& m);
MonomialS3 conjugate(const MonomialS3& m);

/// x^n for integer n (negative n allowed for unit-modulus bases like z on S1).
std::complex<double> ipow(std::complex<double> x, int n);

std::complex<double> eval(const MonomialS1& m, const PointS1& p);
std::complex<double> eval(const MonomialS2& m, const PointS2& p);
std::complex<double> eval(const MonomialS3& m, const PointS3& p);

// Every monomial of degree <= max_degree, ordered degree-major (degree 0
// first, then degree 1, ...) with a fixed order inside each degree. On S1 the
// list is z^k for |k| <= max_degree.
std::vector<MonomialS1> monomial_basis_s1(int max_degree);
std::vector<MonomialS2> monomial_basis_s2(int max_degree);
std::vector<MonomialS3> monomial_basis_s3(int max_degree);

}  // namespace hopflift
