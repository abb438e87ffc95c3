#include "hopflift/monomials.hpp"

namespace hopflift {

MonomialS2 conjugate(const MonomialS2& m) {
  return MonomialS2{m.xi_pow, m.eta_bar_pow, m.eta_pow};
}

MonomialS3 conjugate(const MonomialS3& m) {
  return MonomialS3{m.a_bar_pow, m.a_pow, m.b_bar_pow, m.b_pow};
}

std::complex<double> ipow(std::complex<double> x, int n) {
  if (n < 0) return 1.0 / ipow(x, -n);
  std::complex<double> r = 1.0;
  while (n > 0) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}

std::complex<double> eval(const MonomialS1& m, const PointS1& p) {
  return ipow(p.z(), m.exponent);
}

// The eta and coordinate pairs are grouped so conjugate monomials evaluate to
// bitwise conjugate values.
std::complex<double> eval(const MonomialS2& m, const PointS2& p) {
  return ipow(p.xi(), m.xi_pow) *
         (ipow(p.eta(), m.eta_pow) * ipow(std::conj(p.eta()), m.eta_bar_pow));
}

std::complex<double> eval(const MonomialS3& m, const PointS3& p) {
  return (ipow(p.a(), m.a_pow) * ipow(std::conj(p.a()), m.a_bar_pow)) *
         (ipow(p.b(), m.b_pow) * ipow(std::conj(p.b()), m.b_bar_pow));
}

std::vector<MonomialS1> monomial_basis_s1(int max_degree) {
  std::vector<MonomialS1> out;
  out.push_back({0});
  for (int d = 1; d <= max_degree; ++d) {
    out.push_back({d});
    out.push_back({-d});
  }
  return out;
}

std::vector<MonomialS2> monomial_basis_s2(int max_degree) {
  std::vector<MonomialS2> out;
  for (int d = 0; d <= max_degree; ++d)
    for (int p = d; p >= 0; --p)
      for (int q = d - p; q >= 0; --q) out.push_back({p, q, d - p - q});
  return out;
}

std::vector<MonomialS3> monomial_basis_s3(int max_degree) {
  std::vector<MonomialS3> out;
  for (int d = 0; d <= max_degree; ++d)
    for (int i = d; i >= 0; --i)
      for (int j = d - i; j >= 0; --j)
        for (int k = d - i - j; k >= 0; --k) out.push_back({i, j, k, d - i - j - k});
  return out;
}

}  // namespace hopflift
