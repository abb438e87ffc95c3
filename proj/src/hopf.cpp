#include "hopflift/hopf.hpp"

#include <cmath>
#include <numbers>

namespace hopflift {

PointS2 hopf_map(const PointS3& x) {
  return PointS2(std::norm(x.a()) - std::norm(x.b()), 2.0 * x.a() * x.b());
}

PointS3 act(const PointS3& x, const PointS1& z) {
  return PointS3(x.a() * z.z(), x.b() * std::conj(z.z()));
}

PointS3 section_point(const PointS2& y, const Section& section) {
  // Each chart's square-root argument stays >= 1 - |threshold| on its side of
  // the switch, so neither formula ever divides by a vanishing norm.
  double xi = y.xi();
  Complex a, b;
  if (xi > section.chart_threshold) {
    a = Complex(std::sqrt((1.0 + xi) / 2.0), 0.0);
    b = y.eta() / std::sqrt(2.0 * (1.0 + xi));
  } else {
    a = y.eta() / std::sqrt(2.0 * (1.0 - xi));
    b = Complex(std::sqrt((1.0 - xi) / 2.0), 0.0);
  }
  PointS3 base(a, b);
  if (section.base_phase == 0.0) return base;
  return act(base, unit_phase(section.base_phase));
}

PointS3 fiber_point(const PointS2& y, const PointS1& z, const Section& section) {
  return act(section_point(y, section), z);
}

PolynomialS2 pushforward_monomial(const MonomialS3& m) {
  // Along a fiber the monomial restricts to c(y) z^{i-j-k+l}, so the circle
  // average vanishes unless i + l == j + k; the surviving coefficient comes
  // from the chart formulas with |eta|^2 = (1-xi)(1+xi).
  PolynomialS2 out;
  int i = m.a_pow, j = m.a_bar_pow, k = m.b_pow, l = m.b_bar_pow;
  if (i + l != j + k) return out;
  int half = (i + j + k + l) / 2;
  Rational scale(1, BigInt(1) << half);
  if (i >= k) {
    // (1/2^m) (1+xi)^{i-k} eta^k eta_bar^{m-i}
    int e = i - k;
    for (int s = 0; s <= e; ++s) {
      out.add(MonomialS2{s, k, half - i},
              scale * Rational(binomial(static_cast<unsigned>(e), static_cast<unsigned>(s))));
    }
  } else {
    // (1/2^m) (1-xi)^{k-i} eta^i eta_bar^{m-k}
    int e = k - i;
    for (int s = 0; s <= e; ++s) {
      Rational c = scale * Rational(binomial(static_cast<unsigned>(e), static_cast<unsigned>(s)));
      if (s % 2 != 0) c = -c;
      out.add(MonomialS2{s, i, half - k}, c);
    }
  }
  return out;
}

PolynomialS3 pullback_monomial(const MonomialS2& m) {
  // xi^p eta^q eta_bar^r composed with the Hopf map:
  //   2^{q+r} (a a_bar - b b_bar)^p a^q a_bar^r b^q b_bar^r.
  PolynomialS3 out;
  int p = m.xi_pow, q = m.eta_pow, r = m.eta_bar_pow;
  Rational scale(BigInt(1) << (q + r), 1);
  for (int s = 0; s <= p; ++s) {
    Rational c = scale * Rational(binomial(static_cast<unsigned>(p), static_cast<unsigned>(s)));
    if ((p - s) % 2 != 0) c = -c;
    out.add(MonomialS3{s + q, s + r, p - s + q, p - s + r}, c);
  }
  return out;
}

PolynomialS2 pushforward_polynomial(const PolynomialS3& f) {
  PolynomialS2 out;
  for (const auto& [m, c] : f.terms()) {
    const PolynomialS2 piece = pushforward_monomial(m);
    for (const auto& [m2, c2] : piece.terms()) out.add(m2, c * c2);
  }
  return out;
}

std::complex<double> fiber_quadrature(const std::function<std::complex<double>(const PointS3&)>& f,
                                      const PointS2& y, int n, const Section& section) {
  PointS3 base = section_point(y, section);
  std::complex<double> sum = 0.0;
  for (int k = 0; k < n; ++k) {
    sum += f(act(base, unit_phase(2.0 * std::numbers::pi * k / n)));
  }
  return sum / static_cast<double>(n);
}

}  // namespace hopflift
