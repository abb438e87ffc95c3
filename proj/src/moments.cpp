#include "hopflift/moments.hpp"

namespace hopflift {

Rational moment(const MonomialS1& m) { return m.exponent == 0 ? Rational(1) : Rational(0); }

Rational moment(const MonomialS2& m) {
  // The eta phase is uniform and independent of xi, so the moment vanishes
  // unless eta and conj(eta) powers match; then |eta|^2 = 1 - xi^2 with xi
  // uniform on [-1,1]:
  //   E[xi^p (1-xi^2)^q] = sum_s C(q,s) (-1)^s E[xi^{p+2s}],  E[xi^n] = 1/(n+1) for even n.
  if (m.eta_pow != m.eta_bar_pow) return 0;
  if (m.xi_pow % 2 != 0) return 0;
  Rational sum = 0;
  for (int s = 0; s <= m.eta_pow; ++s) {
    Rational term(binomial(static_cast<unsigned>(m.eta_pow), static_cast<unsigned>(s)),
                  BigInt(m.xi_pow + 2 * s + 1));
    if (s % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

Rational moment(const MonomialS3& m) {
  // Both complex coordinates carry independent uniform phases, so the moment
  // vanishes unless the a and b powers pair up; then with p = a_pow, q = b_pow,
  //   E[|a|^{2p} |b|^{2q}] = p! q! / (p+q+1)!.
  if (m.a_pow != m.a_bar_pow || m.b_pow != m.b_bar_pow) return 0;
  unsigned p = static_cast<unsigned>(m.a_pow);
  unsigned q = static_cast<unsigned>(m.b_pow);
  return Rational(factorial(p) * factorial(q), factorial(p + q + 1));
}

}  // namespace hopflift
