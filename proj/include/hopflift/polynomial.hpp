#pragma once

#include <complex>
#include <map>
#include <string>

#include "hopflift/monomials.hpp"
#include "hopflift/points.hpp"
#include "hopflift/rational.hpp"

namespace hopflift {

// Sparse polynomials with exact rational coefficients, keyed by monomial in
// degree-lex order. Every operation in this library (pushforward, pullback,
// fiber averaging) stays inside the rationals, which is what makes the
// operator identities testable exactly.

struct DegreeLexLessS2 {
  bool operator()(const MonomialS2& x, const MonomialS2& y) const {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    if (x.xi_pow != y.xi_pow) return x.xi_pow < y.xi_pow;
    if (x.eta_pow != y.eta_pow) return x.eta_pow < y.eta_pow;
    return x.eta_bar_pow < y.eta_bar_pow;
  }
};

struct DegreeLexLessS3 {
  bool operator()(const MonomialS3& x, const MonomialS3& y) const {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    if (x.a_pow != y.a_pow) return x.a_pow < y.a_pow;
    if (x.a_bar_pow != y.a_bar_pow) return x.a_bar_pow < y.a_bar_pow;
    if (x.b_pow != y.b_pow) return x.b_pow < y.b_pow;
    return x.b_bar_pow < y.b_bar_pow;
  }
};

class PolynomialS2 {
 public:
  using TermMap = std::map<MonomialS2, Rational, DegreeLexLessS2>;

  PolynomialS2() = default;

  /// Adds c * m, dropping the term if the coefficient cancels to zero.
  void add(const MonomialS2& m, const Rational& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;

  std::complex<double> evaluate(const PointS2& p) const;

  /// Rewrites eta*conj(eta) -> 1 - xi^2 until min(eta_pow, eta_bar_pow) == 0
  /// in every term. On the sphere this is the identity map; the result is a
  /// normal form, so two polynomials agree as functions on S2 iff their
  /// canonical forms are equal term by term.
  PolynomialS2 canonicalized() const;

  /// "1/2 + 1/2*xi", "2*eta*eta_bar", "0". Terms in degree-lex order.
  std::string to_string() const;

  bool operator==(const PolynomialS2& other) const { return terms_ == other.terms_; }

 private:
  TermMap terms_;
};

class PolynomialS3 {
 public:
  using TermMap = std::map<MonomialS3, Rational, DegreeLexLessS3>;

  PolynomialS3() = default;

  void add(const MonomialS3& m, const Rational& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;

  std::complex<double> evaluate(const PointS3& p) const;

  /// "a*a_bar + b*b_bar" style rendering, terms in degree-lex order.
  std::string to_string() const;

  bool operator==(const PolynomialS3& other) const { return terms_ == other.terms_; }

 private:
  TermMap terms_;
};

}  // namespace hopflift
