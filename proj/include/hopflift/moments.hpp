#pragma once

#include "hopflift/monomials.hpp"
#include "hopflift/rational.hpp"

namespace hopflift {

// Exact monomial moments under the normalized uniform measures.
//
//   S1: E[z^k]                          = [k == 0]
//   S2: E[xi^p eta^q conj(eta)^r]       = 0 unless q == r and p even,
//        else sum_{s=0}^{q} C(q,s) (-1)^s / (p + 2s + 1)
//        (xi is uniform on [-1,1]; |eta|^2 = 1 - xi^2; the eta phase averages out)
//   S3: E[a^i conj(a)^j b^k conj(b)^l]  = 0 unless i == j and k == l,
//        else i! k! / (i + k + 1)!

Rational moment(const MonomialS1& m);
Rational moment(const MonomialS2& m);
Rational moment(const MonomialS3& m);

}  // namespace hopflift
