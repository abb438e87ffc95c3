#include "hopflift/polynomial.hpp"

#include <sstream>

namespace hopflift {
namespace {

// first tracks whether anything has been written for this term yet; the
// separator before a factor is "*" unless it opens the term.
void append_power(std::ostream& os, const char* name, int pow, bool& first) {
  if (pow == 0) return;
  if (!first) os << "*";
  first = false;
  os << name;
  if (pow > 1) os << "^" << pow;
}

template <class TermMap, class WriteVars>
std::string render(const TermMap& terms, WriteVars&& write_vars) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [m, c] : terms) {
    Rational abs_c = c < 0 ? Rational(-c) : c;
    os << (first_term ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first_term = false;
    bool wrote_coeff = abs_c != 1 || m.degree() == 0;
    if (wrote_coeff) os << to_string(abs_c);
    bool first_factor = !wrote_coeff;
    write_vars(os, m, first_factor);
  }
  return os.str();
}

}  // namespace

void PolynomialS2::add(const MonomialS2& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int PolynomialS2::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::complex<double> PolynomialS2::evaluate(const PointS2& p) const {
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : terms_) sum += to_double(c) * eval(m, p);
  return sum;
}

PolynomialS2 PolynomialS2::canonicalized() const {
  // eta^q eta_bar^r with w = min(q,r) > 0 expands through (1 - xi^2)^w.
  PolynomialS2 out;
  for (const auto& [m, c] : terms_) {
    int w = std::min(m.eta_pow, m.eta_bar_pow);
    if (w == 0) {
      out.add(m, c);
      continue;
    }
    for (int s = 0; s <= w; ++s) {
      Rational coeff = c * Rational(binomial(static_cast<unsigned>(w), static_cast<unsigned>(s)));
      if (s % 2 != 0) coeff = -coeff;
      out.add(MonomialS2{m.xi_pow + 2 * s, m.eta_pow - w, m.eta_bar_pow - w}, coeff);
    }
  }
  return out;
}

std::string PolynomialS2::to_string() const {
  return render(terms_, [](std::ostream& os, const MonomialS2& m, bool& first) {
    append_power(os, "xi", m.xi_pow, first);
    append_power(os, "eta", m.eta_pow, first);
    append_power(os, "eta_bar", m.eta_bar_pow, first);
  });
}

void PolynomialS3::add(const MonomialS3& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int PolynomialS3::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::complex<double> PolynomialS3::evaluate(const PointS3& p) const {
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : terms_) sum += to_double(c) * eval(m, p);
  return sum;
}

std::string PolynomialS3::to_string() const {
  return render(terms_, [](std::ostream& os, const MonomialS3& m, bool& first) {
    append_power(os, "a", m.a_pow, first);
    append_power(os, "a_bar", m.a_bar_pow, first);
    append_power(os, "b", m.b_pow, first);
    append_power(os, "b_bar", m.b_bar_pow, first);
  });
}

}  // namespace hopflift
