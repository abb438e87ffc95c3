#include "hopflift/verify.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hopflift/errors.hpp"
#include "hopflift/moments.hpp"
#include "hopflift/quadrature.hpp"

namespace hopflift {
namespace {

constexpr double kPi = std::numbers::pi;

// Points are processed in fixed-size blocks in index order, and threads split
// the monomial list inside each block. Every monomial therefore accumulates
// its point sum in the same order no matter how many threads run, so serial
// and parallel reports match bit for bit.
constexpr std::size_t kBlockSize = 256;

using Cplx = std::complex<double>;

template <class Monomial>
struct Tables;

// Power tables per point: m(x) becomes a handful of table lookups, and
// conj(v^n) = (conj v)^n holds exactly in floating point, so conjugated
// factors read the same table.
template <>
struct Tables<MonomialS1> {
  std::vector<Cplx> z;  // z[p*stride + d] = z_p^d
  std::size_t stride;

  Tables(const std::vector<PointS1>& pts, int max_degree) : stride(max_degree + 1) {
    z.resize(pts.size() * stride);
    for (std::size_t p = 0; p < pts.size(); ++p) {
      Cplx* row = &z[p * stride];
      row[0] = 1.0;
      for (int d = 1; d <= max_degree; ++d) row[d] = row[d - 1] * pts[p].z();
    }
  }
  Cplx eval(std::size_t p, const MonomialS1& m) const {
    const Cplx* row = &z[p * stride];
    return m.exponent >= 0 ? row[m.exponent] : std::conj(row[-m.exponent]);
  }
};

template <>
struct Tables<MonomialS2> {
  std::vector<double> xi;
  std::vector<Cplx> eta;
  std::size_t stride;

  Tables(const std::vector<PointS2>& pts, int max_degree) : stride(max_degree + 1) {
    xi.resize(pts.size() * stride);
    eta.resize(pts.size() * stride);
    for (std::size_t p = 0; p < pts.size(); ++p) {
      double* xrow = &xi[p * stride];
      Cplx* erow = &eta[p * stride];
      xrow[0] = 1.0;
      erow[0] = 1.0;
      for (int d = 1; d <= max_degree; ++d) {
        xrow[d] = xrow[d - 1] * pts[p].xi();
        erow[d] = erow[d - 1] * pts[p].eta();
      }
    }
  }
  Cplx eval(std::size_t p, const MonomialS2& m) const {
    const double* xrow = &xi[p * stride];
    const Cplx* erow = &eta[p * stride];
    // The eta pair is grouped so conjugate monomials evaluate to bitwise
    // conjugate values.
    return xrow[m.xi_pow] * (erow[m.eta_pow] * std::conj(erow[m.eta_bar_pow]));
  }
};

template <>
struct Tables<MonomialS3> {
  std::vector<Cplx> a;
  std::vector<Cplx> b;
  std::size_t stride;

  Tables(const std::vector<PointS3>& pts, int max_degree) : stride(max_degree + 1) {
    a.resize(pts.size() * stride);
    b.resize(pts.size() * stride);
    for (std::size_t p = 0; p < pts.size(); ++p) {
      Cplx* arow = &a[p * stride];
      Cplx* brow = &b[p * stride];
      arow[0] = 1.0;
      brow[0] = 1.0;
      for (int d = 1; d <= max_degree; ++d) {
        arow[d] = arow[d - 1] * pts[p].a();
        brow[d] = brow[d - 1] * pts[p].b();
      }
    }
  }
  Cplx eval(std::size_t p, const MonomialS3& m) const {
    const Cplx* arow = &a[p * stride];
    const Cplx* brow = &b[p * stride];
    // Grouped per coordinate so conjugate monomials evaluate to bitwise
    // conjugate values.
    return (arow[m.a_pow] * std::conj(arow[m.a_bar_pow])) *
           (brow[m.b_pow] * std::conj(brow[m.b_bar_pow]));
  }
};

template <class P, class Monomial>
std::vector<Cplx> weighted_sums(const WeightedDesign<P>& design,
                                const std::vector<Monomial>& basis, int max_degree, Exec exec) {
  Tables<Monomial> tables(design.points(), max_degree);
  const std::vector<double>& w = design.weights();
  std::vector<Cplx> acc(basis.size(), Cplx(0.0));
  const long count = static_cast<long>(basis.size());
  for (std::size_t begin = 0; begin < design.size(); begin += kBlockSize) {
    std::size_t end = std::min(begin + kBlockSize, design.size());
    bool parallel = exec == Exec::kParallel;
#pragma omp parallel for schedule(static) if (parallel)
    for (long mi = 0; mi < count; ++mi) {
      Cplx local(0.0);
      for (std::size_t p = begin; p < end; ++p) local += w[p] * tables.eval(p, basis[mi]);
      acc[mi] += local;
    }
  }
  return acc;
}

template <class P, class Monomial>
StrengthReport report_from_sums(const WeightedDesign<P>& design,
                                const std::vector<Monomial>& basis, int max_degree, double tol,
                                Exec exec, const std::vector<double>& moments) {
  std::vector<Cplx> sums = weighted_sums(design, basis, max_degree, exec);
  StrengthReport report;
  report.tolerance = tol;
  report.max_degree = max_degree;
  report.degrees.assign(max_degree + 1, DegreeResidual{});
  for (int d = 0; d <= max_degree; ++d) report.degrees[d].degree = d;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    int d = basis[i].degree();
    double r = std::abs(sums[i] - moments[i]);
    report.degrees[d].basis_size += 1;
    report.degrees[d].max_residual = std::max(report.degrees[d].max_residual, r);
  }
  report.certified_strength = -1;
  for (int d = 0; d <= max_degree; ++d) {
    if (report.degrees[d].max_residual > tol) break;
    report.certified_strength = d;
  }
  return report;
}

template <class P, class Monomial>
StrengthReport certify_impl(const WeightedDesign<P>& design, const std::vector<Monomial>& basis,
                            int max_degree, double tol, Exec exec) {
  std::vector<double> moments(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) moments[i] = to_double(moment(basis[i]));
  return report_from_sums(design, basis, max_degree, tol, exec, moments);
}

template <class P, class Monomial>
StrengthReport brute_force_impl(const WeightedDesign<P>& design,
                                const std::vector<Monomial>& basis, int max_degree, double tol) {
  if (max_degree > 6) throw std::invalid_argument("brute_force_certify handles degree <= 6");
  if (design.size() > 1000) throw std::invalid_argument("brute_force_certify handles |X| <= 1000");
  std::vector<double> moments(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    MomentEstimate est = moment_by_quadrature(basis[i]);
    if (est.error > 1e-9)
      throw QuadratureFailure("moment quadrature error estimate above 1e-9");
    moments[i] = est.value;
  }
  return report_from_sums(design, basis, max_degree, tol, Exec::kSerial, moments);
}

template <class Monomial, class Design>
double residual_impl(const Design& design, const Monomial& m) {
  Cplx sum(0.0);
  for (std::size_t p = 0; p < design.size(); ++p)
    sum += design.weights()[p] * eval(m, design.points()[p]);
  return std::abs(sum - to_double(moment(m)));
}

std::string fmt_double(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string StrengthReport::to_string() const {
  std::ostringstream os;
  os << "certified strength " << certified_strength << " (tol " << tolerance << ", degrees 0.."
     << max_degree << ")\n";
  for (const DegreeResidual& d : degrees) {
    char line[96];
    std::snprintf(line, sizeof line, "  degree %2d: basis %4zu, max residual %.3e\n", d.degree,
                  d.basis_size, d.max_residual);
    os << line;
  }
  return os.str();
}

std::string StrengthReport::to_json() const {
  std::ostringstream os;
  os << "{\"certified_strength\": " << certified_strength << ", \"tolerance\": " << fmt_double(tolerance)
     << ", \"max_degree\": " << max_degree << ", \"degrees\": [";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) os << ", ";
    os << "{\"degree\": " << degrees[i].degree << ", \"basis_size\": " << degrees[i].basis_size
       << ", \"max_residual\": " << fmt_double(degrees[i].max_residual) << "}";
  }
  os << "]}";
  return os.str();
}

double residual(const DesignS1& design, const MonomialS1& m) { return residual_impl(design, m); }
double residual(const DesignS2& design, const MonomialS2& m) { return residual_impl(design, m); }
double residual(const DesignS3& design, const MonomialS3& m) { return residual_impl(design, m); }

StrengthReport certify(const DesignS1& design, int max_degree, double tol, Exec exec) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  return certify_impl(design, monomial_basis_s1(max_degree), max_degree, tol, exec);
}

StrengthReport certify(const DesignS2& design, int max_degree, double tol, Exec exec) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  return certify_impl(design, monomial_basis_s2(max_degree), max_degree, tol, exec);
}

StrengthReport certify(const DesignS3& design, int max_degree, double tol, Exec exec) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  return certify_impl(design, monomial_basis_s3(max_degree), max_degree, tol, exec);
}

StrengthReport certify(const AnyDesign& design, int max_degree, double tol, Exec exec) {
  return std::visit([&](const auto& d) { return certify(d, max_degree, tol, exec); }, design);
}

StrengthReport brute_force_certify(const DesignS1& design, int max_degree, double tol) {
  return brute_force_impl(design, monomial_basis_s1(max_degree), max_degree, tol);
}

StrengthReport brute_force_certify(const DesignS2& design, int max_degree, double tol) {
  return brute_force_impl(design, monomial_basis_s2(max_degree), max_degree, tol);
}

StrengthReport brute_force_certify(const DesignS3& design, int max_degree, double tol) {
  return brute_force_impl(design, monomial_basis_s3(max_degree), max_degree, tol);
}

StrengthReport brute_force_certify(const AnyDesign& design, int max_degree, double tol) {
  return std::visit([&](const auto& d) { return brute_force_certify(d, max_degree, tol); },
                    design);
}

namespace {

// The adaptive integrals are slow and get re-requested by every fixture, so
// results are memoized by exponent tuple.
template <class Key, class Compute>
MomentEstimate memoized(const Key& key, const Compute& compute) {
  static std::map<Key, MomentEstimate> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  MomentEstimate est = compute();
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, est).first->second;
}

}  // namespace

MomentEstimate moment_by_quadrature(const MonomialS1& m) {
  // (1/2pi) integral of cos(k theta); the imaginary part vanishes by
  // periodicity, so only the real part is integrated.
  int k = m.exponent;
  return memoized(k, [k] {
    Estimate est = integrate_adaptive(
        [k](const std::array<double, 3>& x) { return std::cos(k * x[0]) / (2.0 * kPi); }, 1,
        {0.0, 0.0, 0.0}, {2.0 * kPi, 0.0, 0.0});
    return MomentEstimate{est.value, est.error};
  });
}

MomentEstimate moment_by_quadrature(const MonomialS2& m) {
  // xi = cos(psi), eta = sin(psi) e^{i phi}, measure sin(psi)/(4 pi).
  int p = m.xi_pow, q = m.eta_pow, r = m.eta_bar_pow;
  return memoized(std::array<int, 3>{p, q, r}, [p, q, r] {
    Estimate est = integrate_adaptive(
        [p, q, r](const std::array<double, 3>& x) {
          double psi = x[0], phi = x[1];
          return std::pow(std::cos(psi), p) * std::pow(std::sin(psi), q + r) *
                 std::cos((q - r) * phi) * std::sin(psi) / (4.0 * kPi);
        },
        2, {0.0, 0.0, 0.0}, {kPi, 2.0 * kPi, 0.0});
    return MomentEstimate{est.value, est.error};
  });
}

MomentEstimate moment_by_quadrature(const MonomialS3& m) {
  // a = cos(phi) e^{i th1}, b = sin(phi) e^{i th2}, measure sin(2 phi)/(4 pi^2).
  int i = m.a_pow, j = m.a_bar_pow, k = m.b_pow, l = m.b_bar_pow;
  return memoized(std::array<int, 4>{i, j, k, l}, [i, j, k, l] {
    Estimate est = integrate_adaptive(
        [i, j, k, l](const std::array<double, 3>& x) {
          double phi = x[0], th1 = x[1], th2 = x[2];
          return std::pow(std::cos(phi), i + j) * std::pow(std::sin(phi), k + l) *
                 std::cos((i - j) * th1 + (k - l) * th2) * std::sin(2.0 * phi) /
                 (4.0 * kPi * kPi);
        },
        3, {0.0, 0.0, 0.0}, {kPi / 2.0, 2.0 * kPi, 2.0 * kPi});
    return MomentEstimate{est.value, est.error};
  });
}

}  // namespace hopflift
