#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "hopflift/generators.hpp"
#include "hopflift/lift.hpp"
#include "hopflift/moments.hpp"
#include "hopflift/verify.hpp"

using namespace hopflift;
using Cplx = std::complex<double>;

namespace {

DesignS3 six_point_design() {
  LiftConfig config;
  config.gon_size = 3;
  return lift_design(antipodal_pair(), config);
}

}  // namespace

TEST_CASE("residuals of single monomials") {
  DesignS1 tri = regular_gon(3);
  CHECK(residual(tri, MonomialS1{1}) < 1e-15);
  CHECK(residual(tri, MonomialS1{2}) < 1e-15);
  CHECK(residual(tri, MonomialS1{3}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(residual(tri, MonomialS1{0}) < 1e-15);

  DesignS3 six = six_point_design();
  CHECK(residual(six, MonomialS3{1, 1, 0, 0}) < 1e-15);
  CHECK(residual(six, MonomialS3{1, 0, 0, 0}) < 1e-15);
  // a^3 is constant 1 on the 3-gon fiber over the north pole and 0 on the
  // south fiber, so the design sum is 1/2 against a zero moment.
  CHECK(residual(six, MonomialS3{3, 0, 0, 0}) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("certification of the reference designs") {
  StrengthReport six = certify(six_point_design(), 4, 1e-10);
  CHECK(six.certified_strength == 2);
  CHECK(six.degrees[3].max_residual == doctest::Approx(0.5).epsilon(1e-12));

  CHECK(certify(antipodal_pair(), 2).certified_strength == 1);
  for (int n : {1, 2, 5, 8}) CHECK(certify(regular_gon(n), n + 1).certified_strength == n - 1);
}

TEST_CASE("certified strength grows with the tolerance") {
  DesignS2 pair = antipodal_pair();
  // Residual ladder for the pole pair: 2/3 at degree 2, ~0 at degree 3 (odd
  // symmetry), 4/5 at degree 4.
  CHECK(certify(pair, 4, 1e-9).certified_strength == 1);
  CHECK(certify(pair, 4, 0.7).certified_strength == 3);
  CHECK(certify(pair, 4, 0.9).certified_strength == 4);
  CHECK(certify(pair, 4, 0.7).degrees[4].max_residual == doctest::Approx(0.8).epsilon(1e-13));
}

TEST_CASE("an equal-weight sum that misses 1 by roundoff fails an absurd tolerance") {
  // Seven copies of the double nearest 1/7 sum to 1 - 2^-52, so even the
  // constant monomial shows a residual of about 2.2e-16.
  StrengthReport r = certify(regular_gon(7), 2, 1e-18);
  CHECK(r.certified_strength == -1);
}

TEST_CASE("serial and parallel certification agree bit for bit") {
  std::vector<AnyDesign> designs = {
      AnyDesign(six_point_design()),
      AnyDesign(regular_gon(7, 0.41)),
      AnyDesign(product_design_s2(4)),
      AnyDesign(product_design_s2_weighted(5)),
  };
  std::vector<int> degrees = {6, 8, 6, 5};
  for (std::size_t i = 0; i < designs.size(); ++i) {
    StrengthReport serial = certify(designs[i], degrees[i], kDefaultCertifyTol, Exec::kSerial);
    StrengthReport parallel = certify(designs[i], degrees[i], kDefaultCertifyTol, Exec::kParallel);
    CHECK(serial.certified_strength == parallel.certified_strength);
    REQUIRE(serial.degrees.size() == parallel.degrees.size());
    for (std::size_t d = 0; d < serial.degrees.size(); ++d) {
      CHECK(serial.degrees[d].max_residual == parallel.degrees[d].max_residual);
      CHECK(serial.degrees[d].basis_size == parallel.degrees[d].basis_size);
    }
    CHECK(serial.to_json() == parallel.to_json());
  }
}

TEST_CASE("conjugate monomials have identical residuals") {
  DesignS3 six = six_point_design();
  for (const auto& m : monomial_basis_s3(4)) {
    CHECK(residual(six, m) == residual(six, conjugate(m)));
  }
  DesignS2 prod = product_design_s2(3, {PhaseMode::kRandom, 5, {}});
  for (const auto& m : monomial_basis_s2(4)) {
    CHECK(residual(prod, m) == residual(prod, conjugate(m)));
  }
}

TEST_CASE("rotating a circle design leaves its residual profile unchanged") {
  std::vector<PointS1> pts = {unit_phase(0.0), unit_phase(0.4), unit_phase(1.1)};
  std::vector<double> w = {0.2, 0.3, 0.5};
  DesignS1 base(pts, w);

  Cplx rot = unit_phase(0.77).z();
  std::vector<PointS1> rotated;
  for (const auto& p : pts) rotated.push_back(PointS1::renormalized(p.z() * rot));
  DesignS1 turned(rotated, w);

  StrengthReport a = certify(base, 6);
  StrengthReport b = certify(turned, 6);
  for (std::size_t d = 0; d < a.degrees.size(); ++d) {
    CHECK(std::abs(a.degrees[d].max_residual - b.degrees[d].max_residual) < 1e-12);
  }
}

TEST_CASE("quadrature-backed certification agrees with the closed-form scan") {
  std::vector<std::pair<AnyDesign, int>> cases = {
      {AnyDesign(six_point_design()), 3},
      {AnyDesign(regular_gon(5)), 6},
      {AnyDesign(product_design_s2(3)), 4},
  };
  for (const auto& [design, max_degree] : cases) {
    StrengthReport exact = certify(design, max_degree);
    StrengthReport brute = brute_force_certify(design, max_degree);
    CHECK(exact.certified_strength == brute.certified_strength);
    REQUIRE(exact.degrees.size() == brute.degrees.size());
    for (std::size_t d = 0; d < exact.degrees.size(); ++d) {
      CHECK(std::abs(exact.degrees[d].max_residual - brute.degrees[d].max_residual) < 2e-9);
    }
  }
}

TEST_CASE("quadrature certification enforces its preconditions") {
  DesignS1 small = regular_gon(4);
  CHECK_THROWS_AS(brute_force_certify(small, 7), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_certify(regular_gon(1001), 1), std::invalid_argument);
  CHECK_THROWS_AS(certify(small, -1), std::invalid_argument);
}

TEST_CASE("numeric moments match the closed forms far below the certify tolerance") {
  for (int k = -6; k <= 6; ++k) {
    MomentEstimate est = moment_by_quadrature(MonomialS1{k});
    CHECK(est.error <= 1e-9);
    CHECK(std::abs(est.value - to_double(moment(MonomialS1{k}))) < 1e-9);
  }
  for (const auto& m : monomial_basis_s2(4)) {
    MomentEstimate est = moment_by_quadrature(m);
    CHECK(est.error <= 1e-9);
    CHECK(std::abs(est.value - to_double(moment(m))) < 1e-9);
  }
  for (const auto& m : monomial_basis_s3(4)) {
    MomentEstimate est = moment_by_quadrature(m);
    CHECK(est.error <= 1e-9);
    CHECK(std::abs(est.value - to_double(moment(m))) < 1e-9);
  }
}

TEST_CASE("strength reports serialize to parseable json and readable text") {
  StrengthReport r = certify(six_point_design(), 3);
  nlohmann::json j = nlohmann::json::parse(r.to_json());
  CHECK(j["certified_strength"].get<int>() == 2);
  CHECK(j["max_degree"].get<int>() == 3);
  CHECK(j["tolerance"].get<double>() == r.tolerance);
  REQUIRE(j["degrees"].size() == 4);
  for (std::size_t d = 0; d < 4; ++d) {
    CHECK(j["degrees"][d]["degree"].get<int>() == static_cast<int>(d));
    CHECK(j["degrees"][d]["basis_size"].get<std::size_t>() == r.degrees[d].basis_size);
    CHECK(j["degrees"][d]["max_residual"].get<double>() == r.degrees[d].max_residual);
  }

  std::string text = r.to_string();
  CHECK(text.find("certified strength 2") != std::string::npos);
  CHECK(text.find("degree  3") != std::string::npos);
  CHECK(text.find("max residual") != std::string::npos);
}
