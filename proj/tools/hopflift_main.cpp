#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hopflift/design_io.hpp"
#include "hopflift/errors.hpp"
#include "hopflift/generators.hpp"
#include "hopflift/hopf.hpp"
#include "hopflift/lift.hpp"
#include "hopflift/verify.hpp"

namespace {

using namespace hopflift;

AnyDesign read_input(const std::string& path, std::optional<Sphere> expect, bool renormalize) {
  ReadOptions options;
  options.expect_sphere = expect;
  options.renormalize = renormalize;
  if (path == "-") return read_design(std::cin, options);
  return read_design_file(path, options);
}

void write_output(const std::string& path, const AnyDesign& design, const std::string& meta) {
  WriteOptions options;
  options.meta_json = meta;
  if (path == "-") {
    write_design(std::cout, design, options);
  } else {
    write_design_file(path, design, options);
  }
}

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and certify spherical designs via the Hopf fibration"};
  app.require_subcommand(1);

  std::string out_path = "-";
  std::string in_path = "-";
  bool renormalize = false;

  // gen
  CLI::App* gen = app.add_subcommand("gen", "Generate a design file");
  gen->require_subcommand(1);
  int gon_n = 0;
  double gon_phase = 0.0;
  CLI::App* s1_gon = gen->add_subcommand("s1-gon", "Regular n-gon on S1 (an (n-1)-design)");
  s1_gon->add_option("--n", gon_n, "number of gon vertices")->required()->check(CLI::PositiveNumber);
  s1_gon->add_option("--phase", gon_phase, "rotation of the first vertex (radians)");
  s1_gon->add_option("--out", out_path, "output file, - for stdout");

  CLI::App* s2_antipodal =
      gen->add_subcommand("s2-antipodal", "The two poles of S2 (a 1-design)");
  s2_antipodal->add_option("--out", out_path, "output file, - for stdout");

  int product_t = 0;
  std::string phases_mode = "zero";
  std::uint64_t seed = 0;
  bool weighted = false;
  CLI::App* s2_product =
      gen->add_subcommand("s2-product", "Latitude-circle product t-design on S2");
  s2_product->add_option("--t", product_t, "design strength")->required()->check(CLI::NonNegativeNumber);
  s2_product->add_option("--phases", phases_mode, "latitude gon phases: zero or random")
      ->check(CLI::IsMember({"zero", "random"}));
  s2_product->add_option("--seed", seed, "seed for random phases")->envname("HOPFLIFT_SEED");
  s2_product->add_flag("--weighted", weighted,
                       "Gauss-Legendre latitudes with their weights instead of equal weight");
  s2_product->add_option("--out", out_path, "output file, - for stdout");

  // lift
  int lift_t = -1;
  int gon_size = 0;
  bool merge = false;
  double chart_threshold = 0.0;
  CLI::App* lift = app.add_subcommand("lift", "Lift an S2 design to S3 along Hopf fibers");
  lift->add_option("--input", in_path, "S2 design file, - for stdin");
  lift->add_option("--t", lift_t, "base design strength (sets gon size 2t+1 when --gon-size is absent)")
      ->check(CLI::NonNegativeNumber);
  lift->add_option("--gon-size", gon_size, "fiber gon size")->check(CLI::PositiveNumber);
  lift->add_option("--phases", phases_mode, "fiber phases: zero or random")
      ->check(CLI::IsMember({"zero", "random"}));
  lift->add_option("--seed", seed, "seed for random phases")->envname("HOPFLIFT_SEED");
  lift->add_flag("--merge", merge, "merge coincident lifted points, summing weights");
  lift->add_option("--chart-threshold", chart_threshold, "xi threshold for the section chart switch")
      ->check(CLI::Range(-1.0, 1.0));
  lift->add_flag("--renormalize", renormalize, "project slightly off-sphere input points back");
  lift->add_option("--out", out_path, "output file, - for stdout");

  // verify
  int max_degree = 0;
  double tol = kDefaultCertifyTol;
  int expect_strength = -1;
  bool serial = false;
  std::string report_json;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Certify design strength against exact moments");
  verify_cmd->add_option("--input", in_path, "design file, - for stdin");
  verify_cmd->add_option("--max-degree", max_degree, "highest degree to scan")
      ->required()
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--tol", tol, "residual tolerance")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--expect-strength", expect_strength,
                         "exit 1 unless certified strength reaches this");
  verify_cmd->add_flag("--serial", serial, "disable the parallel residual scan");
  verify_cmd->add_flag("--renormalize", renormalize, "project slightly off-sphere points back");
  verify_cmd->add_option("--report-json", report_json, "also write the report as JSON to this file");

  // pushforward
  int e_i = 0, e_j = 0, e_k = 0, e_l = 0;
  CLI::App* pushforward = app.add_subcommand(
      "pushforward", "Print the fiber average of a^i a_bar^j b^k b_bar^l as a polynomial on S2");
  pushforward->add_option("i", e_i, "power of a")->required()->check(CLI::NonNegativeNumber);
  pushforward->add_option("j", e_j, "power of conj(a)")->required()->check(CLI::NonNegativeNumber);
  pushforward->add_option("k", e_k, "power of b")->required()->check(CLI::NonNegativeNumber);
  pushforward->add_option("l", e_l, "power of conj(b)")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (s1_gon->parsed()) {
      AnyDesign d = regular_gon(gon_n, gon_phase);
      write_output(out_path, d, "{\"generator\": \"s1-gon\", \"n\": " + std::to_string(gon_n) +
                                    ", \"phase\": " + fmt(gon_phase) + "}");
    } else if (s2_antipodal->parsed()) {
      AnyDesign d = antipodal_pair();
      write_output(out_path, d, "{\"generator\": \"s2-antipodal\"}");
    } else if (s2_product->parsed()) {
      LatitudePhases phases;
      phases.mode = phases_mode == "random" ? PhaseMode::kRandom : PhaseMode::kZero;
      phases.seed = seed;
      AnyDesign d = weighted ? product_design_s2_weighted(product_t, phases)
                             : product_design_s2(product_t, phases);
      write_output(out_path, d,
                   "{\"generator\": \"s2-product\", \"t\": " + std::to_string(product_t) +
                       ", \"phases\": \"" + phases_mode + "\", \"seed\": " + std::to_string(seed) +
                       (weighted ? ", \"weighted\": true}" : "}"));
    } else if (lift->parsed()) {
      if (gon_size == 0 && lift_t < 0) {
        std::cerr << "lift needs --gon-size or --t\n";
        return 2;
      }
      LiftConfig config;
      config.gon_size = gon_size > 0 ? gon_size : 2 * lift_t + 1;
      config.phase_mode = phases_mode == "random" ? PhaseMode::kRandom : PhaseMode::kZero;
      config.seed = seed;
      config.section.chart_threshold = chart_threshold;
      config.merge_duplicates = merge;
      DesignS2 base = std::get<DesignS2>(read_input(in_path, Sphere::kS2, renormalize));
      DesignS3 lifted = lift_design(base, config);
      int report_t = lift_t >= 0 ? lift_t : (config.gon_size - 1) / 2;
      std::cerr << cardinality_report(report_t, lifted).to_string() << "\n";
      write_output(out_path, lifted,
                   "{\"generator\": \"lift\", \"gon_size\": " + std::to_string(config.gon_size) +
                       ", \"phases\": \"" + phases_mode + "\", \"seed\": " + std::to_string(seed) +
                       ", \"base_points\": " + std::to_string(base.size()) + "}");
    } else if (verify_cmd->parsed()) {
      AnyDesign d = read_input(in_path, std::nullopt, renormalize);
      StrengthReport report =
          certify(d, max_degree, tol, serial ? Exec::kSerial : Exec::kParallel);
      std::cout << report.to_string();
      if (!report_json.empty()) {
        if (report_json == "-") {
          std::cout << report.to_json() << "\n";
        } else {
          std::ofstream out(report_json);
          if (!out) throw std::runtime_error("cannot open \"" + report_json + "\" for writing");
          out << report.to_json() << "\n";
        }
      }
      if (expect_strength >= 0 && report.certified_strength < expect_strength) {
        std::cerr << "expected strength >= " << expect_strength << ", certified "
                  << report.certified_strength << "\n";
        return 1;
      }
    } else if (pushforward->parsed()) {
      std::cout << pushforward_monomial(MonomialS3{e_i, e_j, e_k, e_l}).to_string() << "\n";
    }
  } catch (const NoConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const OffSphereError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
