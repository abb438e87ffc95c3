#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "hopflift/design_io.hpp"
#include "hopflift/verify.hpp"

using namespace hopflift;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("hopflift_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

// Runs the CLI through the shell, capturing both streams. `args` may contain
// shell pipelines; every segment referencing the binary must use {cli}.
RunResult run_shell(const std::string& command_template, const std::string& stdin_text = "") {
  static int counter = 0;
  fs::path out = work_dir() / ("out" + std::to_string(counter));
  fs::path err = work_dir() / ("err" + std::to_string(counter));
  fs::path in = work_dir() / ("in" + std::to_string(counter));
  ++counter;
  spit(in, stdin_text);

  std::string command = command_template;
  const std::string token = "{cli}";
  for (std::size_t pos = command.find(token); pos != std::string::npos;
       pos = command.find(token, pos)) {
    command.replace(pos, token.size(), HOPFLIFT_CLI_PATH);
  }
  // Parenthesized so the redirections cover the whole pipeline, not only its
  // last command.
  command = "( " + command + " ) < " + in.string() + " > " + out.string() + " 2> " + err.string();

  RunResult result;
  int status = std::system(command.c_str());
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out);
  result.err = slurp(err);
  return result;
}

AnyDesign parse_design(const std::string& text) {
  std::istringstream in(text);
  return read_design(in);
}

}  // namespace

TEST_CASE("gen subcommands emit designs that parse and certify") {
  RunResult gon = run_shell("{cli} gen s1-gon --n 6");
  REQUIRE(gon.exit_code == 0);
  CHECK(gon.err.empty());
  AnyDesign d1 = parse_design(gon.out);
  REQUIRE(std::get<DesignS1>(d1).size() == 6);
  CHECK(certify(d1, 6).certified_strength == 5);

  RunResult poles = run_shell("{cli} gen s2-antipodal");
  REQUIRE(poles.exit_code == 0);
  AnyDesign d2 = parse_design(poles.out);
  CHECK(std::get<DesignS2>(d2).size() == 2);
  CHECK(certify(d2, 1).certified_strength == 1);

  RunResult product = run_shell("{cli} gen s2-product --t 3 --phases random --seed 11");
  REQUIRE(product.exit_code == 0);
  AnyDesign d3 = parse_design(product.out);
  CHECK(certify(d3, 3).certified_strength >= 3);

  RunResult weighted = run_shell("{cli} gen s2-product --t 4 --weighted");
  REQUIRE(weighted.exit_code == 0);
  CHECK(weighted.out.find("\"weights\"") != std::string::npos);
  CHECK(certify(parse_design(weighted.out), 4).certified_strength >= 4);
}

TEST_CASE("generation is byte deterministic") {
  std::string cmd = "{cli} gen s2-product --t 3 --phases random --seed 9";
  RunResult a = run_shell(cmd);
  RunResult b = run_shell(cmd);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);

  std::string lift_cmd = "{cli} gen s2-product --t 2 | {cli} lift --t 2 --phases random --seed 5";
  RunResult c = run_shell(lift_cmd);
  RunResult d = run_shell(lift_cmd);
  REQUIRE(c.exit_code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("the full pipeline certifies a lifted design") {
  RunResult r = run_shell(
      "{cli} gen s2-product --t 2 | {cli} lift --gon-size 5 | "
      "{cli} verify --max-degree 4 --expect-strength 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("certified strength 4") != std::string::npos);
}

TEST_CASE("lift keeps stdout clean and reports cardinality on stderr") {
  fs::path base = work_dir() / "base_t1.json";
  REQUIRE(run_shell("{cli} gen s2-product --t 1 --out " + base.string()).exit_code == 0);

  RunResult lifted = run_shell("{cli} lift --input " + base.string() + " --t 1");
  REQUIRE(lifted.exit_code == 0);
  AnyDesign d = parse_design(lifted.out);  // stdout is exactly one design file
  CHECK(std::get<DesignS3>(d).size() == 12);
  CHECK(lifted.err.find("|X| = 12") != std::string::npos);
  CHECK(lifted.err.find("(2t+1)(t+1)^2 = 12: met") != std::string::npos);
  CHECK(lifted.out.find("|X|") == std::string::npos);
}

TEST_CASE("every emitted file re-ingests without renormalization") {
  std::vector<std::string> commands = {
      "{cli} gen s1-gon --n 9 --phase 0.3",
      "{cli} gen s2-antipodal",
      "{cli} gen s2-product --t 4",
      "{cli} gen s2-product --t 4 --phases random --seed 3",
      "{cli} gen s2-product --t 5 --weighted",
      "{cli} gen s2-product --t 2 | {cli} lift --gon-size 6 --phases random --seed 8",
  };
  int idx = 0;
  for (const auto& cmd : commands) {
    RunResult r = run_shell(cmd);
    REQUIRE(r.exit_code == 0);
    fs::path file = work_dir() / ("reingest" + std::to_string(idx++) + ".json");
    spit(file, r.out);
    CHECK_NOTHROW(read_design_file(file.string()));
    RunResult verified = run_shell("{cli} verify --input " + file.string() + " --max-degree 1");
    CHECK(verified.exit_code == 0);
  }
}

TEST_CASE("exit codes distinguish the failure modes") {
  // 1: certification below the expectation.
  RunResult weak = run_shell(
      "{cli} gen s2-antipodal | {cli} lift --gon-size 3 | "
      "{cli} verify --max-degree 3 --expect-strength 3");
  CHECK(weak.exit_code == 1);
  CHECK(weak.err.find("expected strength >= 3") != std::string::npos);

  // 2: usage errors.
  CHECK(run_shell("{cli} gen s1-gon --n 3 --bogus").exit_code == 2);
  CHECK(run_shell("{cli} gen s1-gon").exit_code == 2);
  CHECK(run_shell("{cli} gen s1-gon --n 0").exit_code == 2);
  CHECK(run_shell("{cli} verify").exit_code == 2);
  CHECK(run_shell("{cli}").exit_code == 2);
  CHECK(run_shell("{cli} --help").exit_code == 0);

  RunResult missing_target = run_shell("{cli} gen s2-antipodal | {cli} lift");
  CHECK(missing_target.exit_code == 2);
  CHECK(missing_target.err.find("lift needs --gon-size or --t") != std::string::npos);

  // 4: malformed design files.
  fs::path bad = work_dir() / "bad.json";
  spit(bad, "{ nope");
  CHECK(run_shell("{cli} verify --input " + bad.string() + " --max-degree 1").exit_code == 4);
  CHECK(run_shell("{cli} lift --t 1 --input " + bad.string()).exit_code == 4);

  // 4 also covers lifting from the wrong sphere.
  fs::path s1file = work_dir() / "s1.json";
  REQUIRE(run_shell("{cli} gen s1-gon --n 4 --out " + s1file.string()).exit_code == 0);
  CHECK(run_shell("{cli} lift --t 1 --input " + s1file.string()).exit_code == 4);

  // 5: off-sphere coordinates.
  fs::path off = work_dir() / "off.json";
  spit(off, R"({"sphere": "s3", "points": [[2, 0, 0, 0]]})");
  CHECK(run_shell("{cli} verify --input " + off.string() + " --max-degree 1").exit_code == 5);

  // --renormalize rescues nearly-unit points.
  fs::path close = work_dir() / "close.json";
  spit(close, R"({"sphere": "s2", "points": [[1.0000001, 0, 0], [-1, 0, 0]]})");
  CHECK(run_shell("{cli} verify --input " + close.string() + " --max-degree 1").exit_code == 5);
  CHECK(run_shell("{cli} verify --renormalize --input " + close.string() + " --max-degree 1")
            .exit_code == 0);
}

TEST_CASE("pushforward prints fiber averages as polynomials") {
  RunResult aa = run_shell("{cli} pushforward 1 1 0 0");
  CHECK(aa.exit_code == 0);
  CHECK(aa.out == "1/2 + 1/2*xi\n");

  CHECK(run_shell("{cli} pushforward 1 0 0 0").out == "0\n");
  CHECK(run_shell("{cli} pushforward 0 0 0 0").out == "1\n");
  CHECK(run_shell("{cli} pushforward 2 1 1 0").out == "1/4*eta + 1/4*xi*eta\n");
  CHECK(run_shell("{cli} pushforward 1 1").exit_code == 2);
  CHECK(run_shell("{cli} pushforward -1 0 0 0").exit_code == 2);
}

TEST_CASE("verify writes machine-readable reports") {
  fs::path design = work_dir() / "six.json";
  REQUIRE(run_shell("{cli} gen s2-antipodal | {cli} lift --gon-size 3 --out " + design.string())
              .exit_code == 0);

  fs::path report = work_dir() / "report.json";
  RunResult r = run_shell("{cli} verify --input " + design.string() +
                          " --max-degree 3 --report-json " + report.string());
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(report));
  CHECK(j["certified_strength"].get<int>() == 2);
  CHECK(j["max_degree"].get<int>() == 3);
  CHECK(j["degrees"].size() == 4);

  RunResult inline_json = run_shell("{cli} verify --input " + design.string() +
                                    " --max-degree 2 --report-json -");
  REQUIRE(inline_json.exit_code == 0);
  CHECK(inline_json.out.find("\"certified_strength\": 2") != std::string::npos);
}

TEST_CASE("serial verification output matches the parallel default byte for byte") {
  fs::path design = work_dir() / "product4.json";
  REQUIRE(run_shell("{cli} gen s2-product --t 4 --out " + design.string()).exit_code == 0);
  RunResult parallel = run_shell("{cli} verify --input " + design.string() + " --max-degree 5");
  RunResult serial =
      run_shell("{cli} verify --input " + design.string() + " --max-degree 5 --serial");
  REQUIRE(parallel.exit_code == 0);
  REQUIRE(serial.exit_code == 0);
  CHECK(parallel.out == serial.out);
}
