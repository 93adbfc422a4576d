#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using quadmaps::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"series", "--n", "1"}).code == 2);
  CHECK(call({"series", "--n", "3", "--coords", "polar"}).code == 2);
  CHECK(call({"series", "--n", "3", "--format", "yaml"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("verdict lines") {
  auto g = call({"groebner", "--n", "6", "--N1", "1", "--N2", "1", "--coords", "hyperbolic"});
  CHECK(g.code == 0);
  CHECK(g.out.find("GROEBNER: PASS") != std::string::npos);

  auto b = call({"brst", "--n", "3", "--N2", "1", "--coords", "hyperbolic", "--degree", "4"});
  CHECK(b.code == 0);
  CHECK(b.out.find("D-SQUARED: PASS") != std::string::npos);
  CHECK(b.out.find("THEOREM-1: PASS") != std::string::npos);

  // the dual Lie algebra goes negative: a failed verification, not a usage error
  auto p = call({"pbw", "--n", "2", "--N2", "3", "--degree", "12"});
  CHECK(p.code == 1);
  CHECK(p.out.find("FAIL") != std::string::npos);

  auto z = call({"zcheck", "--n", "4"});
  CHECK(z.code == 0);
  CHECK(z.out.find("ZCHECK: PASS") != std::string::npos);
}

TEST_CASE("structured output") {
  auto r = call({"series", "--n", "3", "--N2", "1", "--degree", "3", "--format", "structured"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "quadmaps.report/1");
  CHECK(j["command"] == "series");
  // integers travel as decimal strings
  CHECK(j["spec"]["n"] == "3");
  CHECK(j["series"]["q1"][1] == "6");
  CHECK(j["verdicts"]["CLOSED-FORM"] == "PASS");
  CHECK(r.out == slurp(std::filesystem::path(QUADMAPS_GOLDEN_DIR) / "series_n3_N1_0_N2_1_D3.json"));
}

TEST_CASE("reports are deterministic") {
  for (std::vector<std::string> args : {std::vector<std::string>{"relations", "--n", "5", "--N1", "1", "--N2", "1"},
                                        {"semiinf", "--n", "3", "--N2", "1", "--format", "structured"},
                                        {"chains", "--n", "4", "--N2", "1", "--coords", "hyperbolic"}}) {
    auto a = call(args), b = call(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("--out writes the report to a file") {
  auto path = std::filesystem::temp_directory_path() / "quadmaps_cli_test.txt";
  std::filesystem::remove(path);
  auto r = call({"relations", "--n", "3", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path).find("r[0]") != std::string::npos);
  std::filesystem::remove(path);
}
