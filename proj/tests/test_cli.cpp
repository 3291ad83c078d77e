#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "qbg/cli.hpp"
#include "qbg/json_io.hpp"

using namespace qbg;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(const std::vector<std::string>& args) {
  CliResult r = run(args);
  REQUIRE(r.code == kExitOk);
  return Json::parse(r.out);
}

// Scratch file that removes itself; contents written on construction.
struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& contents = "") {
    path = std::filesystem::temp_directory_path() / ("qbg_test_" + name);
    if (!contents.empty()) std::ofstream(path) << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

const char* kPrBoxJson = R"({"eps": [0.5, 0, 0, 0.5,
                                     0.5, 0, 0, 0.5,
                                     0.5, 0, 0, 0.5,
                                     0, 0.5, 0.5, 0]})";

}  // namespace

TEST_CASE("table2 renders the reference matrix") {
  CliResult r = run({"table2"});
  REQUIRE(r.code == kExitOk);

  const char* cell[4][4] = {
      {"((1,1/2),(1,1/2))", "((1/2,1),(1,1/2))", "((1/2,0),(0,1/2))", "((0,1/2),(0,1/2))"},
      {"((1,1/2),(1/2,1))", "((1/2,0),(1/2,0))", "((1/2,1),(1/2,1))", "((0,1/2),(1/2,0))"},
      {"((0,1/2),(1/2,0))", "((1/2,1),(1/2,1))", "((1/2,0),(1/2,0))", "((1,1/2),(1/2,1))"},
      {"((0,1/2),(0,1/2))", "((1/2,0),(0,1/2))", "((1/2,1),(1,1/2))", "((1,1/2),(1,1/2))"}};
  const char* label[4] = {"(B,B)", "(B,S)", "(S,B)", "(S,S)"};

  auto pad = [](const std::string& s) { return s + std::string(19 - s.size(), ' '); };
  std::string expect = pad("");
  for (const char* l : label) expect += pad(l);
  expect += "\n";
  for (int i = 0; i < 4; ++i) {
    expect += pad(label[i]);
    for (int j = 0; j < 4; ++j) expect += pad(cell[i][j]);
    expect += "\n";
  }
  CHECK(r.out == expect);
}

TEST_CASE("table2 structured outputs") {
  Json j = run_json({"table2", "--format", "json"});
  CHECK(j["rows"][0] == "(B,B)");
  CHECK(j["cols"][3] == "(S,S)");
  CHECK(j["cells"][0][0]["a1"] == 1);
  CHECK(j["cells"][0][0]["a2"] == "1/2");
  CHECK(j["cells"][3][0]["a1"] == 0);

  CliResult csv = run({"table2", "--format", "csv"});
  REQUIRE(csv.code == kExitOk);
  CHECK(csv.out.substr(0, csv.out.find('\n')) == "row,col,a1,a2,b1,b2");
  CHECK(csv.out.find("\"(B,B)\",\"(B,B)\",1,1/2,1,1/2") != std::string::npos);
  CHECK(csv.out.find("\"(S,S)\",\"(S,S)\",1,1/2,1,1/2") != std::string::npos);
}

TEST_CASE("payoffs from a strategy") {
  Json j = run_json({"payoffs", "--strategy", "1,1,1,1"});
  CHECK(j["a1"] == 1.0);
  CHECK(j["a2"] == 0.5);
  CHECK(j["welfare"] == 3.0);

  CliResult csv = run({"payoffs", "--strategy", "0.5,0.5,0.5,0.5", "--format", "csv"});
  CHECK(csv.out.find("welfare,2.0") != std::string::npos);
}

TEST_CASE("payoffs and chsh share input validation") {
  CliResult bad = run({"payoffs", "--strategy", "1.5,0,0,0"});
  CHECK(bad.code == kExitValidation);
  CHECK(bad.err.find("error:") == 0);
  CHECK(bad.out.empty());

  CHECK(run({"payoffs", "--strategy", "1,1,1"}).code == kExitValidation);
  CHECK(run({"chsh"}).code == kExitValidation);
  CHECK(run({"chsh", "--strategy", "1,1,1,1", "--angles", "0,0,0,0"}).code == kExitValidation);
  CHECK(run({"payoffs", "--distribution", "/nonexistent/qbg.json"}).code == kExitValidation);
}

TEST_CASE("chsh on the three source kinds") {
  Json det = run_json({"chsh", "--strategy", "1,1,1,1"});
  CHECK(det["delta"] == 2.0);
  CHECK(det["regime"] == "local");

  Json quantum = run_json(
      {"chsh", "--angles", "0,1.5707963267948966,0.7853981633974483,-0.7853981633974483"});
  CHECK(quantum["delta"].get<double>() == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(quantum["regime"] == "quantum");

  Json degrees = run_json({"chsh", "--angles", "0,90,45,-45", "--degrees"});
  CHECK(degrees["delta"] == quantum["delta"]);

  TempFile box("pr.json", kPrBoxJson);
  Json super = run_json({"chsh", "--distribution", box.str()});
  CHECK(super["delta"] == 4.0);
  CHECK(super["regime"] == "super-quantum");
}

TEST_CASE("explicit state vectors reach the quantum source") {
  // (|01> - |10>)/sqrt(2) flips the sign of every correlator.
  std::string singlet = "0,0,0.7071067811865476,0,-0.7071067811865476,0,0,0";
  Json j = run_json({"chsh", "--angles", "0,90,45,-45", "--degrees", "--state", singlet});
  CHECK(j["delta"].get<double>() == doctest::Approx(-2 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("optimize classical") {
  Json j = run_json({"optimize", "--regime", "classical", "--grid", "8"});
  CHECK(j["method"] == "vertex_enum");
  CHECK(j["value"] == 3.0);
  CHECK(j["exact_value"] == "3");
  CHECK(j["ties"].size() == 8);
  CHECK(j["argmax"]["strategy"]["p"] == 0.0);
  CHECK(j["audit"]["evaluations"].get<long>() > 16);
}

TEST_CASE("optimize quantum") {
  Json j = run_json({"optimize", "--regime", "quantum", "--grid", "12"});
  CHECK(j["method"] == "angle_search");
  CHECK(j["value"].get<double>() == doctest::Approx(2 + std::sqrt(2.0)).epsilon(1e-6));
  CHECK(j["argmax"].contains("settings"));
}

TEST_CASE("optimize no-signaling") {
  Json j = run_json({"optimize", "--regime", "no-signaling"});
  CHECK(j["method"] == "lp");
  CHECK(j["value"] == 4.0);
  CHECK(j["exact_value"] == "4");
  REQUIRE(j.contains("exact_table"));
  CHECK(j["exact_table"][0] == "1/2");
  CHECK(j["exact_table"][12] == "0");
  CHECK(j["argmax"]["table"]["eps"][0] == 0.5);
}

TEST_CASE("optimize writes a result file when asked") {
  TempFile outfile("opt.json");
  CliResult r = run({"optimize", "--regime", "classical", "--grid", "4", "--json",
                     outfile.str()});
  REQUIRE(r.code == kExitOk);
  std::ifstream in(outfile.path);
  REQUIRE(in.good());
  Json j = Json::parse(in);
  CHECK(j["exact_value"] == "3");
  CHECK(Json::parse(r.out) == j);
}

TEST_CASE("optimize on a custom game file") {
  // Benchmark game with every payoff doubled: optima scale accordingly.
  std::string doubled = R"({
    "actions": ["B", "S"],
    "prior": [[0.25, 0.25], [0.25, 0.25]],
    "blocks": {
      "A1B1": {"alice": [[2, 0], [0, 2]], "bob": [[2, 0], [0, 2]]},
      "A1B2": {"alice": [[2, 0], [0, 2]], "bob": [[2, 0], [0, 2]]},
      "A2B1": {"alice": [[2, 0], [0, 2]], "bob": [[2, 0], [0, 2]]},
      "A2B2": {"alice": [[0, 2], [2, 0]], "bob": [[0, 2], [2, 0]]}
    }
  })";
  TempFile gf("game.json", doubled);
  Json j = run_json({"optimize", "--regime", "no-signaling", "--game", gf.str()});
  CHECK(j["exact_value"] == "8");

  Json p = run_json({"payoffs", "--strategy", "1,1,1,1", "--game", gf.str()});
  CHECK(p["welfare"] == 6.0);
}

TEST_CASE("verify reports discrepancies through the exit code") {
  CliResult r = run({"verify"});
  CHECK(r.code == kExitDiscrepant);
  Json j = Json::parse(r.out);
  CHECK(j["summary"]["claims"] == 9);
  CHECK(j["summary"]["reproduced"] == 6);
  CHECK(j["summary"]["discrepant"] == 3);

  CliResult csv = run({"verify", "--format", "csv"});
  CHECK(csv.code == kExitDiscrepant);
  CHECK(csv.out.substr(0, csv.out.find('\n')) == "id,status,computed,reference");
}

TEST_CASE("sample is deterministic per seed") {
  CliResult a = run({"sample", "--count", "3", "--seed", "9"});
  CliResult b = run({"sample", "--count", "3", "--seed", "9"});
  CliResult c = run({"sample", "--count", "3", "--seed", "10"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(Json::parse(a.out)["samples"].size() == 3);
}

TEST_CASE("a single sample round-trips into the analysis commands") {
  CliResult one = run({"sample", "--seed", "4"});
  REQUIRE(one.code == kExitOk);
  TempFile f("sample.json", one.out);
  Json j = run_json({"chsh", "--distribution", f.str()});
  CHECK(std::abs(j["delta"].get<double>()) <= 4.0);

  CliResult fact = run({"sample", "--factorizable", "--seed", "5"});
  TempFile ff("fact.json", fact.out);
  Json jf = run_json({"chsh", "--distribution", ff.str()});
  CHECK(std::abs(jf["delta"].get<double>()) <= 2.0 + 1e-12);
}

TEST_CASE("usage problems exit with 64") {
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"optimize", "--regime", "psychic"}).code == kExitUsage);
  CHECK(run({"table2", "--format", "yaml"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
}

TEST_CASE("help is available and succeeds") {
  CliResult top = run({"--help"});
  CHECK(top.code == kExitOk);
  CHECK(top.out.find("table2") != std::string::npos);
  CHECK(top.out.find("optimize") != std::string::npos);

  CliResult sub = run({"optimize", "--help"});
  CHECK(sub.code == kExitOk);
  CHECK(sub.out.find("--regime") != std::string::npos);
}
