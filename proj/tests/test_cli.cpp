#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#include "exdisc/json_io.hpp"

namespace fs = std::filesystem;
using exdisc::json;

namespace {

std::string binary_path() {
  if (const char* env = std::getenv("EXDISC_BIN")) return env;
#ifdef EXDISC_BIN_PATH
  return EXDISC_BIN_PATH;
#else
  return "./exdisc";
#endif
}

int run(const std::string& args) {
  std::string cmd = binary_path() + " " + args;
  int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("exdisc_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("cli: grid subcommand") {
  TempDir tmp;
  REQUIRE(run("grid --n 2 -o " + tmp.file("g.json") + " > /dev/null 2>&1") == 0);
  json doc = json::parse(slurp(tmp.file("g.json")));
  CHECK(doc["points"] == json::array({"1/4", "3/4"}));

  REQUIRE(run("grid --n 2 --delta 0 -o " + tmp.file("g0.json") + " 2>/dev/null") == 0);
  CHECK(json::parse(slurp(tmp.file("g0.json")))["points"] == json::array({"0", "1/2"}));

  CHECK(run("grid --n 2 --delta 1/2 -o " + tmp.file("bad.json") + " 2>/dev/null") == 2);
  CHECK(run("grid 2>/dev/null") == 2);  // --n is required
}

TEST_CASE("cli: analyze closed forms") {
  TempDir tmp;
  REQUIRE(run("analyze --points 1/6,1/2,5/6 -o " + tmp.file("a.json") + " 2>/dev/null") == 0);
  json doc = json::parse(slurp(tmp.file("a.json")));
  CHECK(doc["star"] == "1/2");
  CHECK(doc["l2_sq"] == "1/12");
  CHECK(doc["extreme_star"] == "1");
  CHECK(doc["extreme_l2_sq_square"] == "1/6");
  CHECK(doc["classification"]["kind"] == "CenteredGrid");

  REQUIRE(run("analyze --points 0 -o " + tmp.file("b.json") + " 2>/dev/null") == 0);
  json zero = json::parse(slurp(tmp.file("b.json")));
  CHECK(zero["star"] == "1");
  CHECK(zero["l2_sq"] == "1/3");

  // norms options
  REQUIRE(run("analyze --points 1/4,3/4 --p 2 --lorentz 2,2 --psi power:2 -o " +
              tmp.file("n.json") + " 2>/dev/null") == 0);
  json norms = json::parse(slurp(tmp.file("n.json")));
  REQUIRE(norms["norms"].is_array());
  CHECK(norms["norms"].size() == 6);  // three options, two profiles each
  CHECK(norms["norms"][0]["exact"] == "1/12");

  // inline piecewise psi spec (psi(s) = s on [0,1], extended linearly)
  std::string inline_psi = "'{\"breakpoints\": [\"0\",\"1\"], \"pieces\": [[\"0\",\"1\"]]}'";
  REQUIRE(run("analyze --points 1/4,3/4 --psi " + inline_psi + " -o " + tmp.file("ip.json") +
              " 2>/dev/null") == 0);
  json ip = json::parse(slurp(tmp.file("ip.json")));
  CHECK(std::abs(ip["norms"][0]["approx"].get<double>() - 0.25) < 1e-9);
  CHECK(run("analyze --points 1/4,3/4 --psi '{broken' 2>/dev/null") == 2);

  // decimal convenience columns accompany, never replace, the exact strings
  REQUIRE(run("analyze --points 1/4,3/4 --decimal -o " + tmp.file("dec.json") +
              " 2>/dev/null") == 0);
  json dec = json::parse(slurp(tmp.file("dec.json")));
  CHECK(dec["l2_sq"] == "1/12");
  CHECK(std::abs(dec["l2_sq_dec"].get<double>() - 1.0 / 12.0) < 1e-12);
}

TEST_CASE("cli: analyze input handling") {
  TempDir tmp;
  {
    std::ofstream bad(tmp.file("bad.json"));
    bad << "this is not json";
  }
  CHECK(run("analyze -i " + tmp.file("bad.json") + " 2>/dev/null") == 2);
  CHECK(run("analyze -i " + tmp.file("missing.json") + " 2>/dev/null") == 3);
  CHECK(run("analyze --points 1/2,2 2>/dev/null") == 2);  // out of range

  {
    std::ofstream ok(tmp.file("p.json"));
    ok << R"({"points": ["0.25", "3/4"]})";
  }
  REQUIRE(run("analyze -i " + tmp.file("p.json") + " -o " + tmp.file("out.json") +
              " 2>/dev/null") == 0);
  CHECK(json::parse(slurp(tmp.file("out.json")))["star"] == "1/2");

  // stdin
  std::string piped = "echo '{\"points\": [\"1/2\"]}' | " + binary_path() + " analyze -i - -o " +
                      tmp.file("stdin.json") + " 2>/dev/null";
  REQUIRE(WEXITSTATUS(std::system(piped.c_str())) == 0);
  CHECK(json::parse(slurp(tmp.file("stdin.json")))["l2_sq"] == "1/12");
}

TEST_CASE("cli: export") {
  TempDir tmp;
  REQUIRE(run("export --points 1/2 --what dist -o " + tmp.file("d.csv") + " 2>/dev/null") == 0);
  std::string csv = slurp(tmp.file("d.csv"));
  CHECK(csv.find("alpha,F,F_grid,gap") != std::string::npos);
  CHECK(csv.find("1/4,1/2,1/2,0") != std::string::npos);

  REQUIRE(run("export --points 0,3/4 --what dist -o " + tmp.file("gap.csv") +
              " 2>/dev/null") == 0);
  // a strictly positive gap column appears for a non-grid set
  std::string gap_csv = slurp(tmp.file("gap.csv"));
  bool has_positive_gap = false;
  std::istringstream lines(gap_csv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    auto last_comma = line.rfind(',');
    std::string gap = line.substr(last_comma + 1);
    if (gap != "0" && gap.find('-') == std::string::npos) has_positive_gap = true;
  }
  CHECK(has_positive_gap);

  REQUIRE(run("export --points 1/2 --what density -o " + tmp.file("den.csv") +
              " 2>/dev/null") == 0);
  CHECK(slurp(tmp.file("den.csv")).find("t,f") != std::string::npos);

  REQUIRE(run("export --points 1/2 --what curve -o " + tmp.file("c.csv") + " 2>/dev/null") == 0);
  CHECK(slurp(tmp.file("c.csv")).find("3/4,1/4") != std::string::npos);  // D(3/4) = 1/4

  REQUIRE(run("export --points 1/2 --what dist --decimal -o " + tmp.file("dec.csv") +
              " 2>/dev/null") == 0);
  CHECK(slurp(tmp.file("dec.csv")).find("alpha_dec") != std::string::npos);
  CHECK(slurp(tmp.file("dec.csv")).find("0.25,0.5,0.5,0") != std::string::npos);

  CHECK(run("export --points 1/2 --what nope -o " + tmp.file("x.csv") + " 2>/dev/null") == 2);
  CHECK(run("export --points 1/2 --what dist -o /nonexistent-dir/x.csv 2>/dev/null") == 3);
}

TEST_CASE("cli: verify exit codes and determinism") {
  TempDir tmp;
  CHECK(run("verify --check thm1 --trials 5 --seed 3 > /dev/null 2>&1") == 0);
  CHECK(run("verify --check all --trials 0 > /dev/null 2>&1") == 0);
  CHECK(run("verify --check bogus 2>/dev/null") == 2);

  REQUIRE(run("verify --check all --trials 5 --seed 7 --json " + tmp.file("s1.json") +
              " > /dev/null 2>&1") == 0);
  REQUIRE(run("verify --check all --trials 5 --seed 7 --json " + tmp.file("s2.json") +
              " > /dev/null 2>&1") == 0);
  CHECK(slurp(tmp.file("s1.json")) == slurp(tmp.file("s2.json")));
  CHECK_FALSE(slurp(tmp.file("s1.json")).empty());
}
