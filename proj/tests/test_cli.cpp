#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string output;
};

std::string cli_binary() {
  const char* bin = std::getenv("FALTMIN_CLI");
  REQUIRE_MESSAGE(bin != nullptr,
                  "FALTMIN_CLI must point at the faltmin binary");
  return bin;
}

std::string data_dir() {
  const char* dir = std::getenv("FALTMIN_DATA");
  REQUIRE_MESSAGE(dir != nullptr, "FALTMIN_DATA must point at the data dir");
  return dir;
}

CliResult run_cli(const std::string& args) {
  std::string cmd = cli_binary() + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult res;
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    res.output.append(buf, n);
  }
  int status = ::pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag) {
    path = std::filesystem::temp_directory_path() /
           ("faltmin-cli-" + tag + "-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("eval prints series and Green-function values") {
  CliResult j = run_cli("eval j 0+1i");
  CHECK(j.exit_code == 0);
  CHECK(contains(j.output, "1728"));

  CliResult g = run_cli("eval ghyp 1+0i");
  CHECK(g.exit_code == 0);
  CHECK(contains(g.output, "-8.9835381287"));

  CliResult neg = run_cli("eval ghyp -- -5");
  CHECK(neg.exit_code == 0);
  CHECK(contains(neg.output, "-8.9800978442"));

  CliResult del = run_cli("eval delta 0.3+1.1i");
  CHECK(del.exit_code == 0);
  CHECK(contains(del.output, "series tail"));

  CliResult e2s = run_cli("eval E2star 0+1i");
  CHECK(e2s.exit_code == 0);
}

TEST_CASE("eval rejects arguments outside the half-plane") {
  CliResult low = run_cli("eval j 1+0i");
  CHECK(low.exit_code == 2);
  CliResult junk = run_cli("eval ghyp pretzel");
  CHECK(junk.exit_code == 2);
  CliResult noarg = run_cli("eval nosuchfunction 0+1i");
  CHECK(noarg.exit_code == 2);
}

TEST_CASE("complex argument grammar") {
  // Pure-imaginary, bare-unit, and exponent forms all parse.
  for (const char* arg : {"3i", "i", "-i", "1e-3+2e4i", "0.5-0.25i"}) {
    CliResult r = run_cli(std::string("eval ghyp -- ") + arg);
    CAPTURE(arg);
    CHECK(r.exit_code == 0);
  }
  for (const char* arg : {"1+2", "2.5.1", "1i+2", "--", "nan"}) {
    CliResult r = run_cli(std::string("eval ghyp -- ") + arg);
    CAPTURE(arg);
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("height command") {
  CliResult z6 = run_cli("height cyclotomic:6");
  CHECK(z6.exit_code == 0);
  CHECK(contains(z6.output, "-0.748625170543"));

  CliResult nonmonic = run_cli("height -- -3,2");
  CHECK(nonmonic.exit_code == 0);
  CHECK(contains(nonmonic.output, "0.69314718056"));  // finite part log 2

  CliResult repeated = run_cli("height 1,2,1");
  CHECK(repeated.exit_code == 2);
}

TEST_CASE("lower bound replay of the published families") {
  CliResult r = run_cli("lower --replay \"" + data_dir() +
                        "/replay_families.json\"");
  CHECK(r.exit_code == 0);
  // All five families report an infimum next to their published value.
  CHECK(contains(r.output, "(published -0.74875248)"));
  CHECK(contains(r.output, "(published -0.74862817)"));
  CHECK(contains(r.output, "(published -0.74862517)"));
  CHECK(contains(r.output, "(published -0.74862386)"));
  CHECK(contains(r.output, "(published -0.7486236)"));
  size_t count = 0, pos = 0;
  while ((pos = r.output.find("infimum", pos)) != std::string::npos) {
    ++count;
    pos += 7;
  }
  CHECK(count == 5);
}

TEST_CASE("lower bound from a config file") {
  TempDir tmp("lower");
  {
    std::ofstream out(tmp.path / "replay.json");
    out << R"({"grid": 80, "polys": ["0,1"],
               "replay_exponents": [8.089047470825761e-5]})";
  }
  CliResult replay =
      run_cli("lower --config \"" + (tmp.path / "replay.json").string() + "\"");
  CHECK(replay.exit_code == 0);
  CHECK(contains(replay.output, "infimum -0.748628"));

  {
    std::ofstream out(tmp.path / "optimize.json");
    out << R"({"grid": 60, "polys": ["0,1"], "init_exponents": [5e-5]})";
  }
  CliResult opt = run_cli("lower --config \"" +
                          (tmp.path / "optimize.json").string() + "\"");
  CHECK(opt.exit_code == 0);
  CHECK(contains(opt.output, "optimized infimum -0.74862"));

  // A family that exhausts the weight budget to within 1e-9 cannot be
  // certified: dedicated exit code.
  {
    std::ofstream out(tmp.path / "thin.json");
    out << R"({"grid": 60, "polys": ["0,1"],
               "replay_exponents": [0.08333333233333333]})";
  }
  CliResult thin =
      run_cli("lower --config \"" + (tmp.path / "thin.json").string() + "\"");
  CHECK(thin.exit_code == 4);
}

TEST_CASE("upper bound command reports all three values") {
  CliResult r = run_cli("upper --center 0.205");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "circle integral at 0.205 = -0.748622785337"));
  CHECK(contains(r.output, "hhat identity value"));
  CHECK(contains(r.output, "certified majorant   = -0.748622750982"));

  CliResult sweep = run_cli("upper --sweep 0.15 0.3");
  CHECK(sweep.exit_code == 0);
  CHECK(contains(sweep.output, "best center 0.205"));
}

TEST_CASE("scan commands and the two-tier report") {
  CliResult cyc = run_cli("scan --cyclotomic 12");
  CHECK(cyc.exit_code == 0);

  CliResult rep = run_cli(
      "scan --max-degree 4 --max-coeff 2 --threshold -0.7486 "
      "--report --lower -0.7486236 --upper -0.74862275098");
  CHECK(rep.exit_code == 0);
  CHECK(contains(rep.output, "isolated heights below bounds:"));
  CHECK(contains(rep.output, "uncertain (between bounds):"));
  CHECK(contains(rep.output, "heights dense from -0.748622750"));

  CliResult csv = run_cli("--csv scan --cyclotomic 6");
  CHECK(csv.exit_code == 0);
  CHECK(contains(csv.output, "label,coefficients,degree,height,error_estimate"));
}

TEST_CASE("verify command") {
  CliResult propb = run_cli("verify propB");
  CHECK(propb.exit_code == 0);
  CHECK(contains(propb.output, "[PASS]"));
  CHECK(contains(propb.output, "verify: all checks passed"));
  CHECK_FALSE(contains(propb.output, "[FAIL]"));

  CliResult consts = run_cli("--json verify constants");
  CHECK(consts.exit_code == 0);
  json doc = json::parse(consts.output);
  REQUIRE(doc.contains("checks"));
  for (const json& check : doc["checks"]) {
    CHECK(check["pass"].get<bool>());
  }
}

TEST_CASE("machine output is byte-deterministic") {
  CliResult a = run_cli("--json upper --center 0.5");
  CliResult b = run_cli("--json upper --center 0.5");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  json doc = json::parse(a.output);
  CHECK(doc["command"] == "upper");

  CliResult w1 = run_cli("--json --workers 1 lower --replay \"" + data_dir() +
                         "/replay_families.json\"");
  CliResult w4 = run_cli("--json --workers 4 lower --replay \"" + data_dir() +
                         "/replay_families.json\"");
  CHECK(w1.exit_code == 0);
  CHECK(w1.output == w4.output);
}

TEST_CASE("out directory captures results and manifest") {
  TempDir run1("out1");
  TempDir run2("out2");
  CliResult a = run_cli("--json --out \"" + run1.path.string() +
                        "\" upper --center 0.5");
  CliResult b = run_cli("--json --out \"" + run2.path.string() +
                        "\" upper --center 0.5");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);

  std::string res1 = slurp(run1.path / "results.json");
  std::string res2 = slurp(run2.path / "results.json");
  CHECK(res1 == res2);

  json manifest = json::parse(slurp(run1.path / "manifest.json"));
  CHECK(manifest.contains("command"));
  CHECK(manifest.contains("inputs_hash"));
  CHECK(manifest.contains("tool_version"));
  CHECK(manifest.contains("timings"));
  CHECK(manifest.contains("outputs"));
  json manifest2 = json::parse(slurp(run2.path / "manifest.json"));
  CHECK(manifest["inputs_hash"] == manifest2["inputs_hash"]);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("eval --help").exit_code == 0);
  CHECK(run_cli("definitely-not-a-command").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // a subcommand is required
}
