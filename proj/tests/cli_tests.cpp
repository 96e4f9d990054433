#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

// End-to-end tests driving the installed binary through a shell.  The
// binary path comes in through CASSONLIN_CLI_PATH at compile time.

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CASSONLIN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  REQUIRE(status != -1);
  return {WEXITSTATUS(status), out};
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text) lines += c == '\n';
  return lines;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Fresh directory under the system temp root, removed by the caller.
fs::path scratch_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() /
                       ("cassonlin_cli_" + std::to_string(getpid()) + "_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("hopf link in text format") {
  const RunResult r = run_cli("h2 s1^2");
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "h2 = -1, lk = 1");
  CHECK(r.out.find("agrees with -lk: yes") != std::string::npos);
  CHECK(r.out.find("crossings: 1") != std::string::npos);
  CHECK(r.out.find("sign = -1") != std::string::npos);
}

TEST_CASE("json output parses and matches the torus link") {
  const RunResult r = run_cli("h2 --format json s1^4");
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["braid"] == "s1^4");
  CHECK(j["epsilon"] == nlohmann::json::array({-1, -1}));
  CHECK(j["h2"] == -2);
  CHECK(j["lk"] == 2);
  CHECK(j["agrees"] == true);
  REQUIRE(j["intersections"].size() == 2);
  CHECK(j["intersections"][0]["theta_delta"].get<double>() ==
        doctest::Approx(0.785398163397).epsilon(1e-9));
  CHECK(j["intersections"][1]["theta_gamma"].get<double>() ==
        doctest::Approx(2.356194490192).epsilon(1e-9));
  for (const auto& d : j["intersections"]) {
    CHECK(d["sign"] == -1);
    CHECK(d["theta1"] == d["theta_delta"]);
    CHECK(d["theta2"] == d["theta_gamma"]);
  }
}

TEST_CASE("global options fall through the subcommand") {
  const RunResult before = run_cli("--format json h2 s1^4");
  const RunResult after = run_cli("h2 --format json s1^4");
  CHECK(before.code == 0);
  CHECK(after.code == 0);
  CHECK(before.out == after.out);
}

TEST_CASE("angles are printed to 12 decimals") {
  const RunResult json = run_cli("h2 --format json s1^2");
  CHECK(json.out.find("1.570796326795") != std::string::npos);

  const RunResult csv = run_cli("h2 --format csv s1^2");
  CHECK(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string header_comment, header, row;
  REQUIRE(std::getline(lines, header_comment));
  REQUIRE(std::getline(lines, header));
  REQUIRE(std::getline(lines, row));
  CHECK(header_comment == "# braid = s1^2, h2 = -1, lk = 1, agrees = yes");
  CHECK(header == "theta_delta,theta_gamma,theta1,theta2,sign");
  CHECK(row.rfind("1.570796326795,", 0) == 0);
  CHECK(row.substr(row.size() - 3) == ",-1");
}

TEST_CASE("exit codes distinguish the failure modes") {
  CHECK(run_cli("h2 s1^3").code == 2);     // closure is a knot
  CHECK(run_cli("h2 s1").code == 2);       // ditto
  CHECK(run_cli("h2 \"s1^^2\"").code == 1);  // parse error
  CHECK(run_cli("h2").code == 1);          // missing argument
  CHECK(run_cli("").code == 1);            // missing subcommand
  CHECK(run_cli("frobnicate").code == 1);  // unknown subcommand
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("scan options are accepted") {
  const RunResult a = run_cli("--scan-resolution 512 h2 s1^2");
  CHECK(a.code == 0);
  CHECK(first_line(a.out) == "h2 = -1, lk = 1");
  const RunResult b = run_cli("h2 s1^2 --tol 1e-12");
  CHECK(b.code == 0);
  CHECK(first_line(b.out) == "h2 = -1, lk = 1");
}

TEST_CASE("hopf audit runs clean") {
  const RunResult text = run_cli("verify-hopf");
  CHECK(text.code == 0);
  CHECK(text.out.find("12/12 checks passed") != std::string::npos);
  CHECK(text.out.find("[PASS]") != std::string::npos);
  CHECK(text.out.find("[FAIL]") == std::string::npos);

  const RunResult json = run_cli("verify-hopf --format json");
  CHECK(json.code == 0);
  const nlohmann::json j = nlohmann::json::parse(json.out);
  CHECK(j["all_pass"] == true);
  REQUIRE(j["entries"].size() == 12);
  for (const auto& e : j["entries"]) CHECK(e["pass"] == true);
}

TEST_CASE("curve sampling writes the three files") {
  const fs::path dir = scratch_dir("curves");
  const RunResult r = run_cli("curves s1^2 --out " + dir.string() + " --samples 64");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("wrote ", 0) == 0);

  const std::string delta = slurp(dir / "delta.csv");
  CHECK(count_lines(delta) == 65);  // header plus one row per sample
  CHECK(delta.rfind("theta,theta1,theta2\n", 0) == 0);

  const std::string gamma = slurp(dir / "gamma.csv");
  const nlohmann::json summary = nlohmann::json::parse(slurp(dir / "summary.json"));
  CHECK(summary["braid"] == "s1^2");
  CHECK(summary["samples"] == 64);
  CHECK(summary["delta_rows"] == 64);
  CHECK(summary["gamma_skipped"] == 2);  // corners at theta = 0 and pi
  CHECK(summary["gamma_rows"].get<int>() + summary["gamma_skipped"].get<int>() == 64);
  CHECK(count_lines(gamma) == summary["gamma_rows"].get<int>() + 1);

  fs::remove_all(dir);
}

TEST_CASE("unwritable output directory reports a file error") {
  CHECK(run_cli("curves s1^2 --out /dev/null/x").code == 4);
}

TEST_CASE("output is deterministic across runs") {
  const RunResult a = run_cli("h2 --format json s1^6");
  const RunResult b = run_cli("h2 --format json s1^6");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const fs::path da = scratch_dir("det_a");
  const fs::path db = scratch_dir("det_b");
  CHECK(run_cli("curves s1^4 --out " + da.string() + " --samples 128").code == 0);
  CHECK(run_cli("curves s1^4 --out " + db.string() + " --samples 128").code == 0);
  for (const char* name : {"delta.csv", "gamma.csv", "summary.json"})
    CHECK(slurp(da / name) == slurp(db / name));
  fs::remove_all(da);
  fs::remove_all(db);
}
