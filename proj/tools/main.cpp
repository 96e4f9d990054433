#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cassonlin/casson_lin.hpp"
#include "cassonlin/errors.hpp"

namespace {

using nlohmann::ordered_json;

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

// Angles are reported to 12 decimals in every format.
double round12(double v) { return std::round(v * 1e12) / 1e12; }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int run_h2(const std::string& word, const std::string& format,
           const cassonlin::ScanConfig& config) {
  const cassonlin::BraidWord braid = cassonlin::parse_braid(word, 2);
  const cassonlin::CassonLinResult res = cassonlin::casson_lin_h2(braid, config);

  if (format == "json") {
    ordered_json j;
    j["braid"] = res.braid;
    j["epsilon"] = res.epsilon;
    ordered_json arr = ordered_json::array();
    for (const auto& d : res.intersections)
      arr.push_back({{"theta_delta", round12(d.theta_delta)},
                     {"theta_gamma", round12(d.theta_gamma)},
                     {"theta1", round12(d.lift.theta1())},
                     {"theta2", round12(d.lift.theta2())},
                     {"sign", d.sign}});
    j["intersections"] = arr;
    j["h2"] = res.h2;
    j["lk"] = res.lk;
    j["agrees"] = res.agrees;
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "# braid = " << res.braid << ", h2 = " << res.h2 << ", lk = " << res.lk
              << ", agrees = " << (res.agrees ? "yes" : "no") << "\n";
    std::cout << "theta_delta,theta_gamma,theta1,theta2,sign\n";
    for (const auto& d : res.intersections)
      std::cout << fixed12(d.theta_delta) << "," << fixed12(d.theta_gamma) << ","
                << fixed12(d.lift.theta1()) << "," << fixed12(d.lift.theta2()) << "," << d.sign
                << "\n";
  } else {
    std::printf("h2 = %d, lk = %d\n", res.h2, res.lk);
    std::printf("agrees with -lk: %s\n", res.agrees ? "yes" : "no");
    std::printf("crossings: %zu\n", res.intersections.size());
    for (const auto& d : res.intersections) {
      std::printf("  theta_delta = %s, theta_gamma = %s, lift = (%s, %s), ",
                  fixed12(d.theta_delta).c_str(), fixed12(d.theta_gamma).c_str(),
                  fixed12(d.lift.theta1()).c_str(), fixed12(d.lift.theta2()).c_str());
      if (d.sign)
        std::printf("sign = %+d\n", d.sign);
      else
        std::printf("sign = unresolved\n");
    }
  }
  if (!res.complete) {
    std::cerr << "warning: some crossings were not resolved\n";
    return 3;
  }
  return 0;
}

int run_verify(const std::string& format) {
  const cassonlin::HopfTrace trace = cassonlin::verify_hopf();
  if (format == "json") {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const auto& e : trace.entries)
      arr.push_back({{"label", e.label}, {"pass", e.pass}, {"detail", e.detail}});
    j["entries"] = arr;
    j["all_pass"] = trace.all_pass;
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "label,pass,detail\n";
    for (const auto& e : trace.entries)
      std::cout << csv_quote(e.label) << "," << (e.pass ? "1" : "0") << ","
                << csv_quote(e.detail) << "\n";
  } else {
    int passed = 0;
    for (const auto& e : trace.entries) {
      std::printf("[%s] %s: %s\n", e.pass ? "PASS" : "FAIL", e.label.c_str(), e.detail.c_str());
      passed += e.pass;
    }
    std::printf("%d/%zu checks passed\n", passed, trace.entries.size());
  }
  return trace.all_pass ? 0 : 1;
}

int run_curves(const std::string& word, const std::string& outdir, int samples,
               const std::string& format) {
  const cassonlin::BraidWord braid = cassonlin::parse_braid(word, 2);
  const cassonlin::SignTuple eps = cassonlin::admissible_epsilon(2);
  const cassonlin::BraidAutomorphism aut = cassonlin::artin_action(braid);

  std::filesystem::create_directories(outdir);
  const std::filesystem::path dir(outdir);

  std::ofstream delta(dir / "delta.csv");
  if (!delta) return 4;
  delta << "theta,theta1,theta2\n";
  for (int s = 0; s < samples; ++s) {
    const double theta = 2 * std::numbers::pi * s / samples;
    const auto sample = cassonlin::delta_curve(theta);
    delta << fixed12(sample.theta) << "," << fixed12(sample.lift.theta1()) << ","
          << fixed12(sample.lift.theta2()) << "\n";
  }
  delta.close();
  if (!delta) return 4;

  std::ofstream gamma(dir / "gamma.csv");
  if (!gamma) return 4;
  gamma << "theta,theta1,theta2\n";
  int written = 0;
  int skipped = 0;
  for (int s = 0; s < samples; ++s) {
    const double theta = 2 * std::numbers::pi * s / samples;
    try {
      const auto sample = cassonlin::gamma_curve(eps, aut, theta);
      gamma << fixed12(sample.theta) << "," << fixed12(sample.lift.theta1()) << ","
            << fixed12(sample.lift.theta2()) << "\n";
      ++written;
    } catch (const cassonlin::SingularPoint&) {
      ++skipped;
    }
  }
  gamma.close();
  if (!gamma) return 4;

  ordered_json summary;
  summary["braid"] = braid.str();
  summary["epsilon"] = eps.signs();
  summary["samples"] = samples;
  summary["delta_rows"] = samples;
  summary["gamma_rows"] = written;
  summary["gamma_skipped"] = skipped;
  std::ofstream sj(dir / "summary.json");
  if (!sj) return 4;
  sj << summary.dump(2) << "\n";
  sj.close();
  if (!sj) return 4;

  if (format != "csv")
    std::cout << "wrote " << (dir / "delta.csv").string() << ", " << (dir / "gamma.csv").string()
              << ", " << (dir / "summary.json").string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casson-Lin invariant h2 for closures of 2-strand braids"};
  app.require_subcommand(1);

  std::string format = "text";
  int resolution = 4096;
  double tol = -1;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--scan-resolution", resolution, "graph-curve samples in the crossing scan")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol", tol, "override the bisection residual tolerance");

  auto* sub_h2 = app.add_subcommand("h2", "compute h2 of a 2-strand braid closure");
  std::string h2_word;
  sub_h2->add_option("braid", h2_word, "braid word, e.g. \"s1^2\"")->required();
  sub_h2->fallthrough();

  auto* sub_verify =
      app.add_subcommand("verify-hopf", "audit the Hopf-link computation stage by stage");
  sub_verify->fallthrough();

  auto* sub_curves = app.add_subcommand("curves", "sample the two curves to CSV files");
  std::string curves_word;
  std::string outdir;
  int samples = 1024;
  sub_curves->add_option("braid", curves_word, "braid word")->required();
  sub_curves->add_option("--out", outdir, "output directory")->required();
  sub_curves->add_option("--samples", samples, "curve samples over [0, 2 pi)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub_curves->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  cassonlin::ScanConfig config;
  config.resolution = resolution;
  if (tol > 0) config.residual_tol = tol;

  try {
    if (sub_h2->parsed()) return run_h2(h2_word, format, config);
    if (sub_verify->parsed()) return run_verify(format);
    return run_curves(curves_word, outdir, samples, format);
  } catch (const cassonlin::NotTwoComponents& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cassonlin::TangencyUnresolved& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
