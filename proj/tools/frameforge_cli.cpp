#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frameforge/reports.hpp"
#include "frameforge/scenario.hpp"
#include "frameforge/verification.hpp"

namespace {

using frameforge::ComplexMatrix;

// Matrices arrive as JSON: rows of entries, each entry a [re, im] pair or a
// bare real number.
ComplexMatrix parse_matrix(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw frameforge::ParseError(std::string("matrix is not valid JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty()) {
    throw frameforge::ParseError("matrix must be a non-empty array of rows");
  }
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  ComplexMatrix m;
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.empty()) {
      throw frameforge::ParseError("matrix row " + std::to_string(i) +
                                   " must be a non-empty array");
    }
    if (i == 0) {
      cols = row.size();
      m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    } else if (row.size() != cols) {
      throw frameforge::ParseError("matrix rows have inconsistent lengths");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      const auto& entry = row[k];
      double re = 0.0;
      double im = 0.0;
      if (entry.is_number()) {
        re = entry.get<double>();
      } else if (entry.is_array() && entry.size() == 2 && entry[0].is_number() &&
                 entry[1].is_number()) {
        re = entry[0].get<double>();
        im = entry[1].get<double>();
      } else {
        throw frameforge::ParseError("matrix entry (" + std::to_string(i) + "," +
                                     std::to_string(k) + ") must be a number or a [re, im] pair");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          std::complex<double>(re, im);
    }
  }
  return m;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw frameforge::ParseError("cannot open '" + path + "' for writing");
  out << text;
}

struct CommonArgs {
  std::string scenario;
  int grid = 256;
  std::string output;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("scenario", args.scenario,
                  "Built-in scenario name or path to a scenario JSON file")
      ->required();
  cmd->add_option("--grid", args.grid, "Sample points per axis")
      ->check(CLI::Range(2, 1 << 20));
  cmd->add_option("-o,--output", args.output, "Write the report here instead of stdout");
}

int run(int argc, char** argv) {
  CLI::App app{"Gramian field analysis for systems of integer translates"};
  app.require_subcommand(1);

  CommonArgs classify_args;
  double frame_rel_tol = 0.0;
  auto* classify_cmd =
      app.add_subcommand("classify", "Classify a scenario as Bessel/frame/Riesz/orthonormal");
  add_common(classify_cmd, classify_args);
  classify_cmd->add_option("--frame-rel-tol", frame_rel_tol,
                           "Smallest admissible ratio of the spectral floor to the spectral "
                           "ceiling; 0 derives it from the grid");

  CommonArgs certify_args;
  std::string certify_matrix;
  std::string method = "both";
  double delta_min = 0.0;
  double gamma_margin = 0.0;
  auto* certify_cmd = app.add_subcommand(
      "certify", "Certify that a coefficient matrix maps the scenario to another frame system");
  add_common(certify_cmd, certify_args);
  certify_cmd->add_option("--matrix", certify_matrix, "Coefficient matrix as JSON rows of [re, im] pairs")
      ->required();
  certify_cmd->add_option("--method", method, "geometric, analytic, or both")
      ->check(CLI::IsMember({"geometric", "analytic", "both"}));
  certify_cmd->add_option("--delta-min", delta_min,
                          "Smallest admissible kernel-to-image angle sine; 0 derives it from "
                          "the grid");
  certify_cmd->add_option("--gamma-margin", gamma_margin,
                          "Required gap below 1 for the analytic norm; 0 derives it from "
                          "delta-min");

  CommonArgs scan_args;
  int ell = 1;
  int trials = 1000;
  std::uint64_t seed = 0;
  auto* scan_cmd = app.add_subcommand(
      "scan", "Count how many random coefficient matrices preserve rank and the frame property");
  add_common(scan_cmd, scan_args);
  scan_cmd->add_option("--ell", ell, "Rows of each random matrix")->check(CLI::Range(1, 1 << 12));
  scan_cmd->add_option("--trials", trials, "Number of random matrices")
      ->check(CLI::Range(1, 1 << 24));
  scan_cmd->add_option("--seed", seed, "Seed for the matrix draws");
  scan_cmd->add_option("--delta-min", delta_min,
                       "Smallest admissible kernel-to-image angle sine; 0 derives it from the "
                       "grid");

  CommonArgs profile_args;
  std::string profile_matrix;
  std::string csv_path;
  auto* profile_cmd = app.add_subcommand(
      "profile", "Tabulate eigenvalues and ranks across the grid, with angle sines for a matrix");
  profile_cmd->add_option("scenario", profile_args.scenario,
                          "Built-in scenario name or path to a scenario JSON file")
      ->required();
  profile_cmd->add_option("--grid", profile_args.grid, "Sample points per axis")
      ->check(CLI::Range(2, 1 << 20));
  profile_cmd->add_option("--matrix", profile_matrix,
                          "Optional coefficient matrix; adds a sine column");
  profile_cmd->add_option("--csv", csv_path, "Write CSV here instead of stdout");

  std::string selector = "all";
  auto* verify_cmd = app.add_subcommand(
      "reproduce-paper", "Run the registered verification checks and report pass/fail");
  verify_cmd->add_option("name", selector, "Check name, or 'all'");

  CLI11_PARSE(app, argc, argv);

  if (classify_cmd->parsed()) {
    const frameforge::Scenario scenario = frameforge::resolve_scenario(classify_args.scenario);
    frameforge::ClassifyOptions options;
    options.frame_rel_tol = frame_rel_tol;
    const frameforge::FrameReport report = frameforge::classify(
        scenario.field,
        frameforge::SamplingGrid::regular(scenario.field.dimension(), classify_args.grid),
        options);
    emit(frameforge::render_json(frameforge::frame_report_json(report, scenario.name)),
         classify_args.output);
    return 0;
  }

  if (certify_cmd->parsed()) {
    const frameforge::Scenario scenario = frameforge::resolve_scenario(certify_args.scenario);
    const ComplexMatrix a = parse_matrix(certify_matrix);
    frameforge::CertifyOptions options;
    options.delta_min = delta_min;
    options.gamma_margin = gamma_margin;
    const frameforge::SamplingGrid grid =
        frameforge::SamplingGrid::regular(scenario.field.dimension(), certify_args.grid);
    frameforge::ReductionCertificate cert;
    if (method == "geometric") {
      cert = frameforge::certify_geometric(scenario.field, a, grid, options);
    } else if (method == "analytic") {
      cert = frameforge::certify_analytic(scenario.field, a, grid, options);
    } else {
      cert = frameforge::certify_both(scenario.field, a, grid, options);
    }
    emit(frameforge::render_json(frameforge::certificate_json(cert, scenario.name)),
         certify_args.output);
    return cert.accept ? 0 : 1;
  }

  if (scan_cmd->parsed()) {
    const frameforge::Scenario scenario = frameforge::resolve_scenario(scan_args.scenario);
    frameforge::CertifyOptions options;
    options.delta_min = delta_min;
    const frameforge::ScanResult result = frameforge::scan_generic(
        scenario.field,
        frameforge::SamplingGrid::regular(scenario.field.dimension(), scan_args.grid), ell,
        trials, seed, options);
    emit(frameforge::render_json(frameforge::scan_json(result, scenario.name)), scan_args.output);
    return 0;
  }

  if (profile_cmd->parsed()) {
    const frameforge::Scenario scenario = frameforge::resolve_scenario(profile_args.scenario);
    const frameforge::FieldCache cache(
        scenario.field,
        frameforge::SamplingGrid::regular(scenario.field.dimension(), profile_args.grid));
    std::optional<std::vector<double>> sines;
    if (!profile_matrix.empty()) {
      sines = frameforge::angle_profile(cache, parse_matrix(profile_matrix));
    }
    if (csv_path.empty()) {
      frameforge::write_profile_csv(std::cout, cache, sines ? &*sines : nullptr);
    } else {
      std::ofstream out(csv_path, std::ios::binary);
      if (!out) throw frameforge::ParseError("cannot open '" + csv_path + "' for writing");
      frameforge::write_profile_csv(out, cache, sines ? &*sines : nullptr);
    }
    return 0;
  }

  // reproduce-paper
  const std::vector<frameforge::CheckResult> results =
      frameforge::run_verification_checks(selector);
  int failures = 0;
  for (const auto& result : results) {
    std::cout << (result.passed ? "[PASS] " : "[FAIL] ") << result.name;
    if (!result.detail.empty()) std::cout << ": " << result.detail;
    std::cout << "\n";
    if (!result.passed) ++failures;
  }
  std::cout << results.size() - failures << "/" << results.size() << " checks passed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const frameforge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
