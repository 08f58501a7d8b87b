#include "frameforge/reports.hpp"

#include <cstdio>
#include <ostream>

namespace frameforge {

namespace {

nlohmann::json omega_json(const std::vector<double>& omega) {
  return nlohmann::json(omega);
}

std::string verdict_word(bool accept) { return accept ? "accept" : "reject"; }

void append_number(std::string& line, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  line += buffer;
}

}  // namespace

nlohmann::json frame_report_json(const FrameReport& report, const std::string& scenario) {
  nlohmann::json j;
  j["scenario"] = scenario;
  j["verdict"] = to_string(report.verdict);
  j["alpha"] = report.alpha_hat;
  j["beta"] = report.beta_hat;
  j["length"] = static_cast<long long>(report.length_hat);
  j["grid"] = report.grid_resolution;
  j["frameThreshold"] = report.frame_threshold;
  auto witnesses = nlohmann::json::array();
  for (const auto& w : report.witnesses) {
    nlohmann::json entry;
    entry["omega"] = omega_json(w.omega);
    entry["reason"] = w.reason;
    witnesses.push_back(std::move(entry));
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

nlohmann::json certificate_json(const ReductionCertificate& certificate,
                                const std::string& scenario) {
  nlohmann::json j;
  j["scenario"] = scenario;
  j["method"] = certificate.method;
  j["verdict"] = verdict_word(certificate.accept);
  j["inR"] = certificate.in_r;
  j["inRWitness"] =
      certificate.in_r_witness ? omega_json(*certificate.in_r_witness) : nlohmann::json();
  j["deltaHat"] = certificate.delta_hat ? nlohmann::json(*certificate.delta_hat)
                                        : nlohmann::json();
  j["argminOmega"] =
      certificate.argmin_omega ? omega_json(*certificate.argmin_omega) : nlohmann::json();
  j["gammaHat"] = certificate.gamma_hat ? nlohmann::json(*certificate.gamma_hat)
                                        : nlohmann::json();
  j["argmaxOmega"] =
      certificate.argmax_omega ? omega_json(*certificate.argmax_omega) : nlohmann::json();
  j["geometricVerdict"] = certificate.geometric_accept
                              ? nlohmann::json(verdict_word(*certificate.geometric_accept))
                              : nlohmann::json();
  j["analyticVerdict"] = certificate.analytic_accept
                             ? nlohmann::json(verdict_word(*certificate.analytic_accept))
                             : nlohmann::json();
  if (certificate.derived_bounds) {
    nlohmann::json bounds;
    bounds["lower"] = (*certificate.derived_bounds)[0];
    bounds["mid"] = (*certificate.derived_bounds)[1];
    bounds["upper"] = (*certificate.derived_bounds)[2];
    j["derivedBounds"] = std::move(bounds);
  } else {
    j["derivedBounds"] = nlohmann::json();
  }
  j["grid"] = certificate.grid_resolution;
  j["deltaMin"] = certificate.delta_min;
  j["gammaMargin"] = certificate.gamma_margin;
  j["rejectReason"] =
      certificate.reject_reason ? nlohmann::json(*certificate.reject_reason) : nlohmann::json();
  return j;
}

nlohmann::json scan_json(const ScanResult& result, const std::string& scenario) {
  nlohmann::json j;
  j["scenario"] = scenario;
  j["trials"] = result.trials;
  j["inRCount"] = result.in_r_count;
  j["framePreservingCount"] = result.frame_preserving_count;
  j["seed"] = result.seed;
  j["ell"] = static_cast<long long>(result.rows);
  j["grid"] = result.grid_resolution;
  return j;
}

std::string render_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void write_profile_csv(std::ostream& out, const FieldCache& cache,
                       const std::vector<double>* sines) {
  if (sines && sines->size() != cache.point_count()) {
    throw DimensionMismatchError("sine profile length does not match the grid");
  }
  const int dimension = cache.grid().dimension;
  const auto m = cache.field().size();

  std::string header;
  for (int axis = 0; axis < dimension; ++axis) {
    header += "omega_" + std::to_string(axis + 1) + ",";
  }
  for (Eigen::Index j = 0; j < m; ++j) {
    header += "eig_" + std::to_string(j + 1) + ",";
  }
  header += "rank";
  if (sines) header += ",sine";
  out << header << '\n';

  for (std::size_t i = 0; i < cache.point_count(); ++i) {
    std::string line;
    for (const double x : cache.grid().point(i)) {
      append_number(line, x);
      line += ',';
    }
    for (Eigen::Index j = 0; j < m; ++j) {
      append_number(line, cache.eigenvalues(i)(j));
      line += ',';
    }
    line += std::to_string(cache.rank(i));
    if (sines) {
      line += ',';
      append_number(line, (*sines)[i]);
    }
    out << line << '\n';
  }
}

}  // namespace frameforge
