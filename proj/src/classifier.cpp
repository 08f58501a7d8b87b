#include "frameforge/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace frameforge {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::NotBessel:
      return "NotBessel";
    case Verdict::BesselOnly:
      return "BesselOnly";
    case Verdict::Frame:
      return "Frame";
    case Verdict::RieszBasis:
      return "RieszBasis";
    case Verdict::OrthonormalBasis:
      return "OrthonormalBasis";
  }
  throw InternalCheckError("unhandled verdict");
}

bool is_frame_verdict(Verdict verdict) {
  return verdict == Verdict::Frame || verdict == Verdict::RieszBasis ||
         verdict == Verdict::OrthonormalBasis;
}

double ClassifyOptions::resolved_frame_rel_tol(int points_per_axis) const {
  if (frame_rel_tol > 0.0) return frame_rel_tol;
  const double n = points_per_axis;
  return 4.0 / (n * n);
}

namespace detail {

FrameReport reduce_classification(const std::vector<SpectralSample>& samples,
                                  const SamplingGrid& grid, const ClassifyOptions& options) {
  options.tol.validate();
  if (options.identity_tol <= 0.0 || options.identity_tol >= 1.0) {
    throw InvalidToleranceError("identity tolerance must lie in (0, 1)");
  }
  if (samples.empty()) throw EmptyGridError("no sampled points to classify");
  const Eigen::Index m = samples.front().eigenvalues.size();

  FrameReport report;
  report.grid_resolution = grid.points_per_axis;

  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!samples[i].finite) {
      report.verdict = Verdict::NotBessel;
      report.beta_hat = std::numeric_limits<double>::infinity();
      report.witnesses.push_back({grid.point(i), "non-finite value"});
      return report;
    }
  }

  double beta_hat = 0.0;
  for (const auto& s : samples) {
    beta_hat = std::max(beta_hat, s.eigenvalues(m - 1));
  }
  // Eigenvalues at machine scale relative to the field are exact zeros of a
  // rank-deficient point; everything above competes for alpha_hat.
  const double zero_cut = options.tol.rank_tol * std::max(1.0, beta_hat);

  double alpha_hat = std::numeric_limits<double>::infinity();
  std::size_t alpha_index = samples.size();
  Eigen::Index length_hat = 0;
  std::size_t first_rank_drop = samples.size();
  double max_identity_deviation = 0.0;
  bool rank_constant_full = true;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& ev = samples[i].eigenvalues;
    Eigen::Index rank = 0;
    for (Eigen::Index j = 0; j < m; ++j) {
      if (ev(j) > zero_cut) ++rank;
    }
    length_hat = std::max(length_hat, rank);
    if (rank < m) {
      rank_constant_full = false;
      if (first_rank_drop == samples.size()) first_rank_drop = i;
    }
    if (rank > 0) {
      const double smallest_nonzero = ev(m - rank);
      if (smallest_nonzero < alpha_hat) {
        alpha_hat = smallest_nonzero;
        alpha_index = i;
      }
    }
    max_identity_deviation = std::max(max_identity_deviation, samples[i].identity_deviation);
  }

  report.beta_hat = beta_hat;
  report.length_hat = length_hat;
  report.frame_threshold = options.resolved_frame_rel_tol(grid.points_per_axis) * beta_hat;

  if (length_hat == 0) {
    // Identically zero field: bounded trivially, but no positive lower bound.
    report.verdict = Verdict::BesselOnly;
    report.alpha_hat = 0.0;
    report.witnesses.push_back({grid.point(0), "field vanishes on the whole grid"});
    return report;
  }

  report.alpha_hat = alpha_hat;
  if (alpha_hat < report.frame_threshold) {
    report.verdict = Verdict::BesselOnly;
    report.witnesses.push_back(
        {grid.point(alpha_index), "smallest nonzero eigenvalue falls below the frame threshold"});
    return report;
  }

  if (!rank_constant_full) {
    report.verdict = Verdict::Frame;
    report.witnesses.push_back({grid.point(first_rank_drop), "rank drops below the matrix size"});
    return report;
  }

  if (max_identity_deviation <= options.identity_tol * std::max(1.0, beta_hat)) {
    report.verdict = Verdict::OrthonormalBasis;
  } else {
    report.verdict = Verdict::RieszBasis;
  }
  return report;
}

}  // namespace detail

FrameReport classify(const GramianField& field, const SamplingGrid& grid,
                     const ClassifyOptions& options) {
  options.tol.validate();
  const auto m = field.size();
  const ComplexMatrix identity = ComplexMatrix::Identity(m, m);

  std::vector<detail::SpectralSample> samples(grid.point_count());
  for_each_grid_point(field, grid, options.tol,
                      [&](std::size_t i, const std::vector<double>&, const ComplexMatrix& g) {
                        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
                            0.5 * (g + ComplexMatrix(g.adjoint())), Eigen::EigenvaluesOnly);
                        samples[i].eigenvalues = solver.eigenvalues();
                        samples[i].identity_deviation = (g - identity).norm();
                        samples[i].finite = g.allFinite();
                      });
  return detail::reduce_classification(samples, grid, options);
}

Eigen::Index length_of(const GramianField& field, const SamplingGrid& grid,
                       const ToleranceConfig& tol) {
  ClassifyOptions options;
  options.tol = tol;
  return classify(field, grid, options).length_hat;
}

std::pair<double, double> frame_bounds(const GramianField& field, const SamplingGrid& grid,
                                       const ClassifyOptions& options) {
  const FrameReport report = classify(field, grid, options);
  if (!is_frame_verdict(report.verdict)) {
    throw NotAFrameError("sampled system is " + to_string(report.verdict) +
                         ", not a frame sequence");
  }
  return {report.alpha_hat, report.beta_hat};
}

}  // namespace frameforge
