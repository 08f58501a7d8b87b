#pragma once

#include <string>
#include <utility>
#include <vector>

#include "frameforge/torus_field.hpp"

namespace frameforge {

enum class Verdict { NotBessel, BesselOnly, Frame, RieszBasis, OrthonormalBasis };

std::string to_string(Verdict verdict);
bool is_frame_verdict(Verdict verdict);

struct Witness {
  std::vector<double> omega;
  std::string reason;
};

struct FrameReport {
  Verdict verdict = Verdict::BesselOnly;
  // Extremes of the sampled nonzero spectrum: alpha_hat is the smallest
  // eigenvalue above the rank cutoff seen anywhere, beta_hat the largest
  // eigenvalue overall. alpha_hat is reported even when the verdict rejects.
  double alpha_hat = 0.0;
  double beta_hat = 0.0;
  // Largest sampled rank.
  Eigen::Index length_hat = 0;
  int grid_resolution = 0;
  // Absolute lower-bound threshold the nonzero spectrum was held against.
  double frame_threshold = 0.0;
  std::vector<Witness> witnesses;
};

struct ClassifyOptions {
  // Relative gap demanded between the nonzero spectrum and zero before the
  // sampled system counts as a frame: alpha_hat >= frame_rel_tol * beta_hat.
  // Zero selects the resolution-coupled default 4 / N^2, which keeps a
  // quadratic spectral pinch at an unsampled point from masquerading as a
  // genuine gap.
  double frame_rel_tol = 0.0;
  // How close every sampled matrix must stay to the identity, relative to
  // max(1, beta_hat), before a Riesz verdict upgrades to orthonormal.
  double identity_tol = 1e-8;
  ToleranceConfig tol;

  double resolved_frame_rel_tol(int points_per_axis) const;
};

FrameReport classify(const GramianField& field, const SamplingGrid& grid,
                     const ClassifyOptions& options = {});

namespace detail {

struct SpectralSample {
  RealVector eigenvalues;  // ascending
  double identity_deviation = 0.0;
  bool finite = true;
};

// The decision procedure behind classify, shared with sweeps that keep more
// per-point data than classify itself needs.
FrameReport reduce_classification(const std::vector<SpectralSample>& samples,
                                  const SamplingGrid& grid, const ClassifyOptions& options);

}  // namespace detail

// Largest sampled rank of the field.
Eigen::Index length_of(const GramianField& field, const SamplingGrid& grid,
                       const ToleranceConfig& tol = {});

// (alpha_hat, beta_hat); throws NotAFrameError unless the verdict is Frame or
// stronger.
std::pair<double, double> frame_bounds(const GramianField& field, const SamplingGrid& grid,
                                       const ClassifyOptions& options = {});

}  // namespace frameforge
