#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frameforge/classifier.hpp"
#include "frameforge/subspace.hpp"
#include "frameforge/torus_field.hpp"

namespace frameforge {

// Grid-wide spectral data for one field, built in a single sweep and shared
// by every matrix tested against that field.
class FieldCache {
 public:
  FieldCache(const GramianField& field, const SamplingGrid& grid,
             const ClassifyOptions& options = {});

  const GramianField& field() const { return field_; }
  const SamplingGrid& grid() const { return grid_; }
  const ClassifyOptions& options() const { return options_; }
  const FrameReport& report() const { return report_; }
  std::size_t point_count() const { return gramians_.size(); }

  const ComplexMatrix& gramian(std::size_t i) const { return gramians_[i]; }
  // Ascending, with matching eigenvector columns.
  const RealVector& eigenvalues(std::size_t i) const { return eigenvalues_[i]; }
  const ComplexMatrix& eigenvectors(std::size_t i) const { return eigenvectors_[i]; }
  Eigen::Index rank(std::size_t i) const { return ranks_[i]; }
  // Orthonormal basis of the image: the eigenvector columns above the cutoff.
  ComplexMatrix image_basis(std::size_t i) const;
  // Smallest eigenvalue counted as nonzero at the point; 0 when rank is 0.
  double smallest_nonzero(std::size_t i) const;
  double largest(std::size_t i) const { return eigenvalues_[i](eigenvalues_[i].size() - 1); }
  // Absolute scale below which an eigenvalue is treated as an exact zero.
  double zero_cutoff() const { return zero_cutoff_; }

 private:
  GramianField field_;
  SamplingGrid grid_;
  ClassifyOptions options_;
  FrameReport report_;
  std::vector<ComplexMatrix> gramians_;
  std::vector<RealVector> eigenvalues_;
  std::vector<ComplexMatrix> eigenvectors_;
  std::vector<Eigen::Index> ranks_;
  double zero_cutoff_ = 0.0;
};

struct CertifyOptions {
  // Smallest admissible kernel-to-image angle sine. Zero selects the
  // resolution-coupled default 4 / N, below which a sampled minimum cannot be
  // told apart from an off-grid zero crossing.
  double delta_min = 0.0;
  // The analytic route accepts while its norm stays at or under
  // 1 - gamma_margin. Zero derives the margin from delta_min so both routes
  // draw their accept boundary through the same angle.
  double gamma_margin = 0.0;
  ClassifyOptions classify;

  double resolved_delta_min(int points_per_axis) const;
  double resolved_gamma_margin(int points_per_axis) const;
};

struct ReductionCertificate {
  std::string method;  // "geometric", "analytic", or "both"
  bool accept = false;

  // Rank preservation across the grid: false once the matrix kernel meets the
  // image of the field at some sampled point.
  bool in_r = true;
  std::optional<std::vector<double>> in_r_witness;

  // Geometric route: worst sampled sine of the kernel-to-image angle.
  std::optional<double> delta_hat;
  std::optional<std::vector<double>> argmin_omega;
  std::optional<bool> geometric_accept;

  // Analytic route: largest sampled norm of the projector product.
  std::optional<double> gamma_hat;
  std::optional<std::vector<double>> argmax_omega;
  std::optional<bool> analytic_accept;

  // Lower bound, observed value, and upper bound for the smallest nonzero
  // eigenvalue of the conjugated field at the angle-minimizing point.
  std::optional<std::array<double, 3>> derived_bounds;

  int grid_resolution = 0;
  double delta_min = 0.0;
  double gamma_margin = 0.0;
  std::optional<std::string> reject_reason;
};

ReductionCertificate certify_geometric(const FieldCache& cache, const ComplexMatrix& a,
                                       const CertifyOptions& options = {});
ReductionCertificate certify_analytic(const FieldCache& cache, const ComplexMatrix& a,
                                      const CertifyOptions& options = {});
ReductionCertificate certify_both(const FieldCache& cache, const ComplexMatrix& a,
                                  const CertifyOptions& options = {});

// Convenience overloads that build the cache on the fly.
ReductionCertificate certify_geometric(const GramianField& field, const ComplexMatrix& a,
                                       const SamplingGrid& grid,
                                       const CertifyOptions& options = {});
ReductionCertificate certify_analytic(const GramianField& field, const ComplexMatrix& a,
                                      const SamplingGrid& grid,
                                      const CertifyOptions& options = {});
ReductionCertificate certify_both(const GramianField& field, const ComplexMatrix& a,
                                  const SamplingGrid& grid, const CertifyOptions& options = {});

// True when the matrix keeps the sampled rank of the field at every grid
// point (the precondition shared by both certificates).
bool preserves_generators(const FieldCache& cache, const ComplexMatrix& a);
bool preserves_generators(const GramianField& field, const ComplexMatrix& a,
                          const SamplingGrid& grid, const ToleranceConfig& tol = {});

// Sine of the angle between the matrix kernel and the field image at every
// grid point, in flat grid order.
std::vector<double> angle_profile(const FieldCache& cache, const ComplexMatrix& a);

// True when the matrix kernel matches the pointwise kernel of the field
// everywhere, which settles rank preservation without any angle work.
bool kernel_shortcut(const FieldCache& cache, const ComplexMatrix& a, double tol = 1e-8);

// {lower, observed, upper} for the smallest nonzero eigenvalue of a g a* at
// one point: sigma_+(a)^2 lambda_-(g) sin^2 <= lambda_-(a g a*) <=
// |a|^2 |g| sin, with the sine taken between Ker a and Im g. Throws
// RankDropError when conjugation loses rank, since the middle quantity then
// measures a different eigenvalue.
std::array<double, 3> sandwich_bounds(const ComplexMatrix& a, const ComplexMatrix& g,
                                      const ToleranceConfig& tol = {});

struct SquareCaseReport {
  Verdict base_verdict = Verdict::BesselOnly;
  Verdict conjugated_verdict = Verdict::BesselOnly;
  // Whether the conjugated system keeps the base classification and length.
  bool preserved = false;
  bool invertible = false;
  bool unitary = false;
  double smallest_singular_value = 0.0;
  std::string detail;
};

// Decides square conjugation by matrix structure alone (invertibility and
// unitarity), then validates the decision against a sampled sweep of the
// conjugated field.
SquareCaseReport square_case(const FieldCache& cache, const ComplexMatrix& a);
SquareCaseReport square_case(const GramianField& field, const ComplexMatrix& a,
                             const SamplingGrid& grid, const ClassifyOptions& options = {});

struct ScanResult {
  int trials = 0;
  int in_r_count = 0;
  int frame_preserving_count = 0;
  std::uint64_t seed = 0;
  Eigen::Index rows = 0;
  int grid_resolution = 0;
};

// Draws complex Gaussian matrices with the given number of rows and counts
// how many preserve rank and how many pass the geometric certificate.
ScanResult scan_generic(const FieldCache& cache, Eigen::Index rows, int trials,
                        std::uint64_t seed, const CertifyOptions& options = {});
ScanResult scan_generic(const GramianField& field, const SamplingGrid& grid, Eigen::Index rows,
                        int trials, std::uint64_t seed, const CertifyOptions& options = {});

}  // namespace frameforge
