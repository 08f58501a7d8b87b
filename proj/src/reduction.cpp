#include "frameforge/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "frameforge/parallel.hpp"
#include "frameforge/rng.hpp"

namespace frameforge {

namespace {

// Cosines this close to 1 mean the kernel has reached the image.
constexpr double kAngleBoundaryTol = 1e-8;
// Beyond this row-Gramian condition number the normal-equation solve is
// abandoned for a singular value decomposition.
constexpr double kNormalEquationConditionLimit = 1e8;

enum class Method { kGeometric, kAnalytic, kBoth };

std::string method_name(Method method) {
  switch (method) {
    case Method::kGeometric:
      return "geometric";
    case Method::kAnalytic:
      return "analytic";
    case Method::kBoth:
      return "both";
  }
  throw InternalCheckError("unhandled certification method");
}

ComplexMatrix kernel_basis(const ComplexMatrix& a, const ToleranceConfig& tol) {
  return Subspace::from_kernel(a, tol).basis();
}

Eigen::Index count_above(const RealVector& values, double cutoff) {
  Eigen::Index out = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) > cutoff) ++out;
  }
  return out;
}

double conjugated_zero_cutoff(const FieldCache& cache, const ComplexMatrix& a) {
  const double a_norm = operator_norm(a);
  return cache.options().tol.rank_tol *
         std::max(1.0, a_norm * a_norm * cache.report().beta_hat);
}

struct PointCheck {
  bool violated = false;
  double sine = 1.0;
};

struct GeometricSweep {
  bool in_r = true;
  std::size_t violation_index = 0;
  double delta_hat = 1.0;
  std::size_t argmin_index = 0;
  bool argmin_violated = false;
};

// Assesses rank preservation and the kernel-to-image angle at every cached
// point. Rank preservation is probed two ways, eigenvalue counting on the
// conjugated matrix and the angle cosine reaching its ceiling; a point counts
// as violating when either probe fires.
GeometricSweep geometric_sweep(const FieldCache& cache, const ComplexMatrix& a, bool need_sines) {
  const ComplexMatrix kernel = kernel_basis(a, cache.options().tol);
  const double cutoff = conjugated_zero_cutoff(cache, a);

  std::vector<PointCheck> checks(cache.point_count());
  parallel_for_index(cache.point_count(), [&](std::size_t i) {
    const Eigen::Index r = cache.rank(i);
    ComplexMatrix b = a * cache.gramian(i) * a.adjoint();
    b = 0.5 * (b + ComplexMatrix(b.adjoint()));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(b, Eigen::EigenvaluesOnly);
    const Eigen::Index rank_b = count_above(solver.eigenvalues(), cutoff);
    bool violated = rank_b < r;
    double cos_max = 0.0;
    if (kernel.cols() > 0 && r > 0) {
      cos_max = operator_norm(kernel.adjoint() * cache.eigenvectors(i).rightCols(r));
      if (cos_max >= 1.0 - kAngleBoundaryTol) violated = true;
    }
    checks[i].violated = violated;
    if (!need_sines) return;
    if (kernel.cols() == 0 || r == 0) {
      checks[i].sine = 1.0;
    } else if (violated) {
      // Near or at an intersection the plain cosine saturates, so fall back
      // to the full angle computation that removes any shared directions.
      checks[i].sine = friedrichs_sin(Subspace::from_image(kernel),
                                      Subspace::from_image(cache.eigenvectors(i).rightCols(r)));
    } else {
      checks[i].sine = std::sqrt(std::max(0.0, 1.0 - cos_max * cos_max));
    }
  });

  GeometricSweep sweep;
  sweep.violation_index = checks.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (checks[i].violated && sweep.in_r) {
      sweep.in_r = false;
      sweep.violation_index = i;
    }
    if (checks[i].sine < best) {
      best = checks[i].sine;
      sweep.argmin_index = i;
    }
  }
  sweep.delta_hat = best;
  sweep.argmin_violated = checks[sweep.argmin_index].violated;
  return sweep;
}

struct AnalyticSweep {
  double gamma_hat = 0.0;
  std::size_t argmax_index = 0;
};

// Largest norm of kernel_projector * G * pinv(G) across the grid.
AnalyticSweep analytic_sweep(const FieldCache& cache, const ComplexMatrix& kernel_projector) {
  std::vector<double> gammas(cache.point_count());
  parallel_for_index(cache.point_count(), [&](std::size_t i) {
    const Eigen::Index r = cache.rank(i);
    if (r == 0) {
      gammas[i] = 0.0;
      return;
    }
    const Eigen::Index m = cache.gramian(i).rows();
    const auto vectors = cache.eigenvectors(i).rightCols(r);
    RealVector inverted(r);
    for (Eigen::Index j = 0; j < r; ++j) {
      inverted(j) = 1.0 / cache.eigenvalues(i)(m - r + j);
    }
    const ComplexMatrix pseudo = vectors * inverted.asDiagonal() * vectors.adjoint();
    gammas[i] = operator_norm(kernel_projector * (cache.gramian(i) * pseudo));
  });

  AnalyticSweep sweep;
  double best = -1.0;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (gammas[i] > best) {
      best = gammas[i];
      sweep.argmax_index = i;
    }
  }
  sweep.gamma_hat = best;
  return sweep;
}

void validate_matrix_against_cache(const FieldCache& cache, const ComplexMatrix& a) {
  require_finite(a);
  if (a.rows() < 1) throw BadShapeError("matrix needs at least one row");
  if (a.cols() != cache.field().size()) {
    throw BadShapeError("matrix must have one column per generator, expected " +
                        std::to_string(cache.field().size()) + " columns, got " +
                        std::to_string(a.cols()));
  }
}

void require_frame_base(const FieldCache& cache) {
  if (!is_frame_verdict(cache.report().verdict)) {
    throw NotAFrameError("the base system samples as " + to_string(cache.report().verdict) +
                         ", certification needs a frame");
  }
}

ReductionCertificate certify_impl(const FieldCache& cache, const ComplexMatrix& a, Method method,
                                  const CertifyOptions& options) {
  validate_matrix_against_cache(cache, a);
  require_frame_base(cache);

  const int n = cache.grid().points_per_axis;
  ReductionCertificate cert;
  cert.method = method_name(method);
  cert.grid_resolution = n;
  cert.delta_min = options.resolved_delta_min(n);
  cert.gamma_margin = options.resolved_gamma_margin(n);

  std::vector<std::string> reasons;
  const Eigen::Index length = cache.report().length_hat;
  const bool geometric_needed = method != Method::kAnalytic;

  const GeometricSweep sweep = geometric_sweep(cache, a, geometric_needed);
  cert.in_r = sweep.in_r;
  if (!sweep.in_r) cert.in_r_witness = cache.grid().point(sweep.violation_index);

  if (geometric_needed) {
    cert.delta_hat = sweep.delta_hat;
    cert.argmin_omega = cache.grid().point(sweep.argmin_index);
    const bool angle_ok = sweep.delta_hat >= cert.delta_min;
    cert.geometric_accept = sweep.in_r && angle_ok;
    if (!sweep.in_r) {
      reasons.push_back("the matrix kernel meets the field image at a sampled point");
    } else if (!angle_ok) {
      reasons.push_back("the minimal kernel-to-image angle falls below deltaMin");
    }

    const std::size_t idx = sweep.argmin_index;
    if (!sweep.argmin_violated && cache.rank(idx) > 0) {
      const double sine = sweep.delta_hat;
      const double sigma_plus = smallest_nonzero_singular_value(a, cache.options().tol);
      const double a_norm = operator_norm(a);
      ComplexMatrix b = a * cache.gramian(idx) * a.adjoint();
      b = 0.5 * (b + ComplexMatrix(b.adjoint()));
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(b, Eigen::EigenvaluesOnly);
      const double cutoff = conjugated_zero_cutoff(cache, a);
      const Eigen::Index rank_b = count_above(solver.eigenvalues(), cutoff);
      const double observed =
          rank_b > 0 ? solver.eigenvalues()(solver.eigenvalues().size() - rank_b) : 0.0;
      cert.derived_bounds = {
          {sigma_plus * sigma_plus * cache.smallest_nonzero(idx) * sine * sine, observed,
           a_norm * a_norm * cache.largest(idx) * sine}};
    }
  }

  if (method != Method::kGeometric) {
    if (a.rows() != length) {
      cert.analytic_accept = false;
      reasons.push_back("the analytic route needs exactly as many rows as the sampled length");
    } else {
      ComplexMatrix row_gram = a * a.adjoint();
      row_gram = 0.5 * (row_gram + ComplexMatrix(row_gram.adjoint()));
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(row_gram);
      const double largest = solver.eigenvalues()(solver.eigenvalues().size() - 1);
      const double smallest = solver.eigenvalues()(0);
      if (smallest <= cache.options().tol.rank_tol * std::max(1.0, largest)) {
        cert.analytic_accept = false;
        reasons.push_back("the rows of the matrix are linearly dependent");
      } else {
        const Eigen::Index m = a.cols();
        ComplexMatrix kernel_projector;
        if (largest / smallest < kNormalEquationConditionLimit) {
          Eigen::LLT<ComplexMatrix> llt(row_gram);
          kernel_projector = ComplexMatrix::Identity(m, m) - a.adjoint() * llt.solve(a);
        } else {
          kernel_projector = ComplexMatrix::Identity(m, m) - pinv(a, cache.options().tol) * a;
        }
        kernel_projector = 0.5 * (kernel_projector + ComplexMatrix(kernel_projector.adjoint()));
        const AnalyticSweep analytic = analytic_sweep(cache, kernel_projector);
        cert.gamma_hat = analytic.gamma_hat;
        cert.argmax_omega = cache.grid().point(analytic.argmax_index);
        const bool norm_ok = analytic.gamma_hat <= 1.0 - cert.gamma_margin;
        cert.analytic_accept = norm_ok;
        if (!norm_ok) {
          reasons.push_back("the projector-product norm exceeds one minus gammaMargin");
        }
      }
    }
  }

  bool accept = true;
  if (cert.geometric_accept.has_value()) accept = accept && *cert.geometric_accept;
  if (cert.analytic_accept.has_value()) accept = accept && *cert.analytic_accept;
  cert.accept = accept;
  if (!reasons.empty()) {
    std::string joined = reasons.front();
    for (std::size_t i = 1; i < reasons.size(); ++i) joined += "; " + reasons[i];
    cert.reject_reason = joined;
  }
  return cert;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldCache
// ---------------------------------------------------------------------------

FieldCache::FieldCache(const GramianField& field, const SamplingGrid& grid,
                       const ClassifyOptions& options)
    : field_(field), grid_(grid), options_(options) {
  options_.tol.validate();
  grid_.validate();
  const auto m = field_.size();
  const ComplexMatrix identity = ComplexMatrix::Identity(m, m);
  const std::size_t count = grid_.point_count();
  gramians_.resize(count);
  eigenvalues_.resize(count);
  eigenvectors_.resize(count);

  std::vector<detail::SpectralSample> samples(count);
  for_each_grid_point(field_, grid_, options_.tol,
                      [&](std::size_t i, const std::vector<double>&, const ComplexMatrix& g) {
                        gramians_[i] = 0.5 * (g + ComplexMatrix(g.adjoint()));
                        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gramians_[i]);
                        eigenvalues_[i] = solver.eigenvalues();
                        eigenvectors_[i] = solver.eigenvectors();
                        samples[i].eigenvalues = eigenvalues_[i];
                        samples[i].identity_deviation = (g - identity).norm();
                        samples[i].finite = g.allFinite();
                      });

  report_ = detail::reduce_classification(samples, grid_, options_);
  zero_cutoff_ = options_.tol.rank_tol * std::max(1.0, report_.beta_hat);
  ranks_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    ranks_[i] = count_above(eigenvalues_[i], zero_cutoff_);
  }
}

ComplexMatrix FieldCache::image_basis(std::size_t i) const {
  return eigenvectors_[i].rightCols(ranks_[i]);
}

double FieldCache::smallest_nonzero(std::size_t i) const {
  if (ranks_[i] == 0) return 0.0;
  return eigenvalues_[i](eigenvalues_[i].size() - ranks_[i]);
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

double CertifyOptions::resolved_delta_min(int points_per_axis) const {
  if (delta_min < 0.0 || delta_min > 1.0) {
    throw InvalidToleranceError("deltaMin must lie in (0, 1]");
  }
  if (delta_min > 0.0) return delta_min;
  return 4.0 / points_per_axis;
}

double CertifyOptions::resolved_gamma_margin(int points_per_axis) const {
  if (gamma_margin < 0.0 || gamma_margin >= 1.0) {
    throw InvalidToleranceError("gammaMargin must lie in (0, 1)");
  }
  if (gamma_margin > 0.0) return gamma_margin;
  const double d = std::min(1.0, resolved_delta_min(points_per_axis));
  return 1.0 - std::sqrt(std::max(0.0, 1.0 - d * d));
}

ReductionCertificate certify_geometric(const FieldCache& cache, const ComplexMatrix& a,
                                       const CertifyOptions& options) {
  return certify_impl(cache, a, Method::kGeometric, options);
}

ReductionCertificate certify_analytic(const FieldCache& cache, const ComplexMatrix& a,
                                      const CertifyOptions& options) {
  return certify_impl(cache, a, Method::kAnalytic, options);
}

ReductionCertificate certify_both(const FieldCache& cache, const ComplexMatrix& a,
                                  const CertifyOptions& options) {
  return certify_impl(cache, a, Method::kBoth, options);
}

ReductionCertificate certify_geometric(const GramianField& field, const ComplexMatrix& a,
                                       const SamplingGrid& grid, const CertifyOptions& options) {
  return certify_geometric(FieldCache(field, grid, options.classify), a, options);
}

ReductionCertificate certify_analytic(const GramianField& field, const ComplexMatrix& a,
                                      const SamplingGrid& grid, const CertifyOptions& options) {
  return certify_analytic(FieldCache(field, grid, options.classify), a, options);
}

ReductionCertificate certify_both(const GramianField& field, const ComplexMatrix& a,
                                  const SamplingGrid& grid, const CertifyOptions& options) {
  return certify_both(FieldCache(field, grid, options.classify), a, options);
}

bool preserves_generators(const FieldCache& cache, const ComplexMatrix& a) {
  validate_matrix_against_cache(cache, a);
  return geometric_sweep(cache, a, false).in_r;
}

bool preserves_generators(const GramianField& field, const ComplexMatrix& a,
                          const SamplingGrid& grid, const ToleranceConfig& tol) {
  ClassifyOptions options;
  options.tol = tol;
  return preserves_generators(FieldCache(field, grid, options), a);
}

std::vector<double> angle_profile(const FieldCache& cache, const ComplexMatrix& a) {
  validate_matrix_against_cache(cache, a);
  const Subspace kernel = Subspace::from_kernel(a, cache.options().tol);
  std::vector<double> sines(cache.point_count());
  parallel_for_index(cache.point_count(), [&](std::size_t i) {
    const Eigen::Index r = cache.rank(i);
    if (r == 0 || kernel.dimension() == 0) {
      sines[i] = 1.0;
      return;
    }
    sines[i] = friedrichs_sin(
        kernel, Subspace::from_image(cache.eigenvectors(i).rightCols(r), cache.options().tol));
  });
  return sines;
}

bool kernel_shortcut(const FieldCache& cache, const ComplexMatrix& a, double tol) {
  validate_matrix_against_cache(cache, a);
  if (tol <= 0.0 || tol >= 1.0) throw InvalidToleranceError("tolerance must lie in (0, 1)");
  const ComplexMatrix kernel = kernel_basis(a, cache.options().tol);
  const auto m = cache.field().size();
  const ComplexMatrix kernel_projector = kernel.cols() > 0
                                             ? ComplexMatrix(kernel * kernel.adjoint())
                                             : ComplexMatrix(ComplexMatrix::Zero(m, m));
  std::vector<char> matches(cache.point_count());
  parallel_for_index(cache.point_count(), [&](std::size_t i) {
    const Eigen::Index r = cache.rank(i);
    ComplexMatrix field_kernel = ComplexMatrix::Identity(m, m);
    if (r > 0) {
      const auto vectors = cache.eigenvectors(i).rightCols(r);
      field_kernel -= vectors * vectors.adjoint();
    }
    matches[i] = operator_norm(kernel_projector - field_kernel) <= tol ? 1 : 0;
  });
  return std::all_of(matches.begin(), matches.end(), [](char c) { return c == 1; });
}

std::array<double, 3> sandwich_bounds(const ComplexMatrix& a, const ComplexMatrix& g,
                                      const ToleranceConfig& tol) {
  tol.validate();
  require_finite(a);
  if (a.cols() != g.rows()) {
    throw DimensionMismatchError("matrix columns must match the Gramian size");
  }
  const HermitianSpectrum spectrum = hermitian_eig(g, tol);
  const Eigen::Index m = g.rows();
  const double largest_abs =
      spectrum.eigenvalues.size() > 0 ? spectrum.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  if (spectrum.eigenvalues(0) < -tol.positivity_tol * std::max(1.0, largest_abs)) {
    throw NotPsdError("the Gramian must be positive semidefinite");
  }
  const Eigen::Index rank_g = spectrum.numerical_rank;
  if (rank_g == 0) return {0.0, 0.0, 0.0};

  const double a_norm = operator_norm(a);
  ComplexMatrix b = a * g * a.adjoint();
  b = 0.5 * (b + ComplexMatrix(b.adjoint()));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(b, Eigen::EigenvaluesOnly);
  const double cutoff = tol.rank_tol * std::max(1.0, a_norm * a_norm * largest_abs);
  const Eigen::Index rank_b = count_above(solver.eigenvalues(), cutoff);
  if (rank_b < rank_g) {
    throw RankDropError("conjugation drops the rank, so the bounded eigenvalue changes meaning");
  }

  const double sine = friedrichs_sin(Subspace::from_kernel(a, tol), Subspace::from_image(g, tol));
  const double sigma_plus = smallest_nonzero_singular_value(a, tol);
  const double lambda_min_g = spectrum.eigenvalues(m - rank_g);
  const double lambda_max_g = spectrum.eigenvalues(m - 1);
  const double observed = solver.eigenvalues()(solver.eigenvalues().size() - rank_b);
  return {sigma_plus * sigma_plus * lambda_min_g * sine * sine, observed,
          a_norm * a_norm * lambda_max_g * sine};
}

// ---------------------------------------------------------------------------
// Square conjugation
// ---------------------------------------------------------------------------

SquareCaseReport square_case(const FieldCache& cache, const ComplexMatrix& a) {
  validate_matrix_against_cache(cache, a);
  if (a.rows() != a.cols()) throw NotSquareError("square-case analysis needs a square matrix");
  if (!is_frame_verdict(cache.report().verdict)) {
    throw UnsupportedInputClassError("square-case analysis needs a frame base, got " +
                                     to_string(cache.report().verdict));
  }

  const auto& tol = cache.options().tol;
  const auto m = a.rows();
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const double sigma_max = svd.singularValues()(0);
  const double sigma_min = svd.singularValues()(m - 1);
  const double rank_cut = tol.rank_tol * std::max(1.0, sigma_max);
  Eigen::Index rank_a = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (svd.singularValues()(i) > rank_cut) ++rank_a;
  }

  SquareCaseReport report;
  report.base_verdict = cache.report().verdict;
  report.invertible = sigma_min > rank_cut;
  report.smallest_singular_value = sigma_min;
  report.unitary =
      operator_norm(a.adjoint() * a - ComplexMatrix::Identity(m, m)) <=
      cache.options().identity_tol * std::max(1.0, sigma_max * sigma_max);

  const GramianField conjugated = conjugate(cache.field(), a);
  const FrameReport conj_report = classify(conjugated, cache.grid(), cache.options());

  const Eigen::Index base_length = cache.report().length_hat;
  if (report.invertible) {
    if (report.base_verdict == Verdict::OrthonormalBasis) {
      report.conjugated_verdict = report.unitary ? Verdict::OrthonormalBasis : Verdict::RieszBasis;
      report.preserved = report.unitary;
    } else {
      report.conjugated_verdict = report.base_verdict;
      report.preserved = true;
    }
    report.detail = report.preserved ? "invertible conjugation keeps the classification"
                                     : "invertible but non-unitary conjugation keeps only a Riesz "
                                       "system";
  } else if (report.base_verdict == Verdict::Frame) {
    report.conjugated_verdict = conj_report.verdict;
    report.preserved =
        is_frame_verdict(conj_report.verdict) && conj_report.length_hat == base_length;
    report.detail = report.preserved
                        ? "singular conjugation still misses the image, keeping a frame"
                        : "singular conjugation cuts into the image";
  } else {
    report.conjugated_verdict = rank_a == 0 ? Verdict::BesselOnly : Verdict::Frame;
    report.preserved = false;
    report.detail = "singular conjugation forces a length drop, so invertibility-bound "
                    "classifications are lost";
  }

  // Sampled cross-checks on the matrix-level decision: the sweep of the
  // conjugated field must stay inside the bounds the singular values of the
  // matrix dictate.
  const double beta_limit =
      sigma_max * sigma_max * cache.report().beta_hat * (1.0 + 1e-6) + 1e-12;
  if (conj_report.beta_hat > beta_limit) {
    throw InternalCheckError("conjugated field exceeds its operator-norm bound");
  }
  if (conj_report.length_hat > base_length) {
    throw InternalCheckError("conjugation cannot raise the sampled length");
  }
  if (report.invertible) {
    const double alpha_floor =
        sigma_min * sigma_min * cache.report().alpha_hat * (1.0 - 1e-6) - 1e-12;
    if (conj_report.length_hat > 0 && conj_report.alpha_hat < alpha_floor) {
      throw InternalCheckError("conjugated field undercuts its singular-value bound");
    }
    // Stronger checks only where the conjugated spectrum provably clears the
    // sampled rank cutoff; extreme scalings or condition numbers can push
    // genuinely nonzero eigenvalues below it.
    const double conjugated_cut =
        tol.rank_tol * std::max(1.0, sigma_max * sigma_max * cache.report().beta_hat);
    const bool spectrum_clear =
        sigma_min * sigma_min * cache.report().alpha_hat > 10.0 * conjugated_cut;
    if (spectrum_clear) {
      if (conj_report.length_hat != base_length) {
        throw InternalCheckError("invertible conjugation changed the sampled length");
      }
      const double kappa = sigma_max / sigma_min;
      const double ratio_floor =
          cache.report().alpha_hat / cache.report().beta_hat / (kappa * kappa);
      const double needed =
          cache.options().resolved_frame_rel_tol(cache.grid().points_per_axis);
      if (ratio_floor >= 1.1 * needed && !is_frame_verdict(conj_report.verdict)) {
        throw InternalCheckError("invertible conjugation of a frame sampled below the threshold");
      }
    }
  } else if (conj_report.length_hat >= m) {
    throw InternalCheckError("singular conjugation kept full length");
  }
  return report;
}

SquareCaseReport square_case(const GramianField& field, const ComplexMatrix& a,
                             const SamplingGrid& grid, const ClassifyOptions& options) {
  return square_case(FieldCache(field, grid, options), a);
}

// ---------------------------------------------------------------------------
// Generic scans
// ---------------------------------------------------------------------------

ScanResult scan_generic(const FieldCache& cache, Eigen::Index rows, int trials, std::uint64_t seed,
                        const CertifyOptions& options) {
  if (rows < 1) throw BadShapeError("scans need at least one row");
  if (trials < 1) throw BadShapeError("scans need at least one trial");
  require_frame_base(cache);
  const int n = cache.grid().points_per_axis;
  const double delta_min = options.resolved_delta_min(n);
  const auto m = cache.field().size();

  struct Outcome {
    bool in_r = false;
    bool frame = false;
  };
  std::vector<Outcome> outcomes(static_cast<std::size_t>(trials));
  parallel_for_index(static_cast<std::size_t>(trials), [&](std::size_t t) {
    SplitMix64 rng(SplitMix64::derive(seed, t));
    const ComplexMatrix a = random_complex_gaussian(rows, m, rng);
    const GeometricSweep sweep = geometric_sweep(cache, a, true);
    outcomes[t].in_r = sweep.in_r;
    outcomes[t].frame = sweep.in_r && sweep.delta_hat >= delta_min;
  });

  ScanResult result;
  result.trials = trials;
  result.seed = seed;
  result.rows = rows;
  result.grid_resolution = n;
  for (const auto& outcome : outcomes) {
    result.in_r_count += outcome.in_r ? 1 : 0;
    result.frame_preserving_count += outcome.frame ? 1 : 0;
  }
  return result;
}

ScanResult scan_generic(const GramianField& field, const SamplingGrid& grid, Eigen::Index rows,
                        int trials, std::uint64_t seed, const CertifyOptions& options) {
  return scan_generic(FieldCache(field, grid, options.classify), rows, trials, seed, options);
}

}  // namespace frameforge
