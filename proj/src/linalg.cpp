#include "frameforge/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <string>

namespace frameforge {

namespace {

double rank_cutoff(double largest_magnitude, const ToleranceConfig& tol) {
  return tol.rank_tol * std::max(1.0, largest_magnitude);
}

Eigen::JacobiSVD<ComplexMatrix> full_svd(const ComplexMatrix& m) {
  return Eigen::JacobiSVD<ComplexMatrix>(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

}  // namespace

void ToleranceConfig::validate() const {
  auto in_unit = [](double v) { return v > 0.0 && v < 1.0 && std::isfinite(v); };
  if (!in_unit(rank_tol) || !in_unit(reconstruction_tol) || !in_unit(positivity_tol)) {
    throw InvalidToleranceError("tolerances must lie strictly between 0 and 1");
  }
}

void require_finite(const ComplexMatrix& m) {
  if (!m.allFinite()) {
    throw NonFiniteEntryError("matrix contains a NaN or infinite entry");
  }
}

double operator_norm(const ComplexMatrix& m) {
  require_finite(m);
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

Eigen::Index numerical_rank(const ComplexMatrix& m, const ToleranceConfig& tol) {
  tol.validate();
  require_finite(m);
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  const double cutoff = rank_cutoff(sv.size() > 0 ? sv(0) : 0.0, tol);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++r;
  }
  return r;
}

HermitianSpectrum hermitian_eig(const ComplexMatrix& m, const ToleranceConfig& tol) {
  tol.validate();
  require_finite(m);
  if (m.rows() != m.cols()) {
    throw NotSquareError("hermitian_eig requires a square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const double scale = std::max(1.0, m.norm());
  const double deviation = (m - m.adjoint()).norm();
  if (deviation > tol.reconstruction_tol * scale) {
    throw NotHermitianError("matrix is not Hermitian within tolerance (deviation " +
                            std::to_string(deviation) + ")");
  }
  ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("Hermitian eigendecomposition failed to converge");
  }
  HermitianSpectrum out;
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();
  const double largest = out.eigenvalues.size() > 0
                             ? out.eigenvalues.cwiseAbs().maxCoeff()
                             : 0.0;
  const double cutoff = rank_cutoff(largest, tol);
  out.numerical_rank = 0;
  for (Eigen::Index i = 0; i < out.eigenvalues.size(); ++i) {
    if (std::abs(out.eigenvalues(i)) > cutoff) ++out.numerical_rank;
  }
  return out;
}

double smallest_nonzero_eigenvalue(const ComplexMatrix& m, const ToleranceConfig& tol) {
  HermitianSpectrum spec = hermitian_eig(m, tol);
  const double largest = spec.eigenvalues.size() > 0
                             ? spec.eigenvalues.cwiseAbs().maxCoeff()
                             : 0.0;
  if (spec.eigenvalues.size() > 0 &&
      spec.eigenvalues(0) < -tol.positivity_tol * std::max(1.0, largest)) {
    throw NotPsdError("matrix has a decisively negative eigenvalue " +
                      std::to_string(spec.eigenvalues(0)));
  }
  const double cutoff = rank_cutoff(largest, tol);
  for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
    if (spec.eigenvalues(i) > cutoff) return spec.eigenvalues(i);
  }
  throw ZeroMatrixError("matrix has no eigenvalue above the rank cutoff");
}

double smallest_nonzero_singular_value(const ComplexMatrix& m, const ToleranceConfig& tol) {
  tol.validate();
  require_finite(m);
  if (m.size() == 0) throw ZeroMatrixError("empty matrix has no singular values");
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  const double cutoff = rank_cutoff(sv(0), tol);
  double smallest = -1.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) smallest = sv(i);
  }
  if (smallest < 0.0) throw ZeroMatrixError("matrix is numerically zero");
  return smallest;
}

ComplexMatrix pinv(const ComplexMatrix& m, const ToleranceConfig& tol) {
  tol.validate();
  require_finite(m);
  if (m.size() == 0) return ComplexMatrix(m.cols(), m.rows());
  auto svd = full_svd(m);
  const auto& sv = svd.singularValues();
  const double cutoff = rank_cutoff(sv.size() > 0 ? sv(0) : 0.0, tol);
  RealVector inv = RealVector::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) inv(i) = 1.0 / sv(i);
  }
  return svd.matrixV().leftCols(sv.size()) * inv.asDiagonal() *
         svd.matrixU().leftCols(sv.size()).adjoint();
}

ComplexMatrix image_projector(const ComplexMatrix& m, const ToleranceConfig& tol) {
  tol.validate();
  require_finite(m);
  if (m.size() == 0) return ComplexMatrix::Zero(m.rows(), m.rows());
  auto svd = full_svd(m);
  const auto& sv = svd.singularValues();
  const double cutoff = rank_cutoff(sv.size() > 0 ? sv(0) : 0.0, tol);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  const ComplexMatrix u = svd.matrixU().leftCols(r);
  return u * u.adjoint();
}

ComplexMatrix kernel_projector(const ComplexMatrix& m, const ToleranceConfig& tol) {
  tol.validate();
  require_finite(m);
  if (m.size() == 0) return ComplexMatrix::Identity(m.cols(), m.cols());
  auto svd = full_svd(m);
  const auto& sv = svd.singularValues();
  const double cutoff = rank_cutoff(sv.size() > 0 ? sv(0) : 0.0, tol);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  const ComplexMatrix v = svd.matrixV().rightCols(m.cols() - r);
  return v * v.adjoint();
}

}  // namespace frameforge
