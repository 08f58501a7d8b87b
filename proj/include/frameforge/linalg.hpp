#pragma once

#include <Eigen/Dense>
#include <complex>

#include "frameforge/errors.hpp"

namespace frameforge {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Shared numerical knobs. rank_tol decides which eigen/singular values count
// as zero (relative to max(1, largest magnitude)); reconstruction_tol bounds
// acceptable decomposition residuals (e.g. Hermitian symmetrization);
// positivity_tol is the slack allowed below zero in PSD checks.
struct ToleranceConfig {
  double rank_tol = 1e-8;
  double reconstruction_tol = 1e-10;
  double positivity_tol = 1e-10;

  void validate() const;
};

// Eigendecomposition of a Hermitian matrix, eigenvalues ascending, plus the
// numerical rank under the tolerance's cutoff.
struct HermitianSpectrum {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;  // unitary; column j pairs with eigenvalues[j]
  Eigen::Index numerical_rank = 0;
};

// Throws NonFiniteEntryError if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m);

// Largest singular value (0 for an empty matrix).
double operator_norm(const ComplexMatrix& m);

// Number of singular values above rank_tol * max(1, sigma_max).
Eigen::Index numerical_rank(const ComplexMatrix& m, const ToleranceConfig& tol = {});

// Full spectrum of a Hermitian matrix. Throws NotSquareError /
// NotHermitianError / NonFiniteEntryError. The input is symmetrized before
// factorization once the Hermitian deviation passes the tolerance check.
HermitianSpectrum hermitian_eig(const ComplexMatrix& m, const ToleranceConfig& tol = {});

// Smallest eigenvalue above the rank cutoff of a Hermitian PSD matrix.
// Throws NotPsdError when an eigenvalue is decisively negative and
// ZeroMatrixError when no eigenvalue clears the cutoff.
double smallest_nonzero_eigenvalue(const ComplexMatrix& m, const ToleranceConfig& tol = {});

// Smallest singular value above the rank cutoff of an arbitrary nonzero
// matrix. Throws ZeroMatrixError when the matrix is numerically zero.
double smallest_nonzero_singular_value(const ComplexMatrix& m, const ToleranceConfig& tol = {});

// Moore-Penrose pseudoinverse via SVD with the shared rank cutoff.
ComplexMatrix pinv(const ComplexMatrix& m, const ToleranceConfig& tol = {});

// Orthogonal projector onto the column space of m (equals m·pinv(m) for
// Hermitian PSD inputs, but computed from the left singular vectors).
ComplexMatrix image_projector(const ComplexMatrix& m, const ToleranceConfig& tol = {});

// Orthogonal projector onto the null space of m (identity minus pinv(m)·m).
ComplexMatrix kernel_projector(const ComplexMatrix& m, const ToleranceConfig& tol = {});

}  // namespace frameforge
