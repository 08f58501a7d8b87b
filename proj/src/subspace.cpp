#include "frameforge/subspace.hpp"

#include <algorithm>
#include <cmath>

#include "frameforge/errors.hpp"

namespace frameforge {

namespace {

// Singular values of a product of orthogonal projectors equal cosines of
// principal angles; anything this close to 1 is treated as a shared direction.
constexpr double kIntersectionTol = 1e-8;

ComplexMatrix orthonormal_columns(const ComplexMatrix& m, double sv_cut) {
  if (m.cols() == 0) return ComplexMatrix(m.rows(), 0);
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > sv_cut) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

}  // namespace

Subspace Subspace::zero(Eigen::Index ambient_dimension) {
  if (ambient_dimension < 0) throw BadShapeError("ambient dimension must be nonnegative");
  return Subspace(ambient_dimension, ComplexMatrix(ambient_dimension, 0));
}

Subspace Subspace::from_image(const ComplexMatrix& m, const ToleranceConfig& tol) {
  tol.validate();
  require_finite(m);
  if (m.size() == 0) throw BadShapeError("cannot take the image of an empty matrix");
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU);
  const double cut =
      tol.rank_tol * std::max(1.0, svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > cut) ++rank;
  }
  return Subspace(m.rows(), svd.matrixU().leftCols(rank));
}

Subspace Subspace::from_kernel(const ComplexMatrix& m, const ToleranceConfig& tol) {
  tol.validate();
  require_finite(m);
  if (m.size() == 0) throw BadShapeError("cannot take the kernel of an empty matrix");
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const double cut =
      tol.rank_tol * std::max(1.0, svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > cut) ++rank;
  }
  return Subspace(m.cols(), svd.matrixV().rightCols(m.cols() - rank));
}

ComplexMatrix Subspace::projector() const {
  if (dimension() == 0) return ComplexMatrix::Zero(ambient_, ambient_);
  return basis_ * basis_.adjoint();
}

Subspace Subspace::orthogonal_complement() const {
  if (dimension() == 0) {
    ComplexMatrix id = ComplexMatrix::Identity(ambient_, ambient_);
    return Subspace(ambient_, std::move(id));
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(basis_, Eigen::ComputeFullU);
  return Subspace(ambient_, svd.matrixU().rightCols(ambient_ - dimension()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dimension() != v.ambient_dimension()) {
    throw DimensionMismatchError("subspaces live in different ambient spaces");
  }
  const Eigen::Index n = u.ambient_dimension();
  if (u.dimension() == 0 || v.dimension() == 0) return Subspace::zero(n);
  // x is in both spans iff P_u P_v fixes it; the fixed directions are the
  // right singular vectors with singular value 1.
  const ComplexMatrix product = u.projector() * v.projector();
  Eigen::JacobiSVD<ComplexMatrix> svd(product, Eigen::ComputeFullV);
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) >= 1.0 - kIntersectionTol) ++count;
  }
  if (count == 0) return Subspace::zero(n);
  return Subspace::from_image(svd.matrixV().leftCols(count));
}

double friedrichs_cos(const Subspace& u, const Subspace& v) {
  if (u.ambient_dimension() != v.ambient_dimension()) {
    throw DimensionMismatchError("subspaces live in different ambient spaces");
  }
  if (u.dimension() == 0 || v.dimension() == 0) return 0.0;
  const Subspace shared = intersect(u, v);
  // Containment either way: removing the shared part empties one side.
  if (shared.dimension() == u.dimension() || shared.dimension() == v.dimension()) return 0.0;

  auto reduce_against = [&shared](const Subspace& s) -> ComplexMatrix {
    if (shared.dimension() == 0) return s.basis();
    const ComplexMatrix reduced =
        s.basis() - shared.basis() * (shared.basis().adjoint() * s.basis());
    // Columns keep norm ~1 when independent of the shared part, so a fixed
    // mid-range cut separates surviving directions cleanly.
    return orthonormal_columns(reduced, 0.5);
  };
  const ComplexMatrix bu = reduce_against(u);
  const ComplexMatrix bv = reduce_against(v);
  if (bu.cols() == 0 || bv.cols() == 0) return 0.0;
  const double top = operator_norm(bu.adjoint() * bv);
  return std::min(1.0, top);
}

double friedrichs_sin(const Subspace& u, const Subspace& v) {
  const double c = friedrichs_cos(u, v);
  return std::sqrt(std::max(0.0, 1.0 - c * c));
}

}  // namespace frameforge
