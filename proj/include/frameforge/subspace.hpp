#pragma once

#include "frameforge/linalg.hpp"

namespace frameforge {

// A subspace of C^n carried by an orthonormal basis (possibly empty).
class Subspace {
 public:
  static Subspace zero(Eigen::Index ambient_dimension);
  // Column span of the matrix.
  static Subspace from_image(const ComplexMatrix& m, const ToleranceConfig& tol = {});
  // Null space of the matrix.
  static Subspace from_kernel(const ComplexMatrix& m, const ToleranceConfig& tol = {});

  Eigen::Index ambient_dimension() const { return ambient_; }
  Eigen::Index dimension() const { return basis_.cols(); }
  // Columns form an orthonormal basis; shape ambient x dimension.
  const ComplexMatrix& basis() const { return basis_; }
  ComplexMatrix projector() const;
  Subspace orthogonal_complement() const;

 private:
  Subspace(Eigen::Index ambient, ComplexMatrix basis)
      : ambient_(ambient), basis_(std::move(basis)) {}

  Eigen::Index ambient_ = 0;
  ComplexMatrix basis_;
};

// Exact intersection of two subspaces, recovered from the singular vectors of
// the composed projectors with singular value numerically equal to one.
Subspace intersect(const Subspace& u, const Subspace& v);

// Cosine of the principal angle between the subspaces after removing their
// common part. Containment (in either direction) and trivial subspaces give 0
// by convention, so the sine below is 1 in those cases.
double friedrichs_cos(const Subspace& u, const Subspace& v);
double friedrichs_sin(const Subspace& u, const Subspace& v);

}  // namespace frameforge
