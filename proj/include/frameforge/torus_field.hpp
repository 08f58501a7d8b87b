#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "frameforge/linalg.hpp"

namespace frameforge {

// Finite sum of c · exp(2·pi·i·<n, omega>) with integer frequency vectors n.
// Integer frequencies make every value 1-periodic in each coordinate.
struct TrigPoly {
  struct Term {
    std::vector<int> freq;
    std::complex<double> coeff;
  };

  std::vector<Term> terms;

  static TrigPoly constant(std::complex<double> value, int dimension);

  // Merges duplicate frequencies and drops exact-zero coefficients.
  void canonicalize();

  std::complex<double> eval(const std::vector<double>& omega) const;

  // True when the polynomial is real-valued everywhere: terms pair up as
  // (n, c) / (-n, conj c) within the given slack.
  bool is_real_valued(double slack = 1e-12) const;
};

// Axis-aligned half-open box: lo[i] <= x[i] < hi[i].
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  bool contains(const std::vector<double>& x) const;
  bool overlaps(const Box& other) const;
};

struct Piece {
  Box box;
  TrigPoly value;
};

// A generator described on the frequency side: a compactly supported
// piecewise trigonometric-polynomial function of omega. Pieces live on
// pairwise disjoint bounded boxes; the function is zero elsewhere.
struct GeneratorSpec {
  int dimension = 0;
  std::vector<Piece> pieces;

  void validate() const;  // throws BadShapeError / DimensionMismatchError
  std::complex<double> eval(const std::vector<double>& x) const;
};

// Restriction of a generator to the integer shifts of a base frequency:
// the finitely many k with omega + k inside some piece, with the values
// taken there. Samples are sorted lexicographically by shift.
struct FiberSample {
  std::vector<int> shift;
  std::complex<double> value;
};

struct Fiber {
  std::vector<double> base_frequency;  // reduced to [-1/2, 1/2) per axis
  std::vector<FiberSample> samples;
};

Fiber fiber(const GeneratorSpec& g, const std::vector<double>& omega);

// Reduce each coordinate to the fundamental cell [-1/2, 1/2).
std::vector<double> reduce_to_cell(const std::vector<double>& omega);

// One entry of a matrix-valued field, given directly as pieces on the
// fundamental cell (uncovered points evaluate to zero).
using EntryPieces = std::vector<Piece>;

// Matrix-valued, 1-periodic, Hermitian-PSD-at-every-point field on the
// torus. Sourced either from a generator set (entries are fiber inner
// products), from explicit entries, or lazily as A · base(omega) · A*.
class GramianField {
 public:
  static GramianField from_generators(std::vector<GeneratorSpec> generators);
  static GramianField from_entries(int dimension,
                                   std::vector<std::vector<EntryPieces>> entries);

  int dimension() const { return dimension_; }
  Eigen::Index size() const { return size_; }

  bool generator_sourced() const { return !generators_.empty(); }
  bool entry_sourced() const { return !entries_.empty() && !base_; }
  bool conjugation_sourced() const { return static_cast<bool>(base_); }

  const std::vector<GeneratorSpec>& generators() const { return generators_; }
  const std::vector<std::vector<EntryPieces>>& entries() const { return entries_; }

  friend ComplexMatrix gramian_at(const GramianField& field,
                                  const std::vector<double>& omega,
                                  const ToleranceConfig& tol);
  friend GramianField conjugate(const GramianField& field, const ComplexMatrix& a);

 private:
  GramianField() = default;

  int dimension_ = 0;
  Eigen::Index size_ = 0;
  std::vector<GeneratorSpec> generators_;
  std::vector<std::vector<EntryPieces>> entries_;  // full matrix, validated Hermitian
  std::shared_ptr<const GramianField> base_;       // set when conjugation-sourced
  ComplexMatrix conjugator_;
};

// Field value at omega (coordinates reduced first). Hermitian by
// construction; entry-sourced fields are additionally PSD-checked and throw
// NotPsdAtPointError if an eigenvalue is decisively negative.
ComplexMatrix gramian_at(const GramianField& field, const std::vector<double>& omega,
                         const ToleranceConfig& tol = {});

// New field evaluating to a · field(omega) · a*. Chained conjugations
// compose their matrices.
GramianField conjugate(const GramianField& field, const ComplexMatrix& a);

// Regular grid on the fundamental cell with a per-axis offset in (0, 1/N)
// so that box breakpoints are never sampled. Points per axis:
// -1/2 + offset + j/N for j = 0 .. N-1; enumeration is lexicographic with
// axis 0 slowest.
struct SamplingGrid {
  int dimension = 0;
  int points_per_axis = 0;
  std::vector<double> offsets;

  // Default offset (sqrt(2) - 1) / n on every axis.
  static SamplingGrid regular(int dimension, int points_per_axis);

  void validate() const;
  std::size_t point_count() const;
  double coordinate(int axis, int index) const;
  std::vector<double> point(std::size_t flat_index) const;
};

// Materialized sweep over all grid points, in enumeration order.
std::vector<std::pair<std::vector<double>, ComplexMatrix>> sample(
    const GramianField& field, const SamplingGrid& grid, const ToleranceConfig& tol = {});

// Deterministic parallel sweep; fn(i, omega, value) is called once per grid
// point, in any order, with results expected to land in per-index slots.
void for_each_grid_point(
    const GramianField& field, const SamplingGrid& grid, const ToleranceConfig& tol,
    const std::function<void(std::size_t, const std::vector<double>&, const ComplexMatrix&)>& fn);

}  // namespace frameforge
