#include "frameforge/torus_field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "frameforge/parallel.hpp"

namespace frameforge {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_dimension(int dimension) {
  if (dimension < 1) throw BadShapeError("dimension must be at least 1");
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

// ---------------------------------------------------------------------------
// TrigPoly
// ---------------------------------------------------------------------------

TrigPoly TrigPoly::constant(std::complex<double> value, int dimension) {
  require_dimension(dimension);
  TrigPoly p;
  p.terms.push_back({std::vector<int>(static_cast<std::size_t>(dimension), 0), value});
  return p;
}

void TrigPoly::canonicalize() {
  std::map<std::vector<int>, std::complex<double>> merged;
  for (const auto& t : terms) merged[t.freq] += t.coeff;
  terms.clear();
  for (const auto& [freq, coeff] : merged) {
    if (coeff != std::complex<double>(0.0, 0.0)) terms.push_back({freq, coeff});
  }
}

std::complex<double> TrigPoly::eval(const std::vector<double>& omega) const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& t : terms) {
    double phase = 0.0;
    for (std::size_t i = 0; i < t.freq.size(); ++i) {
      phase += t.freq[i] * omega[i];
    }
    acc += t.coeff * std::polar(1.0, kTwoPi * phase);
  }
  return acc;
}

bool TrigPoly::is_real_valued(double slack) const {
  TrigPoly copy = *this;
  copy.canonicalize();
  std::map<std::vector<int>, std::complex<double>> table;
  for (const auto& t : copy.terms) table[t.freq] = t.coeff;
  for (const auto& [freq, coeff] : table) {
    std::vector<int> neg(freq.size());
    for (std::size_t i = 0; i < freq.size(); ++i) neg[i] = -freq[i];
    const auto it = table.find(neg);
    const std::complex<double> mirror = it == table.end() ? std::complex<double>(0, 0) : it->second;
    if (std::abs(mirror - std::conj(coeff)) > slack) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Boxes and generators
// ---------------------------------------------------------------------------

bool Box::contains(const std::vector<double>& x) const {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (!(x[i] >= lo[i] && x[i] < hi[i])) return false;
  }
  return true;
}

bool Box::overlaps(const Box& other) const {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (!(lo[i] < other.hi[i] && other.lo[i] < hi[i])) return false;
  }
  return true;
}

void GeneratorSpec::validate() const {
  require_dimension(dimension);
  const auto d = static_cast<std::size_t>(dimension);
  for (const auto& piece : pieces) {
    if (piece.box.lo.size() != d || piece.box.hi.size() != d) {
      throw DimensionMismatchError("box dimension does not match the generator dimension");
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (!std::isfinite(piece.box.lo[i]) || !std::isfinite(piece.box.hi[i]) ||
          !(piece.box.lo[i] < piece.box.hi[i])) {
        throw BadShapeError("box bounds must be finite with lo < hi");
      }
    }
    for (const auto& term : piece.value.terms) {
      if (term.freq.size() != d) {
        throw DimensionMismatchError("trig-poly frequency dimension mismatch");
      }
    }
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (pieces[i].box.overlaps(pieces[j].box)) {
        throw BadShapeError("generator pieces must live on disjoint boxes");
      }
    }
  }
}

std::complex<double> GeneratorSpec::eval(const std::vector<double>& x) const {
  for (const auto& piece : pieces) {
    if (piece.box.contains(x)) return piece.value.eval(x);
  }
  return {0.0, 0.0};
}

std::vector<double> reduce_to_cell(const std::vector<double>& omega) {
  std::vector<double> reduced(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (!std::isfinite(omega[i])) throw NonFiniteEntryError("non-finite frequency coordinate");
    double r = omega[i] - std::floor(omega[i] + 0.5);
    if (r >= 0.5) r -= 1.0;  // guard the floating boundary
    reduced[i] = r;
  }
  return reduced;
}

Fiber fiber(const GeneratorSpec& g, const std::vector<double>& omega) {
  g.validate();
  if (omega.size() != static_cast<std::size_t>(g.dimension)) {
    throw DimensionMismatchError("frequency dimension does not match the generator");
  }
  Fiber out;
  out.base_frequency = reduce_to_cell(omega);
  const auto d = static_cast<std::size_t>(g.dimension);
  for (const auto& piece : g.pieces) {
    // Per-axis integer ranges with omega + k inside the half-open box:
    // lo <= base + k < hi, so k runs over [ceil(lo - base), ceil(hi - base) - 1].
    std::vector<int> k_lo(d), k_hi(d);
    bool empty = false;
    for (std::size_t i = 0; i < d; ++i) {
      k_lo[i] = static_cast<int>(std::ceil(piece.box.lo[i] - out.base_frequency[i]));
      k_hi[i] = static_cast<int>(std::ceil(piece.box.hi[i] - out.base_frequency[i])) - 1;
      if (k_lo[i] > k_hi[i]) {
        empty = true;
        break;
      }
    }
    if (empty) continue;
    std::vector<int> k = k_lo;
    while (true) {
      // Integer frequencies make the value 1-periodic, so evaluating at the
      // reduced point is exact even though selection used the shifted point.
      out.samples.push_back({k, piece.value.eval(out.base_frequency)});
      int axis = static_cast<int>(d) - 1;
      while (axis >= 0) {
        if (++k[static_cast<std::size_t>(axis)] <= k_hi[static_cast<std::size_t>(axis)]) break;
        k[static_cast<std::size_t>(axis)] = k_lo[static_cast<std::size_t>(axis)];
        --axis;
      }
      if (axis < 0) break;
    }
  }
  std::sort(out.samples.begin(), out.samples.end(),
            [](const FiberSample& a, const FiberSample& b) { return lex_less(a.shift, b.shift); });
  return out;
}

// ---------------------------------------------------------------------------
// GramianField
// ---------------------------------------------------------------------------

GramianField GramianField::from_generators(std::vector<GeneratorSpec> generators) {
  if (generators.empty()) throw BadShapeError("a field needs at least one generator");
  const int d = generators.front().dimension;
  for (const auto& g : generators) {
    g.validate();
    if (g.dimension != d) {
      throw DimensionMismatchError("all generators must share one dimension");
    }
  }
  GramianField f;
  f.dimension_ = d;
  f.size_ = static_cast<Eigen::Index>(generators.size());
  f.generators_ = std::move(generators);
  return f;
}

GramianField GramianField::from_entries(int dimension,
                                        std::vector<std::vector<EntryPieces>> entries) {
  require_dimension(dimension);
  const std::size_t m = entries.size();
  if (m == 0) throw BadShapeError("entry matrix must be nonempty");
  for (const auto& row : entries) {
    if (row.size() != m) throw BadShapeError("entry matrix must be square");
  }
  auto validate_pieces = [dimension](const EntryPieces& pieces) {
    GeneratorSpec probe;
    probe.dimension = dimension;
    probe.pieces = pieces;
    probe.validate();
  };
  // Structural Hermitian symmetry: diagonals real-valued, and (j, i) must be
  // the conjugate mirror of (i, j) piece by piece.
  for (std::size_t i = 0; i < m; ++i) {
    validate_pieces(entries[i][i]);
    for (const auto& piece : entries[i][i]) {
      if (!piece.value.is_real_valued()) {
        throw BadShapeError("diagonal entries must be real-valued");
      }
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      validate_pieces(entries[i][j]);
      validate_pieces(entries[j][i]);
      if (entries[j][i].empty() && !entries[i][j].empty()) {
        // Mirror derived below.
      } else if (entries[j][i].size() != entries[i][j].size()) {
        throw BadShapeError("entry (j,i) must mirror entry (i,j)");
      }
    }
  }
  // Derive missing mirrors so evaluation can read the full matrix.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (entries[j][i].empty() && !entries[i][j].empty()) {
        EntryPieces mirror = entries[i][j];
        for (auto& piece : mirror) {
          for (auto& term : piece.value.terms) {
            term.coeff = std::conj(term.coeff);
            for (auto& n : term.freq) n = -n;
          }
        }
        entries[j][i] = std::move(mirror);
      }
    }
  }
  GramianField f;
  f.dimension_ = dimension;
  f.size_ = static_cast<Eigen::Index>(m);
  f.entries_ = std::move(entries);
  return f;
}

GramianField conjugate(const GramianField& field, const ComplexMatrix& a) {
  require_finite(a);
  if (a.cols() != field.size()) {
    throw BadShapeError("conjugating matrix must have " + std::to_string(field.size()) +
                        " columns, got " + std::to_string(a.cols()));
  }
  if (a.rows() < 1) throw BadShapeError("conjugating matrix needs at least one row");
  GramianField f;
  f.dimension_ = field.dimension();
  f.size_ = a.rows();
  if (field.conjugation_sourced()) {
    f.base_ = field.base_;
    f.conjugator_ = a * field.conjugator_;
  } else {
    f.base_ = std::make_shared<GramianField>(field);
    f.conjugator_ = a;
  }
  return f;
}

ComplexMatrix gramian_at(const GramianField& field, const std::vector<double>& omega,
                         const ToleranceConfig& tol) {
  tol.validate();
  if (omega.size() != static_cast<std::size_t>(field.dimension())) {
    throw DimensionMismatchError("frequency dimension does not match the field");
  }
  const std::vector<double> w = reduce_to_cell(omega);

  if (field.conjugation_sourced()) {
    const ComplexMatrix inner = gramian_at(*field.base_, w, tol);
    ComplexMatrix g = field.conjugator_ * inner * field.conjugator_.adjoint();
    return 0.5 * (g + ComplexMatrix(g.adjoint()));
  }

  const auto m = field.size();
  if (field.generator_sourced()) {
    // Entries are inner products of fibers over the shared shift support,
    // assembled as a sum of rank-one outer products so the result is
    // Hermitian PSD by construction.
    std::map<std::vector<int>, ComplexVector> columns;
    for (Eigen::Index i = 0; i < m; ++i) {
      const Fiber fib = fiber(field.generators_[static_cast<std::size_t>(i)], w);
      for (const auto& sample : fib.samples) {
        auto [it, inserted] = columns.try_emplace(sample.shift, ComplexVector::Zero(m));
        it->second(i) = sample.value;
      }
    }
    ComplexMatrix g = ComplexMatrix::Zero(m, m);
    for (const auto& [shift, column] : columns) {
      g += column * column.adjoint();
    }
    return g;
  }

  ComplexMatrix g(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const auto& pieces = field.entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      std::complex<double> value(0.0, 0.0);
      for (const auto& piece : pieces) {
        if (piece.box.contains(w)) {
          value = piece.value.eval(w);
          break;
        }
      }
      g(i, j) = value;
    }
  }
  const double scale = std::max(1.0, g.norm());
  if ((g - g.adjoint()).norm() > tol.reconstruction_tol * scale) {
    throw NotPsdAtPointError("entry-sourced field is not Hermitian at the sampled point");
  }
  g = 0.5 * (g + ComplexMatrix(g.adjoint()));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(g, Eigen::EigenvaluesOnly);
  const double largest =
      solver.eigenvalues().size() > 0 ? solver.eigenvalues().cwiseAbs().maxCoeff() : 0.0;
  if (solver.eigenvalues().size() > 0 &&
      solver.eigenvalues()(0) < -tol.positivity_tol * std::max(1.0, largest)) {
    throw NotPsdAtPointError("entry-sourced field has a negative eigenvalue at a sampled point");
  }
  return g;
}

// ---------------------------------------------------------------------------
// SamplingGrid
// ---------------------------------------------------------------------------

SamplingGrid SamplingGrid::regular(int dimension, int points_per_axis) {
  require_dimension(dimension);
  SamplingGrid grid;
  grid.dimension = dimension;
  grid.points_per_axis = points_per_axis;
  const double offset = 0.41421356237309504880168872420970 / points_per_axis;
  grid.offsets.assign(static_cast<std::size_t>(dimension), offset);
  grid.validate();
  return grid;
}

void SamplingGrid::validate() const {
  require_dimension(dimension);
  if (points_per_axis < 2) {
    throw EmptyGridError("grid needs at least 2 points per axis");
  }
  if (offsets.size() != static_cast<std::size_t>(dimension)) {
    throw DimensionMismatchError("grid offsets must match the dimension");
  }
  for (const double off : offsets) {
    if (!(off > 0.0 && off < 1.0 / points_per_axis)) {
      throw BadShapeError("grid offset must lie strictly inside (0, 1/N)");
    }
  }
}

std::size_t SamplingGrid::point_count() const {
  std::size_t n = 1;
  for (int i = 0; i < dimension; ++i) n *= static_cast<std::size_t>(points_per_axis);
  return n;
}

double SamplingGrid::coordinate(int axis, int index) const {
  return -0.5 + offsets[static_cast<std::size_t>(axis)] +
         static_cast<double>(index) / points_per_axis;
}

std::vector<double> SamplingGrid::point(std::size_t flat_index) const {
  std::vector<double> p(static_cast<std::size_t>(dimension));
  std::size_t rest = flat_index;
  for (int axis = dimension - 1; axis >= 0; --axis) {
    const auto n = static_cast<std::size_t>(points_per_axis);
    p[static_cast<std::size_t>(axis)] = coordinate(axis, static_cast<int>(rest % n));
    rest /= n;
  }
  return p;
}

std::vector<std::pair<std::vector<double>, ComplexMatrix>> sample(
    const GramianField& field, const SamplingGrid& grid, const ToleranceConfig& tol) {
  grid.validate();
  if (grid.dimension != field.dimension()) {
    throw DimensionMismatchError("grid dimension does not match the field");
  }
  std::vector<std::pair<std::vector<double>, ComplexMatrix>> out(grid.point_count());
  for_each_grid_point(field, grid, tol,
                      [&](std::size_t i, const std::vector<double>& omega, const ComplexMatrix& g) {
                        out[i] = {omega, g};
                      });
  return out;
}

void for_each_grid_point(
    const GramianField& field, const SamplingGrid& grid, const ToleranceConfig& tol,
    const std::function<void(std::size_t, const std::vector<double>&, const ComplexMatrix&)>& fn) {
  grid.validate();
  if (grid.dimension != field.dimension()) {
    throw DimensionMismatchError("grid dimension does not match the field");
  }
  parallel_for_index(grid.point_count(), [&](std::size_t i) {
    const std::vector<double> omega = grid.point(i);
    fn(i, omega, gramian_at(field, omega, tol));
  });
}

}  // namespace frameforge
