#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "frameforge/reports.hpp"
#include "frameforge/rng.hpp"
#include "frameforge/scenario.hpp"
#include "frameforge/verification.hpp"

using namespace frameforge;

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

ComplexMatrix example1_oracle() {
  ComplexMatrix g(3, 3);
  g << 80.0, -8.0, 4.0, -8.0, 17.0, 32.0, 4.0, 32.0, 65.0;
  return g;
}

GeneratorSpec step_generator(std::vector<std::pair<std::pair<double, double>, double>> steps) {
  GeneratorSpec g;
  g.dimension = 1;
  for (const auto& [range, height] : steps) {
    Piece piece;
    piece.box.lo = {range.first};
    piece.box.hi = {range.second};
    piece.value = TrigPoly::constant(height, 1);
    g.pieces.push_back(piece);
  }
  g.validate();
  return g;
}

}  // namespace

TEST_CASE("trig polynomials evaluate and canonicalize") {
  TrigPoly p;
  p.terms.push_back({{1}, {0.0, 1.0}});
  p.terms.push_back({{1}, {0.0, -1.0}});  // cancels the first term
  p.terms.push_back({{0}, {2.5, 0.0}});
  p.canonicalize();
  CHECK(p.terms.size() == 1);
  CHECK(p.eval({0.3}).real() == doctest::Approx(2.5).epsilon(1e-14));

  TrigPoly wave;
  wave.terms.push_back({{1}, {1.0, 0.0}});
  const auto at = wave.eval({0.25});
  CHECK(at.real() == doctest::Approx(std::cos(kTau * 0.25)).epsilon(1e-12));
  CHECK(at.imag() == doctest::Approx(std::sin(kTau * 0.25)).epsilon(1e-12));
  // Integer frequencies make the value 1-periodic.
  const auto shifted = wave.eval({0.25 + 3.0});
  CHECK(std::abs(at - shifted) <= 1e-12);

  TrigPoly real_valued;
  real_valued.terms.push_back({{2}, {0.5, 0.25}});
  real_valued.terms.push_back({{-2}, {0.5, -0.25}});
  CHECK(real_valued.is_real_valued());
  TrigPoly lopsided;
  lopsided.terms.push_back({{2}, {0.5, 0.25}});
  CHECK_FALSE(lopsided.is_real_valued());
}

TEST_CASE("frequencies reduce to the fundamental cell") {
  CHECK(reduce_to_cell({0.75})[0] == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(reduce_to_cell({-0.5})[0] == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(reduce_to_cell({0.5})[0] == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(reduce_to_cell({3.0})[0] == doctest::Approx(0.0).epsilon(1e-14));
  const auto both = reduce_to_cell({1.25, -2.75});
  CHECK(both[0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(both[1] == doctest::Approx(0.25).epsilon(1e-14));
  for (double x : {-7.3, -0.5, -0.1, 0.0, 0.49, 12.7}) {
    const double r = reduce_to_cell({x})[0];
    CHECK(r >= -0.5);
    CHECK(r < 0.5);
    CHECK(std::abs(std::remainder(x - r, 1.0)) <= 1e-12);
  }
}

TEST_CASE("fibers collect the shifts that land in the support") {
  const GeneratorSpec g = step_generator({{{-0.5, 0.5}, -8.0}, {{0.5, 1.5}, 4.0}});
  const Fiber f = fiber(g, {0.25});
  REQUIRE(f.samples.size() == 2);
  CHECK(f.samples[0].shift == std::vector<int>{0});
  CHECK(f.samples[0].value.real() == doctest::Approx(-8.0));
  CHECK(f.samples[1].shift == std::vector<int>{1});
  CHECK(f.samples[1].value.real() == doctest::Approx(4.0));

  // The base frequency is reduced first, so shifted queries agree.
  const Fiber wrapped = fiber(g, {0.25 + 2.0});
  REQUIRE(wrapped.samples.size() == 2);
  CHECK(wrapped.samples[0].shift == f.samples[0].shift);
  CHECK(wrapped.base_frequency[0] == doctest::Approx(0.25));

  // Support boundaries are half-open: at 0.5 - 1 = -0.5 the first piece
  // starts, so shift 1 picks up the second piece exactly at its left edge.
  const Fiber edge = fiber(g, {-0.5});
  REQUIRE(edge.samples.size() == 2);
  CHECK(edge.samples[0].shift == std::vector<int>{0});
  CHECK(edge.samples[0].value.real() == doctest::Approx(-8.0));
  CHECK(edge.samples[1].shift == std::vector<int>{1});
  CHECK(edge.samples[1].value.real() == doctest::Approx(4.0));
}

TEST_CASE("generator validation rejects malformed pieces") {
  GeneratorSpec overlap;
  overlap.dimension = 1;
  Piece a;
  a.box.lo = {0.0};
  a.box.hi = {1.0};
  a.value = TrigPoly::constant(1.0, 1);
  Piece b = a;
  b.box.lo = {0.5};
  b.box.hi = {1.5};
  overlap.pieces = {a, b};
  CHECK_THROWS_AS(overlap.validate(), BadShapeError);

  GeneratorSpec inverted;
  inverted.dimension = 1;
  Piece c = a;
  c.box.lo = {1.0};
  c.box.hi = {0.0};
  inverted.pieces = {c};
  CHECK_THROWS_AS(inverted.validate(), BadShapeError);

  GeneratorSpec mismatched;
  mismatched.dimension = 2;
  mismatched.pieces = {a};
  CHECK_THROWS_AS(mismatched.validate(), DimensionMismatchError);
}

TEST_CASE("the three-generator field matches its closed form") {
  const Scenario scenario = builtin_scenario("example1");
  const ComplexMatrix oracle = example1_oracle();
  SplitMix64 rng(42);
  for (int i = 0; i < 25; ++i) {
    const double omega = rng.next_uniform() * 10.0 - 5.0;
    const ComplexMatrix g = gramian_at(scenario.field, {omega});
    CHECK((g - oracle).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("hermitian spectra, pseudoinverses, and projectors agree with hand values") {
  const ComplexMatrix g = example1_oracle();
  const HermitianSpectrum spec = hermitian_eig(g);
  REQUIRE(spec.eigenvalues.size() == 3);
  CHECK(spec.eigenvalues(0) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(spec.eigenvalues(1) == doctest::Approx(81.0).epsilon(1e-10));
  CHECK(spec.eigenvalues(2) == doctest::Approx(81.0).epsilon(1e-10));
  CHECK(spec.numerical_rank == 2);
  CHECK(smallest_nonzero_eigenvalue(g) == doctest::Approx(81.0).epsilon(1e-10));

  // g is 81 times a projector, so its pseudoinverse is g / 81^2 and the
  // image projector is g / 81.
  CHECK(operator_norm(pinv(g) - ComplexMatrix(g / 6561.0)) <= 1e-12);
  CHECK(operator_norm(image_projector(g) - ComplexMatrix(g / 81.0)) <= 1e-12);

  ComplexMatrix row(1, 2);
  row << 1.0, 1.0;
  ComplexMatrix half(2, 2);
  half << 0.5, -0.5, -0.5, 0.5;
  CHECK(operator_norm(kernel_projector(row) - half) <= 1e-12);

  ComplexMatrix rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(hermitian_eig(rect), NotSquareError);
  ComplexMatrix skew(2, 2);
  skew << 0.0, 1.0, -1.0, 0.0;
  CHECK_THROWS_AS(hermitian_eig(skew), NotHermitianError);
  ComplexMatrix nan2(2, 2);
  nan2.setZero();
  nan2(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(require_finite(nan2), NonFiniteEntryError);
  CHECK_THROWS_AS(smallest_nonzero_eigenvalue(ComplexMatrix::Zero(2, 2)), ZeroMatrixError);

  ToleranceConfig bad;
  bad.rank_tol = -1.0;
  CHECK_THROWS_AS(bad.validate(), InvalidToleranceError);
}

TEST_CASE("subspaces intersect and measure angles correctly") {
  ComplexMatrix e12(3, 2);
  e12.setZero();
  e12(0, 0) = 1.0;
  e12(1, 1) = 1.0;
  ComplexMatrix e23(3, 2);
  e23.setZero();
  e23(1, 0) = 1.0;
  e23(2, 1) = 1.0;
  const Subspace u = Subspace::from_image(e12);
  const Subspace v = Subspace::from_image(e23);
  const Subspace meet = intersect(u, v);
  REQUIRE(meet.dimension() == 1);
  CHECK(std::abs(std::abs(meet.basis()(1, 0)) - 1.0) <= 1e-10);

  // Two lines in the plane at angle theta.
  for (double theta : {0.1, 0.35, 0.7, 1.2}) {
    ComplexMatrix a(2, 1), b(2, 1);
    a << 1.0, 0.0;
    b << std::cos(theta), std::sin(theta);
    CHECK(friedrichs_cos(Subspace::from_image(a), Subspace::from_image(b)) ==
          doctest::Approx(std::cos(theta)).epsilon(1e-12));
    CHECK(friedrichs_sin(Subspace::from_image(a), Subspace::from_image(b)) ==
          doctest::Approx(std::sin(theta)).epsilon(1e-12));
  }

  // Containment and trivial subspaces give sine 1 by convention.
  CHECK(friedrichs_sin(u, u) == doctest::Approx(1.0));
  CHECK(friedrichs_sin(Subspace::zero(3), u) == doctest::Approx(1.0));
  CHECK(friedrichs_sin(meet, u) == doctest::Approx(1.0));

  const Subspace comp = u.orthogonal_complement();
  CHECK(comp.dimension() == 1);
  CHECK(operator_norm(comp.projector() + u.projector() - ComplexMatrix::Identity(3, 3)) <= 1e-12);
}

TEST_CASE("entry-sourced fields enforce hermitian PSD structure") {
  auto constant_entry = [](double value) {
    Piece piece;
    piece.box.lo = {-0.5};
    piece.box.hi = {0.5};
    piece.value = TrigPoly::constant(value, 1);
    return EntryPieces{piece};
  };

  // Indefinite at every point: eigenvalues +1 and -1.
  std::vector<std::vector<EntryPieces>> flip(2, std::vector<EntryPieces>(2));
  flip[0][1] = constant_entry(1.0);
  flip[1][0] = constant_entry(1.0);
  const GramianField indefinite = GramianField::from_entries(1, flip);
  CHECK_THROWS_AS(gramian_at(indefinite, {0.1}), NotPsdAtPointError);

  // A missing lower triangle is filled in by conjugate mirroring.
  std::vector<std::vector<EntryPieces>> upper(2, std::vector<EntryPieces>(2));
  upper[0][0] = constant_entry(2.0);
  upper[1][1] = constant_entry(2.0);
  Piece cross;
  cross.box.lo = {-0.5};
  cross.box.hi = {0.5};
  cross.value.terms.push_back({{1}, {0.0, 1.0}});
  upper[0][1] = {cross};
  const GramianField mirrored = GramianField::from_entries(1, upper);
  const ComplexMatrix at = gramian_at(mirrored, {0.2});
  CHECK(std::abs(at(1, 0) - std::conj(at(0, 1))) <= 1e-14);
  const std::complex<double> expected =
      std::complex<double>(0.0, 1.0) * std::polar(1.0, kTau * 0.2);
  CHECK(std::abs(at(0, 1) - expected) <= 1e-12);

  // A non-real diagonal is rejected at construction.
  std::vector<std::vector<EntryPieces>> complex_diag(1, std::vector<EntryPieces>(1));
  complex_diag[0][0] = {cross};
  CHECK_THROWS_AS(GramianField::from_entries(1, complex_diag), BadShapeError);
}

TEST_CASE("conjugated fields evaluate to a G a* and compose") {
  const Scenario scenario = builtin_scenario("example1");
  SplitMix64 rng(7);
  const ComplexMatrix a = random_complex_gaussian(2, 3, rng);
  const ComplexMatrix b = random_complex_gaussian(2, 2, rng);
  const GramianField once = conjugate(scenario.field, a);
  const GramianField twice = conjugate(once, b);
  CHECK(once.conjugation_sourced());
  CHECK(twice.size() == 2);
  for (double omega : {-0.4, 0.0, 0.3}) {
    const ComplexMatrix g = gramian_at(scenario.field, {omega});
    CHECK(operator_norm(gramian_at(once, {omega}) - ComplexMatrix(a * g * a.adjoint())) <= 1e-12);
    CHECK(operator_norm(gramian_at(twice, {omega}) -
                        ComplexMatrix(b * a * g * a.adjoint() * b.adjoint())) <= 1e-12);
  }
  ComplexMatrix wrong(2, 2);
  wrong.setIdentity();
  CHECK_THROWS_AS(conjugate(scenario.field, wrong), BadShapeError);
}

TEST_CASE("sampling grids avoid box breakpoints and enumerate lexicographically") {
  const SamplingGrid grid = SamplingGrid::regular(2, 8);
  CHECK(grid.point_count() == 64);
  CHECK(grid.offsets[0] == doctest::Approx((std::sqrt(2.0) - 1.0) / 8.0));
  const auto first = grid.point(0);
  CHECK(first[0] == doctest::Approx(-0.5 + grid.offsets[0]));
  // Axis 0 is slowest: the second point advances axis 1.
  const auto second = grid.point(1);
  CHECK(second[0] == doctest::Approx(first[0]));
  CHECK(second[1] == doctest::Approx(first[1] + 1.0 / 8.0));
  for (std::size_t i = 0; i < grid.point_count(); ++i) {
    for (double x : grid.point(i)) {
      CHECK(x >= -0.5);
      CHECK(x < 0.5);
    }
  }

  SamplingGrid tiny = SamplingGrid::regular(1, 2);
  tiny.points_per_axis = 1;
  CHECK_THROWS_AS(tiny.validate(), EmptyGridError);
  SamplingGrid skewed = SamplingGrid::regular(1, 4);
  skewed.offsets = {0.5};
  CHECK_THROWS_AS(skewed.validate(), BadShapeError);
}

TEST_CASE("classification hits each verdict") {
  const SamplingGrid line = SamplingGrid::regular(1, 32);
  CHECK(classify(builtin_scenario("example1").field, line).verdict == Verdict::Frame);
  CHECK(classify(builtin_scenario("paley").field, line).verdict == Verdict::Frame);
  CHECK(classify(builtin_scenario("bessel-not-frame").field, SamplingGrid::regular(1, 256))
            .verdict == Verdict::BesselOnly);

  auto diagonal_field = [](std::vector<double> values) {
    std::vector<std::vector<EntryPieces>> entries(values.size(),
                                                  std::vector<EntryPieces>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
      Piece piece;
      piece.box.lo = {-0.5};
      piece.box.hi = {0.5};
      piece.value = TrigPoly::constant(values[i], 1);
      entries[i][i] = {piece};
    }
    return GramianField::from_entries(1, entries);
  };
  CHECK(classify(diagonal_field({1.0, 1.0}), line).verdict == Verdict::OrthonormalBasis);
  CHECK(classify(diagonal_field({2.0, 0.5}), line).verdict == Verdict::RieszBasis);

  const FrameReport besselized = classify(diagonal_field({1.0, 0.0}), line);
  CHECK(besselized.verdict == Verdict::Frame);
  CHECK(besselized.length_hat == 1);

  CHECK(length_of(builtin_scenario("example1").field, line) == 2);
  const auto [alpha, beta] = frame_bounds(builtin_scenario("example1").field, line);
  CHECK(alpha == doctest::Approx(81.0));
  CHECK(beta == doctest::Approx(81.0));
  CHECK_THROWS_AS(frame_bounds(builtin_scenario("bessel-not-frame").field,
                               SamplingGrid::regular(1, 256)),
                  NotAFrameError);
}

TEST_CASE("certificates carry thresholds, witnesses, and reasons") {
  const Scenario scenario = builtin_scenario("paley");
  const FieldCache cache(scenario.field, SamplingGrid::regular(1, 128));

  ComplexMatrix merge(1, 2);
  merge << 1.0, 1.0;
  const ReductionCertificate cert = certify_both(cache, merge);
  CHECK(cert.method == "both");
  CHECK(cert.accept);
  CHECK(cert.delta_min == doctest::Approx(4.0 / 128.0));
  CHECK(cert.delta_hat.value() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(cert.gamma_hat.value() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(cert.geometric_accept.value());
  CHECK(cert.analytic_accept.value());
  REQUIRE(cert.derived_bounds.has_value());
  const auto& bounds = *cert.derived_bounds;
  CHECK(bounds[0] <= bounds[1] + 1e-12);
  CHECK(bounds[1] <= bounds[2] + 1e-12);

  ComplexMatrix drop(1, 2);
  drop << 1.0, 0.0;
  const ReductionCertificate rejected = certify_both(cache, drop);
  CHECK_FALSE(rejected.accept);
  CHECK_FALSE(rejected.in_r);
  REQUIRE(rejected.in_r_witness.has_value());
  CHECK((*rejected.in_r_witness)[0] < 0.0);
  CHECK(rejected.reject_reason.has_value());

  // Too many rows for the analytic route: rejected with a reason, no throw.
  ComplexMatrix tall(2, 2);
  tall.setIdentity();
  const ReductionCertificate shaped = certify_analytic(cache, tall);
  CHECK_FALSE(shaped.accept);
  CHECK(shaped.reject_reason.has_value());

  CertifyOptions bad;
  bad.delta_min = 2.0;
  CHECK_THROWS_AS(certify_geometric(cache, merge, bad), InvalidToleranceError);

  CHECK_THROWS_AS(
      certify_both(builtin_scenario("bessel-not-frame").field, merge.leftCols(1),
                   SamplingGrid::regular(1, 64)),
      NotAFrameError);
}

TEST_CASE("rank-preservation helpers agree with hand computations") {
  const Scenario scenario = builtin_scenario("paley");
  const FieldCache cache(scenario.field, SamplingGrid::regular(1, 64));
  ComplexMatrix merge(1, 2);
  merge << 1.0, 1.0;
  CHECK(preserves_generators(cache, merge));
  const std::vector<double> sines = angle_profile(cache, merge);
  REQUIRE(sines.size() == 64);
  for (double s : sines) CHECK(s == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

  ComplexMatrix drop(1, 2);
  drop << 1.0, 0.0;
  CHECK_FALSE(preserves_generators(cache, drop));
  // No constant matrix can match this field's kernel, which flips between
  // the two coordinate axes across the cell.
  ComplexMatrix square(2, 2);
  square.setIdentity();
  CHECK_FALSE(kernel_shortcut(cache, square));

  // The three-generator field has one fixed kernel line, so a matrix built
  // to annihilate it short-circuits the angle work.
  const FieldCache line_cache(builtin_scenario("example1").field, SamplingGrid::regular(1, 16));
  ComplexMatrix aligned(2, 3);
  aligned << -8.0, 1.0, 0.0, 4.0, 0.0, 1.0;
  CHECK(kernel_shortcut(line_cache, aligned));
  CHECK_FALSE(kernel_shortcut(line_cache, ComplexMatrix(ComplexMatrix::Identity(3, 3))));

  ComplexMatrix g2(2, 2);
  g2 << 1.0, 0.0, 0.0, 0.0;
  ComplexMatrix kill(1, 2);
  kill << 0.0, 1.0;
  CHECK_THROWS_AS(sandwich_bounds(kill, g2), RankDropError);
  ComplexMatrix keep(1, 2);
  keep << 1.0, 0.0;
  const auto bounds = sandwich_bounds(keep, g2);
  CHECK(bounds[1] == doctest::Approx(1.0));
}

TEST_CASE("square conjugation decisions follow invertibility and unitarity") {
  auto diagonal_field = [](std::vector<double> values) {
    std::vector<std::vector<EntryPieces>> entries(values.size(),
                                                  std::vector<EntryPieces>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
      Piece piece;
      piece.box.lo = {-0.5};
      piece.box.hi = {0.5};
      piece.value = TrigPoly::constant(values[i], 1);
      entries[i][i] = {piece};
    }
    return GramianField::from_entries(1, entries);
  };
  const FieldCache onb(diagonal_field({1.0, 1.0}), SamplingGrid::regular(1, 16));

  ComplexMatrix u(2, 2);
  const double c = std::cos(0.3), s = std::sin(0.3);
  u << c, -s, s, c;
  const SquareCaseReport rotated = square_case(onb, u);
  CHECK(rotated.unitary);
  CHECK(rotated.preserved);
  CHECK(rotated.conjugated_verdict == Verdict::OrthonormalBasis);

  ComplexMatrix stretch(2, 2);
  stretch << 2.0, 0.0, 0.0, 1.0;
  const SquareCaseReport stretched = square_case(onb, stretch);
  CHECK(stretched.invertible);
  CHECK_FALSE(stretched.unitary);
  CHECK_FALSE(stretched.preserved);
  CHECK(stretched.conjugated_verdict == Verdict::RieszBasis);

  ComplexMatrix singular(2, 2);
  singular << 1.0, 1.0, 1.0, 1.0;
  const SquareCaseReport collapsed = square_case(onb, singular);
  CHECK_FALSE(collapsed.invertible);
  CHECK_FALSE(collapsed.preserved);
  CHECK(collapsed.conjugated_verdict == Verdict::Frame);

  ComplexMatrix rect(1, 2);
  rect << 1.0, 0.0;
  CHECK_THROWS_AS(square_case(onb, rect), NotSquareError);
}

TEST_CASE("scenario files round-trip through JSON") {
  for (const auto& name : builtin_scenario_names()) {
    const Scenario scenario = builtin_scenario(name);
    const std::string path = std::string("roundtrip-") + name + ".json";
    save_scenario(scenario, path);
    const Scenario loaded = load_scenario(path);
    CHECK(loaded.name == scenario.name);
    CHECK(loaded.field.dimension() == scenario.field.dimension());
    CHECK(loaded.field.size() == scenario.field.size());
    SplitMix64 rng(99);
    for (int i = 0; i < 100; ++i) {
      std::vector<double> omega(static_cast<std::size_t>(scenario.field.dimension()));
      for (auto& x : omega) x = rng.next_uniform() * 4.0 - 2.0;
      const ComplexMatrix a = gramian_at(scenario.field, omega);
      const ComplexMatrix b = gramian_at(loaded.field, omega);
      CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-12);
    }
    std::remove(path.c_str());
  }

  CHECK_THROWS_AS(builtin_scenario("no-such-thing"), UnknownScenarioError);
  CHECK_THROWS_AS(load_scenario("does-not-exist.json"), ParseError);

  {
    std::ofstream broken("broken-scenario.json");
    broken << "{ not json";
  }
  CHECK_THROWS_AS(load_scenario("broken-scenario.json"), ParseError);
  std::remove("broken-scenario.json");

  // Conjugation-sourced fields have no file form.
  Scenario derived = builtin_scenario("paley");
  ComplexMatrix merge(1, 2);
  merge << 1.0, 1.0;
  derived.field = conjugate(derived.field, merge);
  CHECK_THROWS_AS(scenario_to_json(derived), BadShapeError);
}

TEST_CASE("reports serialize with stable keys") {
  const Scenario scenario = builtin_scenario("paley");
  const FieldCache cache(scenario.field, SamplingGrid::regular(1, 16));
  const auto report = frame_report_json(cache.report(), scenario.name);
  CHECK(report.contains("scenario"));
  CHECK(report.contains("verdict"));
  CHECK(report.contains("alpha"));
  CHECK(report.contains("beta"));
  CHECK(report.contains("length"));
  CHECK(report.contains("grid"));
  CHECK(report["verdict"] == "Frame");
  CHECK(report["length"] == 1);

  ComplexMatrix merge(1, 2);
  merge << 1.0, 1.0;
  const auto cert = certificate_json(certify_both(cache, merge), scenario.name);
  CHECK(cert["verdict"] == "accept");
  CHECK(cert["inR"] == true);
  CHECK(cert["method"] == "both");
  CHECK(cert.contains("deltaHat"));
  CHECK(cert.contains("gammaHat"));
  CHECK(cert["inRWitness"].is_null());

  const auto scan = scan_json(scan_generic(cache, 1, 3, 5), scenario.name);
  CHECK(scan["trials"] == 3);
  CHECK(scan["seed"] == 5);
  CHECK(scan.contains("inRCount"));
  CHECK(scan.contains("framePreservingCount"));

  const std::string rendered = render_json(report);
  CHECK(rendered.back() == '\n');
  CHECK(rendered.find("\"scenario\"") != std::string::npos);

  std::ostringstream csv;
  const std::vector<double> sines = angle_profile(cache, merge);
  write_profile_csv(csv, cache, &sines);
  const std::string text = csv.str();
  CHECK(text.rfind("omega_1,eig_1,eig_2,rank,sine\n", 0) == 0);
  std::size_t lines = 0;
  for (char ch : text) {
    if (ch == '\n') ++lines;
  }
  CHECK(lines == 17);  // header + one row per grid point
}

TEST_CASE("random draws are deterministic and stream-splittable") {
  SplitMix64 a(123);
  SplitMix64 b(123);
  for (int i = 0; i < 10; ++i) CHECK(a.next_u64() == b.next_u64());
  CHECK(SplitMix64::derive(1, 2) != SplitMix64::derive(1, 3));
  CHECK(SplitMix64::derive(1, 2) != SplitMix64::derive(2, 2));
  SplitMix64 c(9);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.next_uniform();
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
  }
  const ComplexMatrix m = random_complex_gaussian(3, 2, c);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 2);
}

TEST_CASE("grid sweeps are independent of the worker count") {
  const Scenario scenario = builtin_scenario("example2");
  const SamplingGrid grid = SamplingGrid::regular(2, 16);

  const char* previous = std::getenv("FRAMEFORGE_THREADS");
  const std::string saved = previous ? previous : "";

  setenv("FRAMEFORGE_THREADS", "1", 1);
  const auto serial = sample(scenario.field, grid);
  setenv("FRAMEFORGE_THREADS", "7", 1);
  const auto threaded = sample(scenario.field, grid);

  if (previous) {
    setenv("FRAMEFORGE_THREADS", saved.c_str(), 1);
  } else {
    unsetenv("FRAMEFORGE_THREADS");
  }

  REQUIRE(serial.size() == threaded.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].first == threaded[i].first);
    CHECK((serial[i].second - threaded[i].second).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("verification registry exposes ten named checks") {
  const auto& names = verification_check_names();
  CHECK(names.size() == 10);
  CHECK(names.front() == "example1-gramian-exactness");
  CHECK(names.back() == "determinism");
  CHECK_THROWS_AS(run_verification_check("no-such-check"), UnknownScenarioError);
}
