#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include <json.hpp>

#include "frameforge/reports.hpp"
#include "frameforge/scenario.hpp"
#include "frameforge/verification.hpp"

namespace py = pybind11;
using namespace frameforge;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gramian field analysis for systems of integer translates";

  py::register_exception<Error>(m, "FrameforgeError", PyExc_RuntimeError);

  py::class_<ToleranceConfig>(m, "ToleranceConfig")
      .def(py::init<>())
      .def_readwrite("rank_tol", &ToleranceConfig::rank_tol)
      .def_readwrite("reconstruction_tol", &ToleranceConfig::reconstruction_tol)
      .def_readwrite("positivity_tol", &ToleranceConfig::positivity_tol);

  py::enum_<Verdict>(m, "Verdict")
      .value("NotBessel", Verdict::NotBessel)
      .value("BesselOnly", Verdict::BesselOnly)
      .value("Frame", Verdict::Frame)
      .value("RieszBasis", Verdict::RieszBasis)
      .value("OrthonormalBasis", Verdict::OrthonormalBasis);
  m.def("verdict_name", [](Verdict v) { return to_string(v); });
  m.def("is_frame_verdict", &is_frame_verdict);

  py::class_<Witness>(m, "Witness")
      .def_readonly("omega", &Witness::omega)
      .def_readonly("reason", &Witness::reason);

  py::class_<FrameReport>(m, "FrameReport")
      .def_readonly("verdict", &FrameReport::verdict)
      .def_readonly("alpha_hat", &FrameReport::alpha_hat)
      .def_readonly("beta_hat", &FrameReport::beta_hat)
      .def_readonly("length_hat", &FrameReport::length_hat)
      .def_readonly("grid_resolution", &FrameReport::grid_resolution)
      .def_readonly("frame_threshold", &FrameReport::frame_threshold)
      .def_readonly("witnesses", &FrameReport::witnesses)
      .def("__repr__", [](const FrameReport& r) {
        std::ostringstream out;
        out << "<FrameReport " << to_string(r.verdict) << " alpha=" << r.alpha_hat
            << " beta=" << r.beta_hat << " length=" << r.length_hat << ">";
        return out.str();
      });

  py::class_<ClassifyOptions>(m, "ClassifyOptions")
      .def(py::init<>())
      .def_readwrite("frame_rel_tol", &ClassifyOptions::frame_rel_tol)
      .def_readwrite("identity_tol", &ClassifyOptions::identity_tol)
      .def_readwrite("tol", &ClassifyOptions::tol);

  py::class_<CertifyOptions>(m, "CertifyOptions")
      .def(py::init<>())
      .def_readwrite("delta_min", &CertifyOptions::delta_min)
      .def_readwrite("gamma_margin", &CertifyOptions::gamma_margin)
      .def_readwrite("classify", &CertifyOptions::classify);

  py::class_<SamplingGrid>(m, "SamplingGrid")
      .def_static("regular", &SamplingGrid::regular, py::arg("dimension"),
                  py::arg("points_per_axis"))
      .def_readonly("dimension", &SamplingGrid::dimension)
      .def_readonly("points_per_axis", &SamplingGrid::points_per_axis)
      .def_readonly("offsets", &SamplingGrid::offsets)
      .def("point_count", &SamplingGrid::point_count)
      .def("point", &SamplingGrid::point, py::arg("flat_index"));

  py::class_<GramianField>(m, "GramianField")
      .def_property_readonly("dimension", &GramianField::dimension)
      .def_property_readonly("size", &GramianField::size)
      .def_property_readonly("generator_sourced", &GramianField::generator_sourced)
      .def_property_readonly("entry_sourced", &GramianField::entry_sourced)
      .def_property_readonly("conjugation_sourced", &GramianField::conjugation_sourced);

  m.def(
      "gramian_at",
      [](const GramianField& field, const std::vector<double>& omega,
         const ToleranceConfig& tol) { return gramian_at(field, omega, tol); },
      py::arg("field"), py::arg("omega"), py::arg("tol") = ToleranceConfig{});
  m.def("conjugate", &conjugate, py::arg("field"), py::arg("a"));
  m.def("reduce_to_cell", &reduce_to_cell, py::arg("omega"));

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("name", &Scenario::name)
      .def_readonly("notes", &Scenario::notes)
      .def_readonly("field", &Scenario::field);

  m.def("builtin_scenario_names", [] { return builtin_scenario_names(); });
  m.def("builtin_scenario", &builtin_scenario, py::arg("name"));
  m.def("resolve_scenario", &resolve_scenario, py::arg("name_or_path"));
  m.def("load_scenario", &load_scenario, py::arg("path"));
  m.def("save_scenario", &save_scenario, py::arg("scenario"), py::arg("path"));
  m.def(
      "scenario_from_json",
      [](const std::string& text) { return scenario_from_json(nlohmann::json::parse(text)); },
      py::arg("text"), "Build a scenario from a JSON string in the scenario file format");
  m.def(
      "scenario_to_json",
      [](const Scenario& scenario) { return render_json(scenario_to_json(scenario)); },
      py::arg("scenario"));

  m.def(
      "classify",
      [](const GramianField& field, const SamplingGrid& grid, const ClassifyOptions& options) {
        return classify(field, grid, options);
      },
      py::arg("field"), py::arg("grid"), py::arg("options") = ClassifyOptions{});
  m.def(
      "length_of",
      [](const GramianField& field, const SamplingGrid& grid, const ToleranceConfig& tol) {
        return length_of(field, grid, tol);
      },
      py::arg("field"), py::arg("grid"), py::arg("tol") = ToleranceConfig{});
  m.def(
      "frame_bounds",
      [](const GramianField& field, const SamplingGrid& grid, const ClassifyOptions& options) {
        return frame_bounds(field, grid, options);
      },
      py::arg("field"), py::arg("grid"), py::arg("options") = ClassifyOptions{});

  py::class_<FieldCache>(m, "FieldCache")
      .def(py::init<const GramianField&, const SamplingGrid&, const ClassifyOptions&>(),
           py::arg("field"), py::arg("grid"), py::arg("options") = ClassifyOptions{})
      .def_property_readonly("report", &FieldCache::report)
      .def_property_readonly("grid", &FieldCache::grid)
      .def("point_count", &FieldCache::point_count)
      .def("gramian", &FieldCache::gramian, py::arg("i"))
      .def("eigenvalues", &FieldCache::eigenvalues, py::arg("i"))
      .def("rank", &FieldCache::rank, py::arg("i"))
      .def("image_basis", &FieldCache::image_basis, py::arg("i"))
      .def("zero_cutoff", &FieldCache::zero_cutoff);

  py::class_<ReductionCertificate>(m, "ReductionCertificate")
      .def_readonly("method", &ReductionCertificate::method)
      .def_readonly("accept", &ReductionCertificate::accept)
      .def_readonly("in_r", &ReductionCertificate::in_r)
      .def_readonly("in_r_witness", &ReductionCertificate::in_r_witness)
      .def_readonly("delta_hat", &ReductionCertificate::delta_hat)
      .def_readonly("argmin_omega", &ReductionCertificate::argmin_omega)
      .def_readonly("geometric_accept", &ReductionCertificate::geometric_accept)
      .def_readonly("gamma_hat", &ReductionCertificate::gamma_hat)
      .def_readonly("argmax_omega", &ReductionCertificate::argmax_omega)
      .def_readonly("analytic_accept", &ReductionCertificate::analytic_accept)
      .def_readonly("derived_bounds", &ReductionCertificate::derived_bounds)
      .def_readonly("grid_resolution", &ReductionCertificate::grid_resolution)
      .def_readonly("delta_min", &ReductionCertificate::delta_min)
      .def_readonly("gamma_margin", &ReductionCertificate::gamma_margin)
      .def_readonly("reject_reason", &ReductionCertificate::reject_reason)
      .def("__repr__", [](const ReductionCertificate& c) {
        std::ostringstream out;
        out << "<ReductionCertificate " << c.method << " "
            << (c.accept ? "accept" : "reject") << ">";
        return out.str();
      });

  m.def(
      "certify_geometric",
      [](const FieldCache& cache, const ComplexMatrix& a, const CertifyOptions& options) {
        return certify_geometric(cache, a, options);
      },
      py::arg("cache"), py::arg("a"), py::arg("options") = CertifyOptions{});
  m.def(
      "certify_analytic",
      [](const FieldCache& cache, const ComplexMatrix& a, const CertifyOptions& options) {
        return certify_analytic(cache, a, options);
      },
      py::arg("cache"), py::arg("a"), py::arg("options") = CertifyOptions{});
  m.def(
      "certify_both",
      [](const FieldCache& cache, const ComplexMatrix& a, const CertifyOptions& options) {
        return certify_both(cache, a, options);
      },
      py::arg("cache"), py::arg("a"), py::arg("options") = CertifyOptions{});

  m.def(
      "preserves_generators",
      [](const FieldCache& cache, const ComplexMatrix& a) {
        return preserves_generators(cache, a);
      },
      py::arg("cache"), py::arg("a"));
  m.def(
      "angle_profile",
      [](const FieldCache& cache, const ComplexMatrix& a) { return angle_profile(cache, a); },
      py::arg("cache"), py::arg("a"));
  m.def("kernel_shortcut", &kernel_shortcut, py::arg("cache"), py::arg("a"),
        py::arg("tol") = 1e-8);
  m.def("sandwich_bounds", &sandwich_bounds, py::arg("a"), py::arg("g"),
        py::arg("tol") = ToleranceConfig{});

  py::class_<SquareCaseReport>(m, "SquareCaseReport")
      .def_readonly("base_verdict", &SquareCaseReport::base_verdict)
      .def_readonly("conjugated_verdict", &SquareCaseReport::conjugated_verdict)
      .def_readonly("preserved", &SquareCaseReport::preserved)
      .def_readonly("invertible", &SquareCaseReport::invertible)
      .def_readonly("unitary", &SquareCaseReport::unitary)
      .def_readonly("smallest_singular_value", &SquareCaseReport::smallest_singular_value)
      .def_readonly("detail", &SquareCaseReport::detail);

  m.def(
      "square_case",
      [](const FieldCache& cache, const ComplexMatrix& a) { return square_case(cache, a); },
      py::arg("cache"), py::arg("a"));

  py::class_<ScanResult>(m, "ScanResult")
      .def_readonly("trials", &ScanResult::trials)
      .def_readonly("in_r_count", &ScanResult::in_r_count)
      .def_readonly("frame_preserving_count", &ScanResult::frame_preserving_count)
      .def_readonly("seed", &ScanResult::seed)
      .def_readonly("rows", &ScanResult::rows)
      .def_readonly("grid_resolution", &ScanResult::grid_resolution);

  m.def(
      "scan_generic",
      [](const FieldCache& cache, Eigen::Index rows, int trials, std::uint64_t seed,
         const CertifyOptions& options) {
        return scan_generic(cache, rows, trials, seed, options);
      },
      py::arg("cache"), py::arg("rows"), py::arg("trials"), py::arg("seed"),
      py::arg("options") = CertifyOptions{});

  py::class_<HermitianSpectrum>(m, "HermitianSpectrum")
      .def_readonly("eigenvalues", &HermitianSpectrum::eigenvalues)
      .def_readonly("eigenvectors", &HermitianSpectrum::eigenvectors)
      .def_readonly("numerical_rank", &HermitianSpectrum::numerical_rank);

  m.def("operator_norm", &operator_norm, py::arg("m"));
  m.def("numerical_rank", &numerical_rank, py::arg("m"), py::arg("tol") = ToleranceConfig{});
  m.def("hermitian_eig", &hermitian_eig, py::arg("m"), py::arg("tol") = ToleranceConfig{});
  m.def("pinv", &pinv, py::arg("m"), py::arg("tol") = ToleranceConfig{});
  m.def("image_projector", &image_projector, py::arg("m"), py::arg("tol") = ToleranceConfig{});
  m.def("kernel_projector", &kernel_projector, py::arg("m"), py::arg("tol") = ToleranceConfig{});

  py::class_<Subspace>(m, "Subspace")
      .def_static("zero", &Subspace::zero, py::arg("ambient_dimension"))
      .def_static("from_image", &Subspace::from_image, py::arg("m"),
                  py::arg("tol") = ToleranceConfig{})
      .def_static("from_kernel", &Subspace::from_kernel, py::arg("m"),
                  py::arg("tol") = ToleranceConfig{})
      .def_property_readonly("ambient_dimension", &Subspace::ambient_dimension)
      .def_property_readonly("dimension", &Subspace::dimension)
      .def_property_readonly("basis", &Subspace::basis)
      .def("projector", &Subspace::projector)
      .def("orthogonal_complement", &Subspace::orthogonal_complement);

  m.def("intersect", &intersect, py::arg("u"), py::arg("v"));
  m.def("friedrichs_cos", &friedrichs_cos, py::arg("u"), py::arg("v"));
  m.def("friedrichs_sin", &friedrichs_sin, py::arg("u"), py::arg("v"));

  m.def(
      "frame_report_json",
      [](const FrameReport& report, const std::string& scenario) {
        return render_json(frame_report_json(report, scenario));
      },
      py::arg("report"), py::arg("scenario"));
  m.def(
      "certificate_json",
      [](const ReductionCertificate& certificate, const std::string& scenario) {
        return render_json(certificate_json(certificate, scenario));
      },
      py::arg("certificate"), py::arg("scenario"));
  m.def(
      "scan_json",
      [](const ScanResult& result, const std::string& scenario) {
        return render_json(scan_json(result, scenario));
      },
      py::arg("result"), py::arg("scenario"));
  m.def(
      "profile_csv",
      [](const FieldCache& cache, const std::optional<std::vector<double>>& sines) {
        std::ostringstream out;
        write_profile_csv(out, cache, sines ? &*sines : nullptr);
        return out.str();
      },
      py::arg("cache"), py::arg("sines") = std::nullopt);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("passed", &CheckResult::passed)
      .def_readonly("detail", &CheckResult::detail);

  m.def("verification_check_names", [] { return verification_check_names(); });
  m.def("run_verification_check", &run_verification_check, py::arg("name"));
  m.def("run_verification_checks", &run_verification_checks, py::arg("selector") = "all");
}
