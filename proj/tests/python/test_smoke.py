import json
import math

import numpy as np
import pytest

import frameforge as ff


def test_builtin_scenarios_load():
    names = ff.builtin_scenario_names()
    assert names == ["example1", "example2", "paley", "bessel-not-frame"]
    for name in names:
        scenario = ff.builtin_scenario(name)
        assert scenario.name == name
        assert scenario.field.size >= 1


def test_gramian_matches_closed_form():
    field = ff.builtin_scenario("example1").field
    g = ff.gramian_at(field, [0.3])
    expected = np.array([[80, -8, 4], [-8, 17, 32], [4, 32, 65]], dtype=complex)
    assert np.max(np.abs(g - expected)) <= 1e-12
    assert np.max(np.abs(g @ g - 81 * g)) <= 1e-9


def test_classification_and_bounds():
    field = ff.builtin_scenario("example1").field
    grid = ff.SamplingGrid.regular(1, 64)
    report = ff.classify(field, grid)
    assert report.verdict == ff.Verdict.Frame
    assert report.alpha_hat == pytest.approx(81.0, abs=1e-9)
    assert report.beta_hat == pytest.approx(81.0, abs=1e-9)
    assert report.length_hat == 2
    assert ff.length_of(field, grid) == 2
    alpha, beta = ff.frame_bounds(field, grid)
    assert alpha == pytest.approx(81.0, abs=1e-9)
    assert beta == pytest.approx(81.0, abs=1e-9)


def test_certificates_accept_and_reject():
    field = ff.builtin_scenario("paley").field
    cache = ff.FieldCache(field, ff.SamplingGrid.regular(1, 128))
    cert = ff.certify_both(cache, np.array([[1.0, 1.0]], dtype=complex))
    assert cert.accept
    assert cert.delta_hat == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-9)
    assert cert.geometric_accept and cert.analytic_accept

    rejected = ff.certify_both(cache, np.array([[1.0, 0.0]], dtype=complex))
    assert not rejected.accept
    assert not rejected.in_r
    assert rejected.in_r_witness[0] < 0.0
    assert rejected.reject_reason


def test_conjugation_matches_numpy():
    field = ff.builtin_scenario("example1").field
    a = np.array([[1.0, 2.0, 0.5], [0.0, 1.0, -1.0]], dtype=complex)
    derived = ff.conjugate(field, a)
    g = ff.gramian_at(field, [0.1])
    expected = a @ g @ a.conj().T
    assert np.max(np.abs(ff.gramian_at(derived, [0.1]) - expected)) <= 1e-12


def test_non_frame_scenario_refuses_certification():
    scenario = ff.builtin_scenario("bessel-not-frame")
    grid = ff.SamplingGrid.regular(1, 256)
    report = ff.classify(scenario.field, grid)
    assert report.verdict == ff.Verdict.BesselOnly
    with pytest.raises(ff.FrameforgeError):
        ff.certify_both(
            ff.FieldCache(scenario.field, grid), np.array([[1.0]], dtype=complex)
        )


def test_scan_counts_are_deterministic():
    field = ff.builtin_scenario("paley").field
    cache = ff.FieldCache(field, ff.SamplingGrid.regular(1, 32))
    first = ff.scan_generic(cache, 1, 50, 9)
    second = ff.scan_generic(cache, 1, 50, 9)
    assert first.in_r_count == second.in_r_count
    assert first.frame_preserving_count == second.frame_preserving_count
    assert first.trials == 50


def test_linalg_helpers():
    g = np.array([[80, -8, 4], [-8, 17, 32], [4, 32, 65]], dtype=complex)
    spec = ff.hermitian_eig(g)
    assert spec.numerical_rank == 2
    assert spec.eigenvalues[2] == pytest.approx(81.0, abs=1e-9)
    assert np.max(np.abs(ff.pinv(g) - g / 6561.0)) <= 1e-12
    u = ff.Subspace.from_image(np.array([[1.0], [0.0]], dtype=complex))
    v = ff.Subspace.from_image(np.array([[1.0], [1.0]], dtype=complex))
    assert ff.friedrichs_cos(u, v) == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-12)


def test_scenario_roundtrip(tmp_path):
    scenario = ff.builtin_scenario("example2")
    path = tmp_path / "scenario.json"
    ff.save_scenario(scenario, str(path))
    loaded = ff.load_scenario(str(path))
    assert loaded.field.dimension == 2
    for omega in ([0.1, 0.2], [-0.3, 0.45], [0.0, 0.0]):
        a = ff.gramian_at(scenario.field, list(omega))
        b = ff.gramian_at(loaded.field, list(omega))
        assert np.max(np.abs(a - b)) <= 1e-12

    parsed = json.loads(path.read_text())
    assert parsed["dimension"] == 2
    rebuilt = ff.scenario_from_json(path.read_text())
    assert rebuilt.field.size == scenario.field.size


def test_reports_render_as_json():
    scenario = ff.builtin_scenario("example1")
    cache = ff.FieldCache(scenario.field, ff.SamplingGrid.regular(1, 32))
    text = ff.frame_report_json(cache.report, scenario.name)
    payload = json.loads(text)
    assert payload["verdict"] == "Frame"
    assert payload["scenario"] == "example1"
    csv_text = ff.profile_csv(cache)
    header = csv_text.splitlines()[0]
    assert header == "omega_1,eig_1,eig_2,eig_3,rank"
    assert len(csv_text.splitlines()) == 33
