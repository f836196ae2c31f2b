import pytest

from quasicrystal import crystal, quasi_arrays, verify
from quasicrystal.errors import ParameterError
from quasicrystal.graphs import build_component, build_shape_component
from quasicrystal.verify import (
    CHECKS,
    CheckResult,
    VerificationReport,
    hypo_components,
    phi_violations,
    psi_violations,
    run_verify,
    symmetry_map,
    symmetry_violations,
)


def test_registry_names_unique():
    names = [c[0] for c in CHECKS]
    assert len(names) == len(set(names)) == 36


def test_tiny_bounds_pass():
    report = run_verify(1, 2)
    assert report.passed
    assert report.format().splitlines()[-1] == "all checks passed"


def test_default_bounds_pass():
    report = run_verify(5, 4)
    assert report.passed, report.format()
    assert len(report.checks) == len(CHECKS)


@pytest.mark.parametrize("w, n", [(0, 3), (9, 3), (3, 0), (3, 7)])
def test_bounds_rejected(w, n):
    with pytest.raises(ParameterError):
        run_verify(w, n)


def test_report_format_names_counterexample():
    report = VerificationReport([CheckResult("demo", {"weight": 2}, False, (1, 2), 0.0)])
    assert not report.passed
    lines = report.format().splitlines()
    assert lines[0] == "FAIL demo [weight=2] 0.000s counterexample: (1, 2)"
    assert lines[-1] == "1 check(s) failed"


def test_wrong_quasi_operator_is_caught(monkeypatch):
    # the plain Kashiwara operator ignores the inversion condition
    monkeypatch.setattr(crystal, "quasi_kashiwara_f", crystal.kashiwara_f)
    report = run_verify(4, 3)
    failed = {c.name for c in report.failures()}
    assert {"diagonal-vs-quasi-kashiwara", "quasi-array-isomorphism", "operators-mutually-inverse"} <= failed
    assert "syt-hook-length" not in failed


def test_wrong_diagonal_operator_is_caught(monkeypatch):
    real = quasi_arrays.td

    def shifted(q, k):
        return real(q, k + 1) if k > 1 else real(q, k)

    monkeypatch.setattr(quasi_arrays, "td", shifted)
    failed = {c.name for c in run_verify(4, 3).failures()}
    assert "diagonal-operators-inverse" in failed


def test_phi_and_psi_clean():
    for sigma in ((3,), (1, 2), (2, 1, 1)):
        assert list(phi_violations(sigma, 3)) == []
    assert list(psi_violations((3,), (2, 1), 3)) == []
    assert list(psi_violations((1, 1, 2), (4,), 4)) == []


def test_symmetry_swaps_extremes():
    g = build_component((2, 1, 1), "hypo", 3)
    phi = symmetry_map(g)
    assert phi[(2, 1, 1)] == (3, 2, 2)
    assert sorted(phi.values()) == sorted(g.vertices)
    assert list(symmetry_violations(g)) == []
    assert list(symmetry_violations(build_shape_component((2, 1), "hypo", 4))) == []


def test_hypo_components_partition_words():
    seen = []
    for g in hypo_components(3, 3):
        seen.extend(g.vertices)
    assert len(seen) == len(set(seen)) == 1 + 3 + 9 + 27
