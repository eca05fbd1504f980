"""Smoke tests for the Python bindings and the command-line tool.

Run under ctest with PYTHONPATH pointing at the staged build-tree package and
CRYSTAL1D_CLI / CRYSTAL1D_POTENTIALS naming the CLI binary and the bundled
potential files.  The CLI tests are skipped when those variables are absent.
"""

import json
import math
import os
import subprocess

import pytest

import crystal1d as c1

CLI = os.environ.get("CRYSTAL1D_CLI")
POTENTIALS = os.environ.get("CRYSTAL1D_POTENTIALS")

needs_cli = pytest.mark.skipif(
    not (CLI and POTENTIALS), reason="CRYSTAL1D_CLI / CRYSTAL1D_POTENTIALS not set"
)


def run_cli(*args, **kwargs):
    return subprocess.run(
        [CLI, *args], capture_output=True, text=True, timeout=240, **kwargs
    )


def abs_potential_path():
    return os.path.join(POTENTIALS, "abs.json")


# ---------------------------------------------------------------------------
# Module surface


def test_module_exports():
    assert c1.__version__
    for name in (
        "Potential",
        "IntervalUnion",
        "minimize_translation",
        "oracle_minimize",
        "build_monotone_map",
        "rearrangement_check",
        "check_admissible",
        "verify_theorem",
    ):
        assert hasattr(c1, name)


def test_potential_eval_and_integrals():
    p = c1.make_power(2)
    assert p(0.5) == pytest.approx(0.25)
    assert p.eval(-2.0) == pytest.approx(4.0)
    assert p.integrate(0.0, 1.0) == pytest.approx(1.0 / 3.0, abs=1e-12)
    assert p.antiderivative(0.0) == 0.0
    assert p.origin_value() == 0.0

    scaled = c1.make_abs(2.0)
    assert scaled(-1.5) == pytest.approx(3.0)


def test_interval_union_operations():
    u = c1.IntervalUnion([(-1.0, 0.5), (0.5, 1.0), (2.0, 3.0)])
    assert u.intervals() == [(-1.0, 1.0), (2.0, 3.0)]
    assert len(u) == 2
    assert u.measure() == pytest.approx(3.0)
    assert u.boundary_count() == 4
    assert u.translated(2.0) == c1.IntervalUnion([(1.0, 3.0), (4.0, 5.0)])
    assert u.reflected() == c1.IntervalUnion([(-3.0, -2.0), (-1.0, 1.0)])
    negative, positive = u.split_signed()
    assert negative.measure() + positive.measure() == pytest.approx(u.measure())


def test_minimize_symmetric_potential():
    r = c1.minimize_translation(c1.make_abs(), 1.0)
    assert r.representative_alpha == pytest.approx(-0.5, abs=1e-9)
    assert r.energy.total == pytest.approx(2.25, abs=1e-9)
    assert r.energy.surface == 2.0
    assert r.stationarity_residual <= 1e-6
    assert r.origin_in_closure
    assert r.minimizer.measure() == pytest.approx(1.0, abs=1e-12)
    assert r.alpha_lo <= r.representative_alpha <= r.alpha_hi
    assert c1.verify_origin_membership(r, c1.make_abs())


def test_minimize_rejects_bad_inputs():
    with pytest.raises(c1.NotAdmissibleError):
        bad = c1.potential_from_json(
            '{"pieces": [{"domain": [null, null], "kind": "polynomial",'
            ' "coefficients": [0, 0, -1]}]}'
        )
        c1.minimize_translation(bad, 1.0)
    with pytest.raises(ValueError):
        c1.minimize_translation(c1.make_abs(), -1.0)


def test_potential_from_json_errors():
    with pytest.raises(c1.SpecParseError):
        c1.potential_from_json("{not json")
    with pytest.raises(c1.SpecParseError):
        c1.potential_from_json('{"pieces": []}')


def test_admissibility_classification():
    report = c1.check_admissible(c1.make_abs(), 4.0, 1001)
    assert report.is_admissible
    assert report.violations == []

    bad = c1.potential_from_json(
        '{"pieces": [{"domain": [null, null], "kind": "polynomial",'
        ' "coefficients": [0, 1]}]}'
    )
    report = c1.check_admissible(bad, 4.0, 1001)
    assert not report.is_admissible
    assert any(v.kind == c1.ViolationKind.NEGATIVE_VALUE for v in report.violations)


def test_transport_plan():
    e_plus = c1.IntervalUnion([(0.0, 0.5), (1.0, 1.5)])
    plan = c1.build_monotone_map(e_plus)
    assert plan.source == c1.IntervalUnion([(1.0, 1.5)])
    assert plan.target == c1.IntervalUnion([(0.5, 1.0)])
    assert len(plan.segments) == 1
    seg = plan.segments[0]
    assert seg.source == (1.0, 1.5)
    assert seg.shift == pytest.approx(-0.5)
    assert seg.apply(1.25) == pytest.approx(0.75)
    assert plan.apply(1.25) == pytest.approx(0.75)
    assert c1.verify_pushforward(plan, 64) <= 1e-10
    assert c1.verify_contraction(plan, 128)


def test_rearrangement_check():
    p = c1.make_abs()
    report = c1.rearrangement_check(p, c1.IntervalUnion([(1.0, 2.0)]))
    assert report.holds
    assert report.positive.lhs == pytest.approx(1.5, abs=1e-12)
    assert report.positive.rhs == pytest.approx(0.5, abs=1e-12)


def test_oracle_small_run():
    cfg = c1.OracleConfig(window=1.0, grid_step=0.25, k_max=2, mass=1.0)
    report = c1.oracle_minimize(c1.make_abs(), cfg)
    assert report.best_is_single_interval
    assert report.candidates_evaluated > 0
    assert report.gap <= report.discretization_bound
    assert report.convexification_failures == 0
    assert c1.verify_theorem(c1.make_abs(), cfg)


# ---------------------------------------------------------------------------
# Command-line tool


@needs_cli
def test_cli_validate_accepts_bundled_potential():
    proc = run_cli("validate", "--potential", abs_potential_path())
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    assert doc["schema"] == "v1"
    assert doc["command"] == "validate"
    assert doc["admissibility"]["is_admissible"] is True
    assert doc["zero_structure"]["tag"] == "positive-on-both-sides"


@needs_cli
def test_cli_validate_rejects_wavy_potential(tmp_path):
    xs = [round(-4.0 + 0.01 * k, 10) for k in range(801)]
    ys = [math.sin(x) ** 2 for x in xs]
    doc = {"pieces": [{"domain": [None, None], "kind": "tabulated", "xs": xs, "ys": ys}]}
    path = tmp_path / "sinsq.json"
    path.write_text(json.dumps(doc))

    proc = run_cli("validate", "--potential", str(path))
    assert proc.returncode == 1
    out = json.loads(proc.stdout)
    assert out["admissibility"]["is_admissible"] is False
    kinds = {v["kind"] for v in out["admissibility"]["violations"]}
    assert "monotonicity-break-right" in kinds
    assert "monotonicity-break-left" in kinds


@needs_cli
def test_cli_minimize_document_and_determinism():
    args = ("minimize", "--potential", abs_potential_path(), "--mass", "1")
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.returncode == 0, first.stderr
    assert first.stdout == second.stdout  # byte-identical documents

    doc = json.loads(first.stdout)
    assert doc["schema"] == "v1"
    result = doc["result"]
    assert result["alpha"] == pytest.approx(-0.5, abs=1e-9)
    assert result["energy"]["total"] == pytest.approx(2.25, abs=1e-9)
    assert result["interval"][0] == pytest.approx(-0.5, abs=1e-9)
    assert result["origin_in_closure"] is True
    assert doc["origin_membership"] is True


@needs_cli
def test_cli_sweep_scales_with_mass():
    proc = run_cli(
        "sweep", "--potential", abs_potential_path(), "--mass", "0.5,1,2"
    )
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    alphas = [row["result"]["alpha"] for row in doc["rows"]]
    assert alphas == pytest.approx([-0.25, -0.5, -1.0], abs=1e-9)


@needs_cli
def test_cli_oracle_verifies_small_grid():
    proc = run_cli(
        "oracle",
        "--potential",
        abs_potential_path(),
        "--mass",
        "1",
        "--window",
        "1",
        "--grid-step",
        "0.25",
        "--k-max",
        "2",
    )
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    assert doc["verified"] is True
    assert doc["report"]["best"]["single_interval"] is True


@needs_cli
def test_cli_transport_campaign():
    proc = run_cli("transport", "--potential", abs_potential_path())
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    assert doc["all_passed"] is True
    assert doc["checks"]["contraction_all"] is True


@needs_cli
def test_cli_input_errors_exit_two(tmp_path):
    bad = tmp_path / "broken.json"
    bad.write_text('{"pieces": [')
    proc = run_cli("validate", "--potential", str(bad))
    assert proc.returncode == 2
    doc = json.loads(proc.stdout)
    assert doc["error"]["type"] == "parse"

    missing = run_cli("minimize", "--potential", abs_potential_path())
    assert missing.returncode == 2  # --mass is required
