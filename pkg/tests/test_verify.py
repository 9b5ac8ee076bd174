import json
import re

import pytest

from specfun import verify
from specfun.errors import DomainError
from specfun.kernel import Grid
from specfun.verify import CheckResult, CheckSpec, Report


def _strip_volatile(payload):
    data = json.loads(payload)
    data.pop("created_at")
    for row in data["results"]:
        row.pop("elapsed_ms")
    return data


class TestRunner:
    def test_identity_kind(self):
        spec = CheckSpec("t.id", "x^2 residual", "identity", Grid(0.0, 1.0, 11), 1e-12,
                         lambda x: 0.0)
        res = verify.run_check(spec)
        assert res.passed and res.max_residual == 0.0 and res.points == 11

    def test_inequality_kind_failure_location(self):
        spec = CheckSpec("t.ineq", "margin", "inequality", Grid(0.0, 1.0, 11), 1e-12,
                         lambda x: 0.5 - x)
        res = verify.run_check(spec)
        assert not res.passed
        assert res.argmax == 1.0
        assert abs(res.max_residual - 0.5) < 1e-15

    def test_monotonicity_kind(self):
        spec = CheckSpec("t.mono", "values", "monotonicity", Grid(0.0, 1.0, 11), 1e-12,
                         lambda x: x * x)
        assert verify.run_check(spec).passed
        spec_bad = CheckSpec("t.mono2", "values", "monotonicity", Grid(0.0, 1.0, 11), 1e-12,
                             lambda x: -x)
        assert not verify.run_check(spec_bad).passed

    def test_convexity_kind(self):
        spec = CheckSpec("t.cvx", "values", "convexity", Grid(0.0, 1.0, 11), 1e-10,
                         lambda x: x * x)
        assert verify.run_check(spec).passed
        concave = CheckSpec("t.cvx2", "values", "convexity", Grid(0.0, 1.0, 11), 1e-10,
                            lambda x: -x * x)
        assert not verify.run_check(concave).passed

    def test_grid_override(self):
        spec = CheckSpec("t.grid", "identity", "identity", Grid(0.0, 1.0, 100), 1.0,
                         lambda x: 0.0)
        assert verify.run_check(spec, grid_n=7).points == 7

    def test_tol_scale(self):
        spec = CheckSpec("t.tol", "identity", "identity", Grid(0.0, 1.0, 4), 1e-3,
                         lambda x: 1e-2)
        assert not verify.run_check(spec).passed
        assert verify.run_check(spec, tol_scale=100.0).passed

    def test_spec_validation(self):
        with pytest.raises(DomainError):
            CheckSpec("x", "", "weird", Grid(0.0, 1.0, 4), 1e-3, lambda x: 0.0)
        with pytest.raises(DomainError):
            CheckSpec("x", "", "identity", Grid(0.0, 1.0, 4), 0.0, lambda x: 0.0)


class TestSuites:
    def test_modular_has_nine_results(self):
        rep = verify.run_suite("modular", grid_n=8)
        assert len(rep.results) == 9
        assert rep.summary == {"total": 9, "passed": 9, "failed": 0}

    def test_gamma_suite_contents(self):
        rep = verify.run_suite("gamma", grid_n=64)
        ids = {r.id for r in rep.results}
        assert {"gamma.detemple_bracket", "gamma.bigh_monotone", "gamma.theta_table",
                "gamma.interval_bounds", "gamma.alzer_unit_interval",
                "gamma.alzer_beyond_one"} <= ids
        assert rep.summary["failed"] == 0

    def test_results_sorted_by_id(self):
        rep = verify.run_suite("balls", grid_n=16)
        ids = [r.id for r in rep.results]
        assert ids == sorted(ids)

    def test_unknown_suite(self):
        with pytest.raises(DomainError):
            verify.run_suite("bogus")

    def test_deterministic_modulo_volatile_fields(self):
        r1 = verify.run_suite("modular", grid_n=8)
        r2 = verify.run_suite("modular", grid_n=8)
        assert _strip_volatile(verify.serialize(r1, "json")) == \
            _strip_volatile(verify.serialize(r2, "json"))

    def test_grid_doubling_stability(self):
        # a passing identity check may not drift past 2x tolerance when the
        # grid is refined
        coarse = verify.run_suite("modular", grid_n=16)
        fine = verify.run_suite("modular", grid_n=32)
        tols = {f"modular.{iid}": 1e-6 for iid in
                [r.id.split(".", 1)[1] for r in coarse.results]}
        for res in fine.results:
            assert res.max_residual <= 2.0 * tols[res.id]

    def test_tol_scale_can_fail_a_suite(self):
        rep = verify.run_suite("modular", grid_n=4, tol_scale=1e-9)
        assert rep.summary["failed"] > 0


class TestSerialization:
    def _tiny_report(self):
        res = CheckResult(id="a.b", passed=True, max_residual=1.25e-14,
                          argmax=0.5, points=3, elapsed_ms=1.5)
        return Report(created_at="2026-01-01T00:00:00+00:00", suite="gamma",
                      results=(res,), summary={"total": 1, "passed": 1, "failed": 0})

    def test_json_fields(self):
        payload = verify.serialize(self._tiny_report(), "json")
        data = json.loads(payload)
        assert set(data) == {"created_at", "suite", "results", "summary"}
        assert data["results"][0] == {
            "id": "a.b", "passed": True, "max_residual": 1.25e-14,
            "argmax": 0.5, "points": 3, "elapsed_ms": 1.5,
        }

    def test_json_roundtrip(self):
        rep = verify.run_suite("balls", grid_n=16)
        back = verify.parse_report(verify.serialize(rep, "json"))
        assert back == rep

    def test_empty_report(self):
        rep = Report(created_at="t", suite="gamma", results=(),
                     summary={"total": 0, "passed": 0, "failed": 0})
        data = json.loads(verify.serialize(rep, "json"))
        assert data["results"] == []
        assert data["summary"] == {"total": 0, "passed": 0, "failed": 0}

    def test_csv_shape(self):
        payload = verify.serialize(self._tiny_report(), "csv").decode()
        lines = [ln for ln in payload.split("\r\n") if ln]
        assert len(lines) == 2
        assert lines[0] == "id,passed,max_residual,argmax,points,elapsed_ms"
        assert lines[1].startswith("a.b,true,1.25e-14,0.5,3,")

    def test_csv_round_trip_decimal(self):
        payload = verify.serialize(self._tiny_report(), "csv").decode()
        value = payload.splitlines()[1].split(",")[2]
        assert float(value) == 1.25e-14

    def test_unknown_format(self):
        with pytest.raises(DomainError):
            verify.serialize(self._tiny_report(), "xml")


def test_full_registry_ids_are_unique_and_namespaced():
    specs = verify.build_checks("all")
    ids = [s.id for s in specs]
    assert len(ids) == len(set(ids))
    pattern = re.compile(r"^(gamma|balls|hyper|elliptic|modular)\.[a-z0-9_]+$")
    assert all(pattern.match(i) for i in ids)
