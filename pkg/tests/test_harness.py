import csv
import io
import json
from math import factorial

import pytest

from wbrauer import harness
from wbrauer.harness import Check, SweepSpec, VerifyReport, run_suite


def test_dims_suite():
    rep = run_suite(SweepSpec(suites=("dims",), rmax=3, smax=3, nmax=5))
    assert rep.ok
    assert len(rep.checks) == sum(1 for r in range(4) for s in range(4) if r + s <= 5)
    for c in rep.checks:
        assert c.computed == factorial(c.params["r"] + c.params["s"])


def test_semisimple_exceptional_point():
    spec = SweepSpec(suites=("semisimple",), rmin=1, rmax=1, smin=2, smax=2, deltas=(0,))
    (check,) = run_suite(spec).checks
    assert check.expected is True and check.computed is True
    assert check.note == "delta0-exceptional"


def test_empty_grid():
    rep = run_suite(SweepSpec(suites=("keyscalar",), rmin=3, rmax=2))
    assert rep.checks == [] and rep.ok
    assert rep.summary()["keyscalar"]["checks"] == 0


def test_unknown_suite_and_bad_range():
    with pytest.raises(ValueError):
        SweepSpec(suites=("nope",))
    with pytest.raises(ValueError):
        SweepSpec(rmax=-1)


SMALL = dict(suites=("associativity", "keyscalar", "balanced", "wp", "restriction"),
             rmax=2, smax=2, deltas=(-1, 0, 2), primes=(0, 3), samples=5)


def test_reports_are_byte_identical():
    a = run_suite(SweepSpec(**SMALL)).dumps()
    b = run_suite(SweepSpec(**SMALL)).dumps()
    assert a == b
    assert json.loads(a)["sweep"]["seed"] == harness.DEFAULT_SEED


def test_workers_do_not_change_the_report():
    one = run_suite(SweepSpec(**SMALL)).dumps()
    two = run_suite(SweepSpec(**SMALL, workers=2)).dumps()
    assert one == two


def test_seed_changes_only_sampled_suites():
    a = run_suite(SweepSpec(**{**SMALL, "suites": ("associativity",)}))
    b = run_suite(SweepSpec(**{**SMALL, "suites": ("associativity",)}, seed=5))
    assert [c.verdict for c in a.checks] == [c.verdict for c in b.checks]
    assert a.dumps() != b.dumps()


def test_smallest_failure_is_reported(monkeypatch):
    def fake(spec):
        for r, s in spec.pairs():
            bad = (r, s) in {(2, 1), (1, 2), (2, 2)}
            yield Check("dims", {"r": r, "s": s}, 0, int(bad), "fail" if bad else "pass")

    monkeypatch.setitem(harness.SUITE_FUNCS, "dims", fake)
    rep = run_suite(SweepSpec(suites=("dims",), rmax=2, smax=2))
    assert not rep.ok
    summary = rep.summary()["dims"]
    assert summary["failed"] == 3
    assert summary["smallest_failure"] == {"r": 1, "s": 2}


def test_csv_projects_json():
    rep = run_suite(SweepSpec(**SMALL))
    data = rep.to_json()
    rows = list(csv.reader(io.StringIO(rep.csv_text())))
    assert rows[0] == ["suite", "params", "expected", "computed", "verdict"]
    assert len(rows) - 1 == len(data["checks"])
    for row, check in zip(rows[1:], data["checks"]):
        assert row[0] == check["suite"] and row[4] == check["verdict"]
        assert json.loads(row[1]) == json.loads(json.dumps(check["params"], default=str))


def test_write_outputs(tmp_path):
    spec = SweepSpec(suites=("dims", "halverson"), rmax=2, smax=2, out_dir=str(tmp_path / "out"))
    rep = run_suite(spec)
    out = tmp_path / "out"
    assert json.loads((out / "report.json").read_text()) == json.loads(rep.dumps())
    assert (out / "report.csv").read_text() == rep.csv_text()
    timings = json.loads((out / "timings.json").read_text())
    assert len(timings) == len(rep.checks)
    assert "elapsed" not in (out / "report.json").read_text()


def test_bound_violations_are_skips():
    spec = SweepSpec(suites=("keyscalar",), rmin=4, rmax=4, smin=3, smax=3)
    (check,) = run_suite(spec).checks
    assert check.verdict == "skip" and "exceeds" in check.note


def test_summary_counts():
    rep = VerifyReport(SweepSpec(suites=("dims",)), [
        Check("dims", {"r": 0, "s": 1}, 1, 1, "pass"),
        Check("dims", {"r": 9, "s": 0}, None, None, "skip"),
    ])
    assert rep.summary()["dims"] == {"checks": 2, "passed": 1, "failed": 0, "skipped": 1,
                                     "smallest_failure": None}


@pytest.mark.parametrize("suite", harness.SUITES)
def test_every_suite_passes_on_a_small_grid(suite):
    spec = SweepSpec(suites=(suite,), rmax=2, smax=1, deltas=(-1, 0, 1, "1/2"), primes=(0, 2, 3))
    rep = run_suite(spec)
    assert rep.ok, rep.summary()
    assert rep.summary()[suite]["passed"] > 0


def test_block_minimality_helper():
    for r in range(3):
        for s in range(3):
            for delta in range(-2, 3):
                assert harness.block_minimality_violations(r, s, delta) == []
