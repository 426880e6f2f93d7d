"""Batch cross-checks of the closed-form criteria against brute-force linear algebra.

Each suite walks a parameter grid and emits one record per grid point. The
JSON form of a report depends only on the sweep settings, so two runs with
the same settings produce identical bytes; wall-clock timings are kept in a
separate file.
"""
from __future__ import annotations

import csv
import io
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import Optional

from .blocks import (AlgebraParams, balanced_subs, block_partition, enumerate_labels,
                     is_balanced, is_balanced_by_pairing, semisimple_verdict)
from .cell_modules import (CELL_BOUND, build_cell_module, cell_labels, halverson_audit,
                           hom_space_dim, restriction_dim_check)
from .combinatorics import skew_boxes
from .diagrams import BASIS_BOUND, enumerate_basis, multiply
from .geometry import GeometryContext, same_w_orbit, same_wp_orbit, to_weight
from .linalg import mat_equal
from .scalars import make_context

REPORT_VERSION = 1
DEFAULT_SEED = 1729

SUITES = ("dims", "associativity", "semisimple", "keyscalar", "twobox", "balanced",
          "wp", "halverson", "restriction", "homstability")

@dataclass
class SweepSpec:
    suites: tuple = SUITES
    rmax: int = 2
    smax: int = 2
    rmin: int = 0
    smin: int = 0
    deltas: tuple = (-2, -1, 0, 1, 2)
    primes: tuple = (0,)
    seed: int = DEFAULT_SEED
    samples: int = 10
    nmax: Optional[int] = None
    workers: int = 1
    out_dir: Optional[str] = None

    def __post_init__(self):
        unknown = [x for x in self.suites if x not in SUITES]
        if unknown:
            raise ValueError(f"unknown suite(s) {unknown}; choose from {list(SUITES)}")
        if min(self.rmax, self.smax, self.rmin, self.smin) < 0:
            raise ValueError("ranges must be nonnegative")
        self.suites = tuple(self.suites)
        self.deltas = tuple(_parse_delta(d) for d in self.deltas)
        self.primes = tuple(int(p) for p in self.primes)

    def pairs(self):
        for r in range(self.rmin, self.rmax + 1):
            for s in range(self.smin, self.smax + 1):
                if self.nmax is None or r + s <= self.nmax:
                    yield r, s

    def header(self):
        return {"suites": list(self.suites), "r": [self.rmin, self.rmax],
                "s": [self.smin, self.smax], "deltas": [str(d) for d in self.deltas],
                "primes": list(self.primes), "seed": self.seed, "samples": self.samples,
                "nmax": self.nmax}


def _parse_delta(d):
    if isinstance(d, str) and d.strip().lower() == "symbolic":
        return "symbolic"
    d = Fraction(d)
    return int(d) if d.denominator == 1 else d


@dataclass
class Check:
    suite: str
    params: dict
    expected: object
    computed: object
    verdict: str  # "pass", "fail", "skip"
    elapsed: float = field(default=0.0, compare=False)
    note: str = ""

    def to_json(self, timing: bool = False):
        out = {"suite": self.suite, "params": self.params, "expected": self.expected,
               "computed": self.computed, "verdict": self.verdict}
        if self.note:
            out["note"] = self.note
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def _param_key(params: dict) -> tuple:
    """Sort key; smaller algebras first, then the remaining parameters in order."""
    def one(v):
        if isinstance(v, (int, Fraction)):
            return (0, Fraction(v), "")
        return (1, 0, str(v))
    r, s = params.get("r", 0), params.get("s", 0)
    return (r + s, r, s) + tuple(one(v) for k, v in params.items() if k not in ("r", "s"))


@dataclass
class VerifyReport:
    spec: SweepSpec
    checks: list

    @property
    def failures(self) -> list:
        return [c for c in self.checks if c.verdict == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        out = {}
        for suite in self.spec.suites:
            mine = [c for c in self.checks if c.suite == suite]
            bad = [c for c in mine if c.verdict == "fail"]
            smallest = min(bad, key=lambda c: _param_key(c.params)).params if bad else None
            out[suite] = {"checks": len(mine), "passed": sum(c.verdict == "pass" for c in mine),
                          "failed": len(bad),
                          "skipped": sum(c.verdict == "skip" for c in mine),
                          "smallest_failure": smallest}
        return out

    def to_json(self) -> dict:
        return {"version": REPORT_VERSION, "sweep": self.spec.header(), "ok": self.ok,
                "summary": self.summary(), "checks": [c.to_json() for c in self.checks]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True, default=str)

    def csv_text(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "params", "expected", "computed", "verdict"])
        for c in self.checks:
            w.writerow([c.suite, json.dumps(c.params, sort_keys=True, default=str),
                        json.dumps(c.expected, default=str), json.dumps(c.computed, default=str),
                        c.verdict])
        return buf.getvalue()

    def write(self, out_dir) -> Path:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(self.dumps() + "\n")
        (out / "report.csv").write_text(self.csv_text())
        timings = [{"suite": c.suite, "params": c.params, "elapsed": round(c.elapsed, 6)}
                   for c in self.checks]
        (out / "timings.json").write_text(json.dumps(timings, indent=1, default=str) + "\n")
        return out


def _verdict(expected, computed) -> str:
    return "pass" if expected == computed else "fail"


def _skip(suite, params, why) -> Check:
    return Check(suite, params, None, None, "skip", note=why)


def _rng(spec: SweepSpec, *key) -> random.Random:
    return random.Random(":".join(map(str, (spec.seed,) + key)))


# --- individual suites; each yields Check records in a fixed order ---

def suite_dims(spec: SweepSpec):
    for r, s in spec.pairs():
        params = {"r": r, "s": s}
        if r + s > BASIS_BOUND:
            yield _skip("dims", params, f"r+s exceeds {BASIS_BOUND}")
            continue
        basis = enumerate_basis(r, s)
        # distinct diagrams, so a duplicate in the enumeration shows up as a shortfall
        computed = len(set(basis))
        verdict = _verdict(factorial(r + s), computed) if computed == len(basis) else "fail"
        yield Check("dims", params, factorial(r + s), computed, verdict)


def suite_associativity(spec: SweepSpec):
    for r, s in spec.pairs():
        if r + s > BASIS_BOUND:
            yield _skip("associativity", {"r": r, "s": s}, f"r+s exceeds {BASIS_BOUND}")
            continue
        basis = enumerate_basis(r, s)
        rng = _rng(spec, "assoc", r, s)
        bad = 0
        for _ in range(spec.samples):
            a, b, c = (rng.choice(basis) for _ in range(3))
            k1, ab = multiply(a, b)
            k2, left = multiply(ab, c)
            k3, bc = multiply(b, c)
            k4, right = multiply(a, bc)
            if (k1 + k2, left) != (k3 + k4, right):
                bad += 1
        params = {"r": r, "s": s, "samples": spec.samples}
        yield Check("associativity", params, 0, bad, _verdict(0, bad))


def gram_dets_nonzero(r, s, delta, p=0) -> bool:
    """Whether every cell module of B_{r,s} has a nondegenerate form at this delta."""
    ctx = make_context(delta, p)
    for lab in cell_labels(r, s):
        det = build_cell_module(lab).gram_det()
        if not ctx.specialize(det):
            return False
    return True


def suite_semisimple(spec: SweepSpec):
    for r, s in spec.pairs():
        for delta in spec.deltas:
            for p in spec.primes:
                params = {"r": r, "s": s, "delta": str(delta), "p": p}
                if r + s > CELL_BOUND:
                    yield _skip("semisimple", params, f"r+s exceeds {CELL_BOUND}")
                    continue
                try:
                    verdict, clause = semisimple_verdict(AlgebraParams(r, s, delta, p))
                except ValueError as exc:
                    yield _skip("semisimple", params, str(exc))
                    continue
                computed = gram_dets_nonzero(r, s, delta, p)
                yield Check("semisimple", params, verdict, computed, _verdict(verdict, computed),
                            note=clause)


def suite_keyscalar(spec: SweepSpec):
    for r, s in spec.pairs():
        if r + s > CELL_BOUND:
            yield _skip("keyscalar", {"r": r, "s": s}, f"r+s exceeds {CELL_BOUND}")
            continue
        for lab in cell_labels(r, s):
            rep = build_cell_module(lab)
            ok = mat_equal(rep.t_element_matrix(), rep.t_element_rhs())
            params = {"r": r, "s": s, "t": lab.t, "left": list(lab.left), "right": list(lab.right)}
            yield Check("keyscalar", params, True, ok, _verdict(True, ok))


def two_box_pairs(r, s):
    """(lam, mu, content sum) with mu one layer deeper and one box smaller on each side."""
    labels = cell_labels(r, s)
    for lam in labels:
        for mu in labels:
            if mu.t != lam.t + 1:
                continue
            if not (lam.left.contains(mu.left) and lam.right.contains(mu.right)):
                continue
            (bl,), (br,) = skew_boxes(lam.left, mu.left), skew_boxes(lam.right, mu.right)
            yield lam, mu, bl.content + br.content


def _label_params(prefix, lab) -> dict:
    return {f"{prefix}_t": lab.t, f"{prefix}_left": list(lab.left),
            f"{prefix}_right": list(lab.right)}


def suite_twobox(spec: SweepSpec):
    for r, s in spec.pairs():
        for delta in spec.deltas:
            if not isinstance(delta, int):
                continue
            if r + s > CELL_BOUND:
                yield _skip("twobox", {"r": r, "s": s, "delta": delta}, f"r+s exceeds {CELL_BOUND}")
                continue
            ctx = make_context(delta)
            for lam, mu, c in two_box_pairs(r, s):
                expected = int(c + delta == 0)
                computed = hom_space_dim(lam, mu, ctx)
                params = {"r": r, "s": s, "delta": delta, **_label_params("src", lam),
                          **_label_params("tgt", mu)}
                yield Check("twobox", params, expected, computed, _verdict(expected, computed))


def suite_balanced(spec: SweepSpec):
    for r, s in spec.pairs():
        labels = cell_labels(r, s)
        for delta in spec.deltas:
            if not isinstance(delta, int):
                continue
            ctx = GeometryContext(r, s, delta)
            weights = [to_weight(x.bipartition, ctx) for x in labels]
            bad = total = 0
            for i, a in enumerate(labels):
                for j in range(i, len(labels)):
                    b = labels[j]
                    orbit = same_w_orbit(weights[i], weights[j], ctx)
                    if is_balanced(a.bipartition, b.bipartition, delta) != orbit:
                        bad += 1
                    if is_balanced_by_pairing(a.bipartition, b.bipartition, delta) != orbit:
                        bad += 1
                    total += 1
            params = {"r": r, "s": s, "delta": delta, "pairs": total}
            yield Check("balanced", params, 0, bad, _verdict(0, bad))


def bounded_orbit(a, ctx: GeometryContext, bound: int, goal=None) -> set:
    """Breadth-first search of the affine dot orbit of ``a`` inside a box.

    States are sorted shifted vectors (coordinate permutations are free);
    a move adds p to one coordinate and subtracts it from another. Stops
    early once ``goal`` (a sorted shifted vector) is reached.
    """
    p, n = ctx.p, ctx.r + ctx.s
    start = tuple(sorted(ctx.shifted(a)))
    seen, frontier = {start}, [start]
    while frontier and goal not in seen:
        nxt = []
        for x in frontier:
            for i in range(n):
                for j in range(n):
                    if i == j or abs(x[i] + p) > bound or abs(x[j] - p) > bound:
                        continue
                    y = list(x)
                    y[i] += p
                    y[j] -= p
                    y = tuple(sorted(y))
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
        frontier = nxt
    return seen


def wp_search_bound(weights, ctx: GeometryContext) -> int:
    """Box half-width p(r+s) + max|entry| + |delta| + r + s over the given weights."""
    n = ctx.r + ctx.s
    biggest = max([abs(x) for w in weights for x in w.entries] or [0])
    return ctx.p * n + biggest + abs(ctx.delta) + n


def bounded_orbit_search(a, b, ctx: GeometryContext, bound: Optional[int] = None) -> bool:
    if bound is None:
        bound = wp_search_bound([a, b], ctx)
    goal = tuple(sorted(ctx.shifted(b)))
    return goal in bounded_orbit(a, ctx, bound, goal)


def suite_wp(spec: SweepSpec):
    for r, s in spec.pairs():
        labels = cell_labels(r, s)
        for delta in spec.deltas:
            if not isinstance(delta, int):
                continue
            for p in spec.primes:
                if not p:
                    continue
                ctx = GeometryContext(r, s, delta, p)
                weights = [to_weight(x.bipartition, ctx) for x in labels]
                bound = wp_search_bound(weights, ctx)
                orbits = [bounded_orbit(w, ctx, bound) for w in weights]
                bad = total = 0
                for i in range(len(labels)):
                    for j in range(i, len(labels)):
                        total += 1
                        slow = tuple(sorted(ctx.shifted(weights[j]))) in orbits[i]
                        bad += same_wp_orbit(weights[i], weights[j], ctx) != slow
                params = {"r": r, "s": s, "delta": delta, "p": p, "pairs": total, "bound": bound}
                yield Check("wp", params, 0, bad, _verdict(0, bad))


def suite_halverson(spec: SweepSpec):
    for r, s in spec.pairs():
        for lab in cell_labels(r, s):
            total, dim = halverson_audit(lab)
            params = {"r": r, "s": s, "t": lab.t, "left": list(lab.left), "right": list(lab.right)}
            yield Check("halverson", params, dim, total, _verdict(dim, total))


def suite_restriction(spec: SweepSpec):
    for r, s in spec.pairs():
        for lab in cell_labels(r, s):
            for side, size in (("L", r), ("R", s)):
                if not size:
                    continue
                ok = restriction_dim_check(lab, side)
                params = {"r": r, "s": s, "t": lab.t, "left": list(lab.left),
                          "right": list(lab.right), "side": side}
                yield Check("restriction", params, True, ok, _verdict(True, ok))


def suite_homstability(spec: SweepSpec):
    for r, s in spec.pairs():
        for delta in spec.deltas:
            if delta == "symbolic":
                continue
            params = {"r": r, "s": s, "delta": str(delta)}
            if r + s + 2 > CELL_BOUND:
                yield _skip("homstability", params, f"r+s+2 exceeds {CELL_BOUND}")
                continue
            ctx = make_context(delta)
            # only labels of simple modules are covered by the stability statement
            labels = enumerate_labels(r, s, delta, simple=True)
            bad = 0
            for lam in labels:
                for mu in labels:
                    small = hom_space_dim(lam, mu, ctx)
                    big = hom_space_dim(lam.globalize(), mu.globalize(), ctx)
                    bad += small != big
            yield Check("homstability", {**params, "pairs": len(labels) ** 2}, 0, bad,
                        _verdict(0, bad))


SUITE_FUNCS = {
    "dims": suite_dims, "associativity": suite_associativity, "semisimple": suite_semisimple,
    "keyscalar": suite_keyscalar, "twobox": suite_twobox, "balanced": suite_balanced,
    "wp": suite_wp, "halverson": suite_halverson, "restriction": suite_restriction,
    "homstability": suite_homstability,
}


def _run_one(args):
    suite, spec = args
    out = []
    it = iter(SUITE_FUNCS[suite](spec))
    while True:
        t0 = time.perf_counter()
        try:
            check = next(it)
        except StopIteration:
            break
        check.elapsed = time.perf_counter() - t0
        out.append(check)
    return out


def _split_by_pair(spec: SweepSpec, suite: str) -> list:
    """One task per (suite, r, s) so workers can share the load."""
    tasks = []
    for r, s in spec.pairs():
        sub = SweepSpec(**{**asdict(spec), "suites": (suite,), "rmin": r, "rmax": r,
                           "smin": s, "smax": s, "workers": 1})
        tasks.append((suite, sub))
    return tasks


def run_suite(spec: SweepSpec) -> VerifyReport:
    tasks = [t for suite in spec.suites for t in _split_by_pair(spec, suite)]
    if spec.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            results = list(pool.map(_run_one, tasks))
    else:
        results = [_run_one(t) for t in tasks]
    checks = [c for chunk in results for c in chunk]
    report = VerifyReport(spec, checks)
    if spec.out_dir:
        report.write(spec.out_dir)
    return report


def block_minimality_violations(r, s, delta) -> list:
    """Block classes without a unique minimal member, or balanced subs whose meet is unbalanced."""
    bad = []
    try:
        block_partition(AlgebraParams(r, s, delta))
    except ArithmeticError as exc:
        bad.append(str(exc))
    for lab in cell_labels(r, s):
        subs = balanced_subs(lab.bipartition, delta)
        for i, a in enumerate(subs):
            for b in subs[i + 1:]:
                if not is_balanced(lab.bipartition, a.intersection(b), delta):
                    bad.append(f"{lab}: {a} meet {b}")
    return bad
