"""Command-line front end; every command prints one JSON document (or CSV with --csv)."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction
from math import factorial

from .blocks import AlgebraParams, block_partition, semisimple_verdict
from .cell_modules import CELL_BOUND, CellLabel, build_cell_module, hom_space_dim
from .combinatorics import Bipartition, Partition
from .diagrams import WalledDiagram, count_one_row, multiply
from .geometry import (GeometryContext, linkage_allows, same_w_orbit, to_weight,
                       wp_matching)
from .harness import SUITES, SweepSpec, run_suite
from .linalg import integer_roots
from .scalars import is_prime, make_context

SCHEMA_VERSION = 1
OUT_ENV = "WBRAUER_OUT"

_label = {"type": "object", "required": ["t", "left", "right"],
          "properties": {"t": {"type": "integer"},
                         "left": {"type": "array", "items": {"type": "integer"}},
                         "right": {"type": "array", "items": {"type": "integer"}}}}

SCHEMAS = {
    "version": SCHEMA_VERSION,
    "commands": {
        "mult": {"type": "object", "required": ["loops", "product", "coefficient"],
                 "properties": {"loops": {"type": "integer"},
                                "product": {"type": "object", "required": ["r", "s", "edges"]},
                                "coefficient": {"type": "string"}}},
        "dim": {"type": "object", "required": ["dimension"],
                "properties": {"dimension": {"type": "integer"}}},
        "gram": {"type": "object",
                 "required": ["label", "dimension", "determinant", "integer_roots", "value"],
                 "properties": {"label": _label, "dimension": {"type": "integer"},
                                "determinant": {"type": "array", "items": {"type": "integer"}},
                                "integer_roots": {"type": "array", "items": {"type": "integer"}},
                                "value": {"type": ["string", "null"]}}},
        "semisimple": {"type": "object", "required": ["semisimple", "clause"],
                       "properties": {"semisimple": {"type": "boolean"},
                                      "clause": {"enum": ["not-sigma-semisimple", "trivial-side",
                                                          "non-integer", "large-delta",
                                                          "delta0-exceptional", "none"]}}},
        "blocks": {"type": "object", "required": ["r", "s", "delta", "p", "classes"],
                   "properties": {"classes": {"type": "array", "items": {
                       "type": "object", "required": ["labels", "minimal"],
                       "properties": {"labels": {"type": "array", "items": _label},
                                      "minimal": _label}}}}},
        "blocks-csv": {"columns": ["t", "left", "right", "class", "minimal"]},
        "orbit": {"type": "object", "required": ["w_orbit", "wp_orbit", "matching"],
                  "properties": {"w_orbit": {"type": "boolean"},
                                 "wp_orbit": {"type": ["boolean", "null"]},
                                 "matching": {"type": ["object", "null"]}}},
        "linkage": {"type": "object", "required": ["linked", "necessary_only"],
                    "properties": {"linked": {"type": "boolean"},
                                   "necessary_only": {"const": True}}},
        "homdim": {"type": "object", "required": ["source", "target", "hom_dim"],
                   "properties": {"source": _label, "target": _label,
                                  "hom_dim": {"type": "integer"}}},
        "verify": {"type": "object", "required": ["version", "sweep", "ok", "summary", "checks"]},
        "error": {"type": "object", "required": ["error"],
                  "properties": {"error": {"type": "object", "required": ["type", "message"]}}},
    },
}


class DomainError(ValueError):
    pass


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("()").strip()
    if not text or text == "-":
        return Partition(())
    try:
        parts = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise DomainError(f"malformed partition {text!r}") from None
    if any(x <= 0 for x in parts) or parts != sorted(parts, reverse=True):
        raise DomainError(f"{text!r} is not a partition (need weakly decreasing positive parts)")
    return Partition(parts)


def parse_bipartition(text: str) -> Bipartition:
    """Accepts ``2,1|4`` or ``((2,1),(4))``; an empty side may be blank or ``()``."""
    text = text.strip()
    if "|" in text:
        left, _, right = text.partition("|")
        return Bipartition(parse_partition(left), parse_partition(right))
    m = re.fullmatch(r"\(\s*\(([\d,\s]*)\)\s*,\s*\(([\d,\s]*)\)\s*\)", text)
    if not m:
        raise DomainError(f"malformed bipartition {text!r}; use '2,1|4' or '((2,1),(4))'")
    return Bipartition(parse_partition(m.group(1)), parse_partition(m.group(2)))


def parse_diagram(r: int, s: int, text: str) -> WalledDiagram:
    """Edges like ``N1-S2,N2-N3,...``; a JSON list of tag pairs also works."""
    text = text.strip()
    try:
        if text.startswith("["):
            edges = [tuple(e) for e in json.loads(text)]
        else:
            edges = [tuple(x.strip() for x in e.split("-")) for e in text.split(",") if e.strip()]
        return WalledDiagram.from_edges(r, s, edges)
    except (ValueError, TypeError) as exc:
        raise DomainError(f"malformed diagram {text!r}: {exc}") from None


def _label_json(lab: CellLabel):
    return {"t": lab.t, "left": list(lab.left), "right": list(lab.right)}


def _label(r, s, text) -> CellLabel:
    bp = parse_bipartition(text)
    try:
        return CellLabel.of(r, s, bp.left, bp.right)
    except ValueError as exc:
        raise DomainError(str(exc)) from None


def _integer_delta(args) -> int:
    d = Fraction(args.delta) if args.delta != "symbolic" else None
    if d is None or d.denominator != 1:
        raise DomainError("this command needs an integer delta")
    return int(d)


def _check_delta(delta, p):
    try:
        make_context(delta, p)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad delta {delta!r}: {exc}") from None


def _validate(args):
    """Reject bad (r, s, delta, p) before any work is done."""
    if args.command == "verify":
        # per-prime problems become skipped grid points, so only parse here
        primes = [int(x) for x in args.p.split(",")]
        checks = [(d, 0) for d in args.delta.split(",")]
        sizes = (args.rmin, args.rmax, args.smin, args.smax)
    else:
        primes = [getattr(args, "p", 0)]
        delta = getattr(args, "delta", None)
        checks = [(delta, primes[0])] if delta is not None else []
        sizes = (args.r, args.s)
    if min(sizes) < 0:
        raise DomainError("r and s must be nonnegative")
    for p in primes:
        if p and not is_prime(p):
            raise DomainError(f"p={p} is neither 0 nor prime")
    for d, p in checks:
        _check_delta(d, p)


def cmd_mult(args):
    a, b = parse_diagram(args.r, args.s, args.a), parse_diagram(args.r, args.s, args.b)
    loops, d = multiply(a, b)
    ctx = make_context(args.delta, args.p)
    return {"loops": loops, "product": d.to_json(), "coefficient": str(ctx.delta ** loops)}


def algebra_dim(r, s) -> int:
    """Sum over layers of (one-row diagrams)^2 times |Sigma_{r-t} x Sigma_{s-t}|."""
    return sum(count_one_row(r, s, t) ** 2 * factorial(r - t) * factorial(s - t)
               for t in range(min(r, s) + 1))


def cmd_dim(args):
    return {"dimension": algebra_dim(args.r, args.s)}


def cmd_gram(args):
    lab = _label(args.r, args.s, args.label)
    if args.r + args.s > CELL_BOUND:
        raise DomainError(f"r+s exceeds the cell-module bound {CELL_BOUND}")
    rep = build_cell_module(lab)
    det = rep.gram_det()
    value = None
    if args.delta != "symbolic":
        value = str(make_context(args.delta, args.p).specialize(det))
    return {"label": _label_json(lab), "dimension": rep.dim, "determinant": list(det.coeffs),
            "integer_roots": integer_roots(det) if det else [], "value": value}


def cmd_semisimple(args):
    verdict, clause = semisimple_verdict(AlgebraParams(args.r, args.s, args.delta, args.p))
    return {"semisimple": verdict, "clause": clause}


def cmd_blocks(args):
    report = block_partition(AlgebraParams(args.r, args.s, args.delta, args.p))
    if args.csv:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(report.csv_rows())
        return buf.getvalue()
    return report.to_json()


def _geometry(args) -> GeometryContext:
    return GeometryContext(args.r, args.s, _integer_delta(args), args.p)


def cmd_orbit(args):
    ctx = _geometry(args)
    a, b = to_weight(parse_bipartition(args.lam), ctx), to_weight(parse_bipartition(args.mu), ctx)
    w = same_w_orbit(a, b, GeometryContext(ctx.r, ctx.s, ctx.delta))
    if not ctx.p:
        return {"w_orbit": w, "wp_orbit": None, "matching": None}
    sigma = wp_matching(a, b, ctx)
    return {"w_orbit": w, "wp_orbit": sigma is not None,
            "matching": {str(i): j for i, j in sigma.items()} if sigma is not None else None}


def cmd_linkage(args):
    ctx = _geometry(args)
    return {"linked": linkage_allows(parse_bipartition(args.lam), parse_bipartition(args.mu), ctx),
            "necessary_only": True}


def cmd_homdim(args):
    src, tgt = _label(args.r, args.s, args.source), _label(args.r, args.s, args.target)
    if args.delta == "symbolic":
        raise DomainError("hom dimensions need a specific delta")
    if args.r + args.s > CELL_BOUND:
        raise DomainError(f"r+s exceeds the cell-module bound {CELL_BOUND}")
    dim = hom_space_dim(src, tgt, make_context(args.delta, args.p))
    return {"source": _label_json(src), "target": _label_json(tgt), "hom_dim": dim}


def cmd_verify(args):
    suites = []
    for item in args.suite or ["all"]:
        suites.extend(SUITES if item == "all" else item.split(","))
    spec = SweepSpec(suites=tuple(dict.fromkeys(suites)), rmax=args.rmax, smax=args.smax,
                     rmin=args.rmin, smin=args.smin, deltas=tuple(args.delta.split(",")),
                     primes=tuple(int(p) for p in args.p.split(",")), seed=args.seed,
                     samples=args.samples, nmax=args.nmax, workers=args.workers,
                     out_dir=args.out or os.environ.get(OUT_ENV))
    report = run_suite(spec)
    return report.to_json(), (0 if report.ok else 1)


COMMANDS = {"mult": cmd_mult, "dim": cmd_dim, "gram": cmd_gram, "semisimple": cmd_semisimple,
            "blocks": cmd_blocks, "orbit": cmd_orbit, "linkage": cmd_linkage,
            "homdim": cmd_homdim, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wbrauer", description="Walled Brauer algebra toolkit")
    ap.add_argument("--schema", action="store_true", help="print the output schemas and exit")
    sub = ap.add_subparsers(dest="command")

    def algebra(p, delta=True, prime=True):
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--s", type=int, required=True)
        if delta:
            p.add_argument("--delta", default="symbolic" if delta == "optional" else None,
                           required=delta is True,
                           help="integer, a/b rational, or 'symbolic'")
        if prime:
            p.add_argument("--p", type=int, default=0, help="0 or a prime")
        return p

    p = algebra(sub.add_parser("mult", help="multiply two diagrams"), delta="optional")
    p.add_argument("--a", required=True, help="edges, e.g. N1-S1,N2-N3,S2-S3")
    p.add_argument("--b", required=True)
    algebra(sub.add_parser("dim", help="dimension of B_{r,s}"), delta=False, prime=False)
    p = algebra(sub.add_parser("gram", help="Gram determinant of a cell module"), delta="optional")
    p.add_argument("--label", required=True, help="bipartition, e.g. '1|1' or '((1),(1))'")
    algebra(sub.add_parser("semisimple", help="semisimplicity verdict"))
    p = algebra(sub.add_parser("blocks", help="block classes of cell labels"))
    p.add_argument("--csv", action="store_true")
    for name in ("orbit", "linkage"):
        p = algebra(sub.add_parser(name, help="dot-orbit comparison of two weights"))
        p.add_argument("--lam", required=True)
        p.add_argument("--mu", required=True)
    p = algebra(sub.add_parser("homdim", help="dim Hom between two cell modules"))
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p = sub.add_parser("verify", help="run cross-check suites")
    p.add_argument("--suite", action="append", help=f"one of {', '.join(SUITES)} or 'all'")
    p.add_argument("--rmax", type=int, default=2)
    p.add_argument("--smax", type=int, default=2)
    p.add_argument("--rmin", type=int, default=0)
    p.add_argument("--smin", type=int, default=0)
    p.add_argument("--nmax", type=int, default=None, help="skip grid points with r+s above this")
    p.add_argument("--delta", default="-2,-1,0,1,2", help="comma list; may include a/b or symbolic")
    p.add_argument("--p", default="0", help="comma list of 0 and primes")
    p.add_argument("--seed", type=int, default=SweepSpec.seed)
    p.add_argument("--samples", type=int, default=SweepSpec.samples)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=None, help=f"report directory (default ${OUT_ENV})")
    return ap


def _emit(payload, stream):
    if isinstance(payload, str):
        stream.write(payload)
    else:
        stream.write(json.dumps(payload, indent=2, default=str) + "\n")


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.schema:
        _emit(SCHEMAS, stdout)
        return 0
    if not args.command:
        ap.print_usage(sys.stderr)
        return 2
    try:
        _validate(args)
        out = COMMANDS[args.command](args)
    except (ValueError, ArithmeticError) as exc:
        _emit({"error": {"type": type(exc).__name__, "command": args.command,
                         "message": str(exc)}}, stdout)
        return 1
    code = 0
    if isinstance(out, tuple):
        out, code = out
    _emit(out, stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
