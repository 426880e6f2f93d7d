"""Run the full verification sweep at acceptance scale and write report files."""
import argparse
import sys
from fractions import Fraction

from wbrauer.harness import SweepSpec, run_suite

# suite -> grid overrides matching the acceptance ranges
GRIDS = {
    "dims": dict(rmax=7, smax=7, nmax=7),
    "associativity": dict(rmax=3, smax=3, samples=200),
    "semisimple": dict(rmax=3, smax=3, deltas=tuple(range(-5, 6)) + (Fraction(1, 2),)),
    "keyscalar": dict(rmax=5, smax=5, nmax=5),
    "twobox": dict(rmax=3, smax=3, deltas=tuple(range(-4, 5))),
    "balanced": dict(rmax=4, smax=4, deltas=tuple(range(-6, 7))),
    "wp": dict(rmax=4, smax=4, nmax=4, deltas=tuple(range(-3, 4)), primes=(2, 3, 5)),
    "halverson": dict(rmax=6, smax=6, nmax=6),
    "restriction": dict(rmax=6, smax=6, nmax=6),
    "homstability": dict(rmin=1, smin=1, rmax=2, smax=2, nmax=3, deltas=(-2, 0, 2)),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="sweep_out", help="directory for report files")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("suites", nargs="*", default=list(GRIDS))
    args = ap.parse_args()
    failed = False
    for suite in args.suites:
        spec = SweepSpec(suites=(suite,), workers=args.workers,
                         out_dir=f"{args.out}/{suite}", **GRIDS[suite])
        summary = run_suite(spec).summary()[suite]
        failed |= bool(summary["failed"])
        print(suite, summary)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
