"""Print Gram determinants of every cell module for small (r, s) with their integer roots."""
import argparse

from wbrauer.cell_modules import build_cell_module, cell_labels
from wbrauer.linalg import integer_roots


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=4, help="largest r+s to tabulate")
    args = ap.parse_args()
    for n in range(1, args.nmax + 1):
        for r in range(n + 1):
            s = n - r
            for lab in cell_labels(r, s):
                rep = build_cell_module(lab)
                det = rep.gram_det()
                roots = integer_roots(det) if det else "identically zero"
                print(f"r={r} s={s} t={lab.t} {lab.bipartition}  dim={rep.dim}  det={det}  roots={roots}")


if __name__ == "__main__":
    main()
