"""Integral Specht module matrices from polytabloids.

Permutations are tuples ``p`` on ``range(n)`` with ``p[k]`` the image of
letter ``k+1`` (shifted to 0-based). Matrices act on column vectors, so the
j-th column of ``rho(g)`` holds the coordinates of ``g`` applied to the j-th
basis polytabloid.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product

from .combinatorics import Partition, StandardTableau, standard_tableaux
from .linalg import identity, kron, matadd, matmul, row_reduce, transpose

SPECHT_BOUND = 7


def tabloid_of(rows) -> tuple:
    return tuple(tuple(sorted(r)) for r in rows)


def enumerate_tabloids(shape: Partition) -> list:
    """All tabloids of a shape, sorted lexicographically by their row sets."""
    n = shape.degree

    def rec(remaining, k):
        if k == len(shape):
            yield ()
            return
        for row in combinations(remaining, shape[k]):
            rest = tuple(x for x in remaining if x not in row)
            for tail in rec(rest, k + 1):
                yield (row,) + tail

    return sorted(rec(tuple(range(1, n + 1)), 0))


def perm_sign(p) -> int:
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def compose(p, q) -> tuple:
    """(p o q)(k) = p(q(k))."""
    return tuple(p[q[k]] for k in range(len(q)))


def inverse(p) -> tuple:
    out = [0] * len(p)
    for k, x in enumerate(p):
        out[x] = k
    return tuple(out)


def transposition(n, k) -> tuple:
    """The adjacent transposition swapping 0-based letters k and k+1."""
    p = list(range(n))
    p[k], p[k + 1] = p[k + 1], p[k]
    return tuple(p)


def bubble_word(p) -> list:
    """Indices k with p = s_{k_m} o ... o s_{k_1}, read from the returned list in order.

    Found by sorting the one-line notation with adjacent swaps.
    """
    w = list(p)
    word = []
    changed = True
    while changed:
        changed = False
        for k in range(len(w) - 1):
            if w[k] > w[k + 1]:
                w[k], w[k + 1] = w[k + 1], w[k]
                word.append(k)
                changed = True
    return word


def apply_to_rows(p, rows) -> tuple:
    return tabloid_of([[p[x - 1] + 1 for x in row] for row in rows])


def polytabloid(t: StandardTableau) -> dict:
    """e_T as a dict tabloid -> integer coefficient."""
    shape = t.shape
    cols = [[row[c] for row in t.rows if c < len(row)] for c in range(shape[0] if shape else 0)]
    out = {}
    for choice in product(*(permutations(col) for col in cols)):
        rows = [list(r) for r in t.rows]
        sign = 1
        for c, (col, moved) in enumerate(zip(cols, choice)):
            sign *= perm_sign([col.index(x) for x in moved])
            for i, x in enumerate(moved):
                rows[i][c] = x
        key = tabloid_of(rows)
        out[key] = out.get(key, 0) + sign
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class SpechtRep:
    shape: Partition
    basis: tuple
    gen_matrices: tuple
    form: tuple
    tabloids: tuple
    coords: tuple
    pivot_inverse: tuple
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def degree(self) -> int:
        return self.shape.degree

    def _solve(self, vec: dict) -> list:
        """Coordinates of a tabloid-space vector lying in the Specht module."""
        x = [vec.get(self.tabloids[c], 0) for c in self.pivots]
        out = [sum(x[k] * self.pivot_inverse[k][j] for k in range(len(x))) for j in range(self.dim)]
        # every coordinate must reproduce the full vector
        recon = [0] * len(self.tabloids)
        for j, c in enumerate(out):
            if c:
                for col, v in enumerate(self.coords[j]):
                    if v:
                        recon[col] += c * v
        if recon != [vec.get(tb, 0) for tb in self.tabloids]:
            raise ArithmeticError("vector is not in the Specht module")
        return out

    def matrix_of(self, p) -> list:
        """rho(p) computed directly from the polytabloids (no word)."""
        cols = []
        for j, t in enumerate(self.basis):
            vec = {}
            for c, v in enumerate(self.coords[j]):
                if v:
                    key = apply_to_rows(p, self.tabloids[c])
                    vec[key] = vec.get(key, 0) + v
            cols.append(self._solve(vec))
        return transpose(cols)

    def act(self, p) -> list:
        """rho(p) as a product of generator matrices along a bubble-sort word."""
        out = identity(self.dim)
        for k in bubble_word(p):
            out = matmul(self.gen_matrices[k], out)
        return out

    def transposition_sum(self) -> list:
        """Matrix of the sum of all transpositions (i, m), i < m."""
        n = self.degree
        total = [[0] * self.dim for _ in range(self.dim)]
        for i in range(n):
            for m in range(i + 1, n):
                p = list(range(n))
                p[i], p[m] = p[m], p[i]
                total = matadd(total, self.act(tuple(p)))
        return total


@lru_cache(maxsize=None)
def build_specht(shape, bound: int = SPECHT_BOUND) -> SpechtRep:
    shape = Partition(shape)
    n = shape.degree
    if n > bound:
        raise ValueError(f"degree {n} exceeds the Specht bound {bound}")
    basis = standard_tableaux(shape)
    tabloids = enumerate_tabloids(shape)
    index = {tb: k for k, tb in enumerate(tabloids)}
    coords = []
    for t in basis:
        row = [0] * len(tabloids)
        for tb, v in polytabloid(t).items():
            row[index[tb]] = v
        coords.append(tuple(row))
    pivots = tuple(index[tabloid_of(t.rows)] for t in basis)
    sub = [[Fraction(coords[i][c]) for c in pivots] for i in range(len(basis))]
    # inverse of the square pivot block, rows of `sub` are polytabloids
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(len(basis))]
           for i, row in enumerate(transpose(sub))]
    red, piv = row_reduce(aug)
    if piv != list(range(len(basis))):
        raise ArithmeticError("standard tabloids do not give an invertible block")
    inv_t = [row[len(basis):] for row in red]
    # solve c . sub = x  =>  c = x . sub^{-1}; red holds (sub^T)^{-1}
    pivot_inverse = transpose(inv_t)
    for row in pivot_inverse:
        for v in row:
            if v.denominator != 1:
                raise ArithmeticError("pivot block is not unimodular")
    pivot_inverse = tuple(tuple(int(v) for v in row) for row in pivot_inverse)
    form = tuple(tuple(sum(a * b for a, b in zip(coords[i], coords[j])) for j in range(len(basis)))
                 for i in range(len(basis)))
    rep = SpechtRep(shape, basis, (), form, tuple(tabloids), tuple(coords), pivot_inverse, pivots)
    gens = tuple(tuple(map(tuple, rep.matrix_of(transposition(n, k)))) for k in range(n - 1))
    return SpechtRep(shape, basis, gens, form, tuple(tabloids), tuple(coords), pivot_inverse, pivots)


@dataclass(frozen=True)
class ProductRep:
    """Outer tensor product of a left and right Specht module; right letters follow the left ones."""
    left: SpechtRep
    right: SpechtRep

    @property
    def r(self) -> int:
        return self.left.degree

    @property
    def dim(self) -> int:
        return self.left.dim * self.right.dim

    def act_pair(self, pl, pr) -> list:
        return kron(self.left.act(pl), self.right.act(pr))

    def form(self) -> list:
        return kron([list(x) for x in self.left.form], [list(x) for x in self.right.form])


def split_wall_permutation(sigma, r: int):
    """Split a permutation of range(r+s) fixing the wall into its two factors."""
    n = len(sigma)
    left = tuple(sigma[:r])
    right = tuple(x - r for x in sigma[r:])
    if sorted(left) != list(range(r)) or sorted(right) != list(range(n - r)):
        raise ValueError("permutation moves letters across the wall")
    return left, right


def act_permutation(rep: ProductRep, sigma) -> list:
    left, right = split_wall_permutation(sigma, rep.r)
    return rep.act_pair(left, right)


def product_rep(left, right) -> ProductRep:
    return ProductRep(build_specht(Partition(left)), build_specht(Partition(right)))
