"""Exact dense linear algebra over the scalar contexts.

Matrices are plain lists of row lists. Ring-valued determinants go through
fraction-free Bareiss elimination; ranks and nullspaces use ordinary
elimination and therefore need a field context.
"""
from __future__ import annotations

from fractions import Fraction

from .scalars import Poly


def zeros(n, m, zero=0):
    return [[zero] * m for _ in range(n)]


def identity(n, one=1, zero=0):
    out = zeros(n, n, zero)
    for i in range(n):
        out[i][i] = one
    return out


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def matmul(a, b, zero=0):
    if not a:
        return []
    m = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [zero] * m
        for k, x in enumerate(row):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def matadd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matsub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(c, a):
    return [[c * x for x in row] for row in a]


def mat_equal(a, b) -> bool:
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        if len(ra) != len(rb):
            return False
        for x, y in zip(ra, rb):
            if x - y:
                return False
    return True


def mat_map(f, a):
    return [[f(x) for x in row] for row in a]


def specialize(a, ctx):
    """Push an integer or Poly matrix into ``ctx``."""
    def conv(x):
        if isinstance(x, Poly):
            return ctx.specialize(x)
        return ctx.coerce(x)
    return mat_map(conv, a)


def kron(a, b, zero=0):
    if not a or not b:
        return []
    n, m = len(b), len(b[0])
    out = []
    for ra in a:
        for i in range(n):
            row = []
            for x in ra:
                if x:
                    row.extend(x * y for y in b[i])
                else:
                    row.extend([zero] * m)
            out.append(row)
    return out


def _exact_div(x, y):
    if isinstance(x, Poly):
        return x.exact_div(y)
    if isinstance(y, Poly):
        return Poly((x,)).exact_div(y)
    if isinstance(x, int) and isinstance(y, int):
        q, rem = divmod(x, y)
        if rem:
            raise ArithmeticError("inexact integer division")
        return q
    return x / y


def bareiss_det(a, exact_div=None):
    """Determinant by fraction-free elimination.

    ``exact_div`` divides ring elements exactly; the default covers ints,
    Fractions, field elements and :class:`Poly`.
    """
    n = len(a)
    if n == 0:
        return 1
    if exact_div is None:
        exact_div = _exact_div
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return m[k][k] * 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(row_i[j] * pivot - mik * row_k[j], prev)
            row_i[k] = pivot * 0
        prev = pivot
    d = m[n - 1][n - 1]
    return d if sign == 1 else -d


def row_reduce(a):
    """Reduced row echelon form over a field; returns (rref rows, pivot columns)."""
    m = [list(row) for row in a]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = _inverse(m[r][c])
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(a) -> int:
    if not a or not a[0]:
        return 0
    return len(row_reduce(a)[1])


def _inverse(x):
    return x.inverse() if hasattr(x, "inverse") else 1 / x


class SparseEchelon:
    """Incremental sparse row echelon basis over a field.

    Rows are dicts column -> nonzero field element; each stored row has a
    distinct leading column with coefficient one.
    """

    def __init__(self):
        self.rows = {}

    def add(self, row: dict) -> bool:
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            basis = self.rows.get(lead)
            if basis is None:
                inv = _inverse(row[lead])
                self.rows[lead] = {c: v * inv for c, v in row.items()}
                return True
            f = row[lead]
            for c, v in basis.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def root_bound(poly: Poly) -> int:
    """Smallest power of two B with |lead|*B^n > sum |a_i| B^i; every root is below B."""
    *low, lead = poly.coeffs
    n = len(low)
    b = 1
    while abs(lead) * b ** n <= sum(abs(a) * b ** i for i, a in enumerate(low)):
        b *= 2
    return b


def integer_roots(poly: Poly) -> list:
    """All integer roots of a nonzero integer polynomial, sorted."""
    if not poly:
        raise ValueError("the zero polynomial has every integer as a root")
    coeffs = list(poly.coeffs)
    k = 0
    while coeffs[k] == 0:
        k += 1
    roots = [0] if k else []
    reduced = Poly(coeffs[k:])
    if reduced.degree == 0:
        return roots
    c0 = coeffs[k]
    for x in range(1, root_bound(reduced) + 1):
        if c0 % x == 0:
            roots.extend(y for y in (x, -x) if reduced(y) == 0)
    return sorted(roots)


def to_fraction_matrix(a):
    return [[Fraction(x) for x in row] for row in a]
