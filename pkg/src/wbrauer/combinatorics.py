"""Partitions, boxes, bipartitions and tableaux.

Boxes are 1-indexed (row, col) and the content of a box is col - row.
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple:
        return tuple(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """Row length of row ``i`` (1-indexed), zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def boxes(self):
        return [Box(i + 1, j + 1) for i, row in enumerate(self) for j in range(row)]

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for x in self if x > j) for j in range(self[0]))

    def contains(self, other) -> bool:
        """True when the diagram of ``other`` sits inside this one."""
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def __repr__(self):
        return f"Partition({list(self)})"


class Box(NamedTuple):
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


class Bipartition(NamedTuple):
    left: Partition
    right: Partition

    @classmethod
    def of(cls, left, right) -> "Bipartition":
        return cls(Partition(left), Partition(right))

    @property
    def degrees(self):
        return self.left.degree, self.right.degree

    def contains(self, other) -> bool:
        return self.left.contains(other.left) and self.right.contains(other.right)

    def intersection(self, other) -> "Bipartition":
        return Bipartition(intersect(self.left, other.left), intersect(self.right, other.right))

    def to_json(self):
        return {"left": list(self.left), "right": list(self.right)}

    def __str__(self):
        return f"({fmt(self.left)},{fmt(self.right)})"


def fmt(p) -> str:
    return "(" + ",".join(str(x) for x in p) + ")" if p else "()"


def partitions(n: int) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order, (n) first."""
    def rec(n, cap):
        if n == 0:
            yield ()
            return
        for k in range(min(n, cap), 0, -1):
            for rest in rec(n - k, k):
                yield (k,) + rest
    for parts in rec(n, n):
        yield Partition(parts)


def add_box(p: Partition, box: Box) -> Partition:
    rows = list(p) + [0]
    rows[box.row - 1] += 1
    return Partition(rows)


def remove_box(p: Partition, box: Box) -> Partition:
    rows = list(p)
    rows[box.row - 1] -= 1
    return Partition(rows)


def removable_boxes(p: Partition) -> frozenset:
    return frozenset(
        Box(i + 1, row) for i, row in enumerate(p)
        if i + 1 == len(p) or p[i + 1] < row
    )


def addable_boxes(p: Partition) -> frozenset:
    out = {Box(len(p) + 1, 1)}
    for i, row in enumerate(p):
        if i == 0 or p[i - 1] > row:
            out.add(Box(i + 1, row + 1))
    return frozenset(out)


def contents(p: Partition) -> list:
    return [b.content for b in p.boxes()]


def content_sum(p: Partition) -> int:
    """Sum of contents, computed row by row."""
    return sum(row * (row + 1) // 2 - row * (i + 1) for i, row in enumerate(p))


def content_count(p: Partition, i: int, modulus: int = 0) -> int:
    if modulus:
        return sum(1 for c in contents(p) if (c - i) % modulus == 0)
    return sum(1 for c in contents(p) if c == i)


def dominates(p: Partition, q: Partition) -> bool:
    if p.degree != q.degree:
        raise ValueError(f"dominance needs equal degrees, got {p.degree} and {q.degree}")
    a = b = 0
    for k in range(max(len(p), len(q))):
        a += p.part(k + 1)
        b += q.part(k + 1)
        if a < b:
            return False
    return True


def intersect(p: Partition, q: Partition) -> Partition:
    return Partition(min(a, b) for a, b in zip(p, q))


def skew_boxes(outer: Partition, inner: Partition) -> list:
    return [Box(i + 1, j + 1) for i, row in enumerate(outer)
            for j in range(inner.part(i + 1), row)]


def hook_lengths(p: Partition) -> list:
    conj = p.conjugate()
    return [p[b.row - 1] - b.col + conj[b.col - 1] - b.row + 1 for b in p.boxes()]


def specht_dim(p: Partition) -> int:
    prod = 1
    for h in hook_lengths(p):
        prod *= h
    return factorial(p.degree) // prod


def p_regular(p: Partition, prime: int) -> bool:
    if prime == 0:
        return True
    run = 1
    for a, b in zip(p, p[1:]):
        run = run + 1 if a == b else 1
        if run >= prime:
            return False
    return True


class StandardTableau(NamedTuple):
    shape: Partition
    rows: tuple

    def position(self, k: int) -> Box:
        for i, row in enumerate(self.rows):
            if k in row:
                return Box(i + 1, row.index(k) + 1)
        raise KeyError(k)

    def row_of(self) -> dict:
        return {x: i for i, row in enumerate(self.rows) for x in row}

    def last_letter_key(self) -> tuple:
        where = self.row_of()
        return tuple(where[k] for k in range(self.shape.degree, 0, -1))


@lru_cache(maxsize=None)
def standard_tableaux(shape: Partition) -> tuple:
    """Standard tableaux of a shape in last-letter order.

    The key compares the row of n, then of n-1, and so on; lower row index
    sorts first.
    """
    shape = Partition(shape)
    n = shape.degree
    if n == 0:
        return (StandardTableau(shape, ()),)
    out = []
    for box in removable_boxes(shape):
        smaller = remove_box(shape, box)
        for t in standard_tableaux(smaller):
            rows = [list(r) for r in t.rows] + [[]]
            rows[box.row - 1].append(n)
            out.append(StandardTableau(shape, tuple(tuple(r) for r in rows if r)))
    out.sort(key=StandardTableau.last_letter_key)
    return tuple(out)


def lr_tableaux(lam: Partition, mu: Partition, nu: Partition) -> Iterator[dict]:
    """Littlewood-Richardson tableaux of shape lam/mu and weight nu.

    Yields fillings as dicts Box -> entry. Rows weakly increase, columns
    strictly increase and the reverse reading word is a lattice word.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if mu.degree + nu.degree != lam.degree or not lam.contains(mu):
        return
    # reading order: rows top to bottom, each row right to left
    order = []
    for i in range(len(lam)):
        for j in range(lam[i], mu.part(i + 1), -1):
            order.append(Box(i + 1, j))
    filling = {}
    counts = [0] * (len(nu) + 1)

    def rec(k):
        if k == len(order):
            yield dict(filling)
            return
        box = order[k]
        hi = len(nu)
        right = filling.get(Box(box.row, box.col + 1))
        if right is not None:
            hi = min(hi, right)
        above = filling.get(Box(box.row - 1, box.col))
        lo = above + 1 if above is not None else 1
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[box] = v
            yield from rec(k + 1)
            del filling[box]
            counts[v] -= 1

    yield from rec(0)


@lru_cache(maxsize=None)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    return sum(1 for _ in lr_tableaux(lam, mu, nu))
