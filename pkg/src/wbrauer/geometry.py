"""Weights for B_{r,s}, the rho-shifted dot action and orbit tests.

A weight is stored as a flat tuple ordered by the signed indices
-r, ..., -1, 1, ..., s. Under the dot action the shifted vector
``x = weight + rho`` is simply permuted (and, for the affine group, moved by
multiples of p with zero total), which is what both orbit tests exploit.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .combinatorics import Bipartition, Partition
from .matching import perfect_matching
from .scalars import is_prime


def signed_indices(r: int, s: int) -> list:
    return list(range(-r, 0)) + list(range(1, s + 1))


@dataclass(frozen=True)
class Weight:
    r: int
    s: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.r + self.s:
            raise ValueError(f"a weight for ({self.r},{self.s}) needs {self.r + self.s} entries")
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    def _pos(self, i: int) -> int:
        if i == 0 or not -self.r <= i <= self.s:
            raise IndexError(f"index {i} outside -{self.r}..{self.s} without 0")
        return i + self.r if i < 0 else self.r + i - 1

    def __getitem__(self, i: int) -> int:
        return self.entries[self._pos(i)]

    @property
    def degree(self) -> int:
        return sum(self.entries)

    def items(self):
        return zip(signed_indices(self.r, self.s), self.entries)

    def is_dominant(self) -> bool:
        left, right = self.entries[:self.r], self.entries[self.r:]
        return (all(x <= 0 for x in left) and all(a >= b for a, b in zip(left, left[1:]))
                and all(x >= 0 for x in right) and all(a >= b for a, b in zip(right, right[1:])))

    def __str__(self):
        left = ",".join(map(str, self.entries[:self.r]))
        right = ",".join(map(str, self.entries[self.r:]))
        return f"({left};{right})"


@dataclass(frozen=True)
class GeometryContext:
    r: int
    s: int
    delta: int
    p: int = 0

    def __post_init__(self):
        if self.r < 0 or self.s < 0:
            raise ValueError("r and s must be nonnegative")
        if int(self.delta) != self.delta:
            raise ValueError("the weight geometry needs an integer delta")
        object.__setattr__(self, "delta", int(self.delta))
        if self.p and not is_prime(self.p):
            raise ValueError(f"p={self.p} is neither 0 nor prime")

    @property
    def rho(self) -> Weight:
        return Weight(self.r, self.s,
                      [-i if i < 0 else self.delta - i + 1 for i in signed_indices(self.r, self.s)])

    def shifted(self, w: Weight) -> tuple:
        self._check(w)
        return tuple(a + b for a, b in zip(w.entries, self.rho.entries))

    def unshift(self, x) -> Weight:
        return Weight(self.r, self.s, [a - b for a, b in zip(x, self.rho.entries)])

    def _check(self, w: Weight):
        if (w.r, w.s) != (self.r, self.s):
            raise ValueError(f"weight for ({w.r},{w.s}) used in context ({self.r},{self.s})")


def inner(a: Weight, b: Weight) -> int:
    return sum(x * y for x, y in zip(a.entries, b.entries))


def to_weight(bp, ctx: GeometryContext) -> Weight:
    """(lam^L, lam^R) -> (-lam^L_r, ..., -lam^L_1; lam^R_1, ..., lam^R_s)."""
    left, right = Partition(bp[0]), Partition(bp[1])
    if len(left) > ctx.r or len(right) > ctx.s:
        raise ValueError(f"{Bipartition(left, right)} has too many parts for ({ctx.r},{ctx.s})")
    lpad = list(left) + [0] * (ctx.r - len(left))
    rpad = list(right) + [0] * (ctx.s - len(right))
    return Weight(ctx.r, ctx.s, [-x for x in reversed(lpad)] + rpad)


def from_weight(w: Weight) -> Bipartition:
    if not w.is_dominant():
        raise ValueError(f"{w} is not dominant")
    return Bipartition(Partition(-x for x in reversed(w.entries[:w.r])),
                       Partition(w.entries[w.r:]))


def box_content_weight(row: int, col: int) -> int:
    """Content of the box in a signed row: col-row below the axis, 1+row-col above it."""
    if row == 0:
        raise ValueError("row 0 does not exist")
    return col - row if row > 0 else 1 + row - col


def dot_reflect(w: Weight, i: int, j: int, ctx: GeometryContext, shift: int = 0) -> Weight:
    """Reflect in eps_i - eps_j through the dot action; ``shift`` moves the mirror by that multiple of p."""
    if i == j or 0 in (i, j):
        raise ValueError("need two distinct nonzero indices")
    if shift and not ctx.p:
        raise ValueError("an affine shift needs p > 0")
    ctx._check(w)
    x = list(ctx.shifted(w))
    a, b = w._pos(i), w._pos(j)
    k = x[a] - x[b] - shift * ctx.p
    x[a] -= k
    x[b] += k
    return ctx.unshift(x)


def same_w_orbit(a: Weight, b: Weight, ctx: GeometryContext) -> bool:
    if ctx.p:
        raise ValueError("same_w_orbit is the characteristic 0 test; use same_wp_orbit")
    return sorted(ctx.shifted(a)) == sorted(ctx.shifted(b))


def swap_sign(i: int, j: int) -> int:
    """+1 when a right index i is matched to a left index j, -1 for the reverse, else 0."""
    return (i > 0) - (j > 0)


def wp_matching(a: Weight, b: Weight, ctx: GeometryContext) -> Optional[dict]:
    """A matching sigma (signed index -> signed index) certifying b in the affine orbit of a."""
    if not ctx.p:
        raise ValueError("p = 0: use same_w_orbit")
    ctx._check(a)
    ctx._check(b)
    if a.degree != b.degree:
        return None
    p, shift = ctx.p, ctx.delta + 1
    idx = signed_indices(ctx.r, ctx.s)

    def allowed(i, j):
        return (b[i] - i - (a[j] - j) + swap_sign(i, j) * shift) % p == 0

    m = perfect_matching(idx, idx, allowed)
    if m is None:
        return None
    return {i: idx[k] for i, k in zip(idx, m)}


def same_wp_orbit(a: Weight, b: Weight, ctx: GeometryContext) -> bool:
    return wp_matching(a, b, ctx) is not None


def swap_vector(sigma: dict) -> dict:
    return {i: swap_sign(i, j) for i, j in sigma.items()}


def linkage_allows(lam, mu, ctx: GeometryContext) -> bool:
    """Necessary condition for lam and mu to share a block: same (affine) dot orbit."""
    a, b = to_weight(lam, ctx), to_weight(mu, ctx)
    return same_wp_orbit(a, b, ctx) if ctx.p else same_w_orbit(a, b, ctx)


def residue_profile(w: Weight, ctx: GeometryContext) -> Counter:
    """Residues mod p of the shifted entries; with the degree this fixes the affine orbit."""
    return Counter(x % ctx.p for x in ctx.shifted(w))
