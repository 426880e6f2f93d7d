"""Balanced bipartitions, blocks and the semisimplicity criterion.

Delta is given as an int, a Fraction or the string ``"symbolic"``; the
characteristic ``p`` is 0 or a prime.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .cell_modules import CellLabel, cell_labels
from .combinatorics import (Bipartition, Partition, content_sum, contents, p_regular,
                            removable_boxes, skew_boxes)
from .matching import perfect_matching
from .scalars import is_prime

Delta = Union[int, Fraction, str]

DELTA0_EXCEPTIONS = {(1, 2), (1, 3), (2, 1), (3, 1)}


class NotSigmaSemisimple(ValueError):
    pass


def normalize_delta(delta) -> Delta:
    if isinstance(delta, str):
        if delta.strip().lower() == "symbolic":
            return "symbolic"
        delta = Fraction(delta.strip())
    delta = Fraction(delta)
    return int(delta) if delta.denominator == 1 else delta


@dataclass(frozen=True)
class AlgebraParams:
    r: int
    s: int
    delta: Delta
    p: int = 0

    def __post_init__(self):
        if self.r < 0 or self.s < 0:
            raise ValueError("r and s must be nonnegative")
        if self.p and not is_prime(self.p):
            raise ValueError(f"p={self.p} is neither 0 nor prime")
        delta = normalize_delta(self.delta)
        if self.p:
            if delta == "symbolic":
                raise ValueError("symbolic delta needs characteristic 0")
            if isinstance(delta, Fraction):
                if delta.denominator % self.p == 0:
                    raise ValueError(f"delta={delta} is undefined mod {self.p}")
                delta = delta.numerator * pow(delta.denominator, -1, self.p)
            delta %= self.p
        object.__setattr__(self, "delta", delta)

    @property
    def sigma_semisimple(self) -> bool:
        return self.p == 0 or self.p > max(self.r, self.s)

    @property
    def delta_is_integer(self) -> bool:
        return isinstance(self.delta, int)


def _equal_mod(a, b, p) -> bool:
    return (a - b) % p == 0 if p else a == b


def enumerate_labels(r, s, delta=None, p: int = 0, simple: bool = False) -> list:
    """Cell labels of B_{r,s}; with ``simple`` only those labelling simple modules."""
    out = cell_labels(r, s)
    if not simple:
        return out
    out = [x for x in out if p_regular(x.left, p) and p_regular(x.right, p)]
    if r == s and r > 0 and delta is not None and normalize_delta(delta) != "symbolic":
        d = normalize_delta(delta)
        if (d % p == 0) if p else d == 0:
            out = [x for x in out if x.t != r]
    return out


def _skew_pairing(lam: Bipartition, mu: Bipartition, delta: int, p: int) -> bool:
    inter = lam.intersection(mu)
    for big in (lam, mu):
        left = skew_boxes(big.left, inter.left)
        right = skew_boxes(big.right, inter.right)
        ok = perfect_matching(left, right,
                              lambda a, b: _equal_mod(a.content + b.content, -delta, p))
        if ok is None:
            return False
    return True


def _content_counts_balanced(lam: Bipartition, mu: Bipartition, delta: int) -> bool:
    diff_l = Counter(contents(lam.left))
    diff_l.subtract(Counter(contents(mu.left)))
    diff_r = Counter(contents(lam.right))
    diff_r.subtract(Counter(contents(mu.right)))
    keys = set(diff_l) | {-delta - j for j in diff_r}
    return all(diff_l.get(i, 0) == diff_r.get(-delta - i, 0) for i in keys)


def is_balanced(lam, mu, delta: int, p: int = 0) -> bool:
    """delta-balanced test: content counts in characteristic 0, skew-box matching mod p."""
    lam = Bipartition.of(*lam)
    mu = Bipartition.of(*mu)
    if lam.left.degree - lam.right.degree != mu.left.degree - mu.right.degree:
        return False
    if p:
        return _skew_pairing(lam, mu, delta % p, p)
    return _content_counts_balanced(lam, mu, delta)


def is_balanced_by_pairing(lam, mu, delta: int, p: int = 0) -> bool:
    """The defining pairing condition, without the content-count shortcut."""
    lam = Bipartition.of(*lam)
    mu = Bipartition.of(*mu)
    if lam.left.degree - lam.right.degree != mu.left.degree - mu.right.degree:
        return False
    return _skew_pairing(lam, mu, delta, p)


def sub_partitions(p: Partition) -> list:
    """Every partition whose diagram lies inside p."""
    p = Partition(p)
    out = []

    def rec(i, cap, acc):
        if i == len(p):
            out.append(Partition(acc))
            return
        for k in range(min(cap, p[i]), -1, -1):
            rec(i + 1, k, acc + [k])
            if k == 0:
                break
    rec(0, p[0] if p else 0, [])
    return out


def sub_bipartitions(lam: Bipartition) -> list:
    return [Bipartition(a, b) for a in sub_partitions(lam.left) for b in sub_partitions(lam.right)]


@lru_cache(maxsize=None)
def balanced_subs(lam: Bipartition, delta: int, p: int = 0) -> tuple:
    """All sub-bipartitions of lam balanced with it."""
    shift = lam.left.degree - lam.right.degree
    return tuple(nu for nu in sub_bipartitions(lam)
                 if nu.left.degree - nu.right.degree == shift and is_balanced(lam, nu, delta, p))


def _minimal(items) -> list:
    return [x for x in items if not any(y != x and x.contains(y) for y in items)]


@lru_cache(maxsize=None)
def minimal_balanced_weight(lam, delta: int, p: int = 0) -> Bipartition:
    """The unique containment-minimal bipartition balanced with lam."""
    lam = Bipartition.of(*lam)
    if p and p <= max(lam.left.degree, lam.right.degree):
        raise NotSigmaSemisimple(f"p={p} is too small for minimal weights of {lam}")
    subs = balanced_subs(lam, delta, p)
    mins = _minimal(subs)
    if len(mins) != 1:
        raise ArithmeticError(f"{len(mins)} minimal balanced weights below {lam}")
    subset = set(subs)
    for a in subs:
        for b in subs:
            if a.intersection(b) not in subset:
                raise ArithmeticError(f"intersection of {a} and {b} is not balanced with {lam}")
    return mins[0]


def _largest_with_content(boxes, content):
    found = [b for b in boxes if b.content == content]
    return max(found, key=lambda b: b.row) if found else None


def _strip_for(lam: Bipartition, mu: Bipartition, start, delta: int) -> tuple:
    """Grow the removable strip seeded by a removable box of lam.left outside mu.left."""
    skew = {"L": set(skew_boxes(lam.left, mu.left)), "R": set(skew_boxes(lam.right, mu.right))}
    shape = {"L": lam.left, "R": lam.right}
    other = {"L": "R", "R": "L"}
    partner = _largest_with_content(skew["R"], -delta - start.content)
    if partner is None:
        raise ArithmeticError(f"no partner for {start} in {lam}/{mu}")
    strip = {("L", start), ("R", partner)}
    while True:
        grown = set(strip)
        below_right = set()
        for side, box in strip:
            for b in shape[side].boxes():
                if b.row >= box.row and b.col >= box.col and (side, b) not in strip:
                    below_right.add((side, b))
        grown |= below_right
        for side, box in below_right:
            mate = _largest_with_content(skew[other[side]], -delta - box.content)
            if mate is None:
                raise ArithmeticError(f"strip through {box} cannot be balanced")
            grown.add((other[side], mate))
        if grown == strip:
            break
        strip = grown
    return frozenset(strip)


def _remove_strip(lam: Bipartition, strip) -> Bipartition:
    rows = {"L": list(lam.left), "R": list(lam.right)}
    for side, box in strip:
        rows[side][box.row - 1] -= 1
    return Bipartition(Partition(rows["L"]), Partition(rows["R"]))


def i_maximal_subs(lam, mu, delta: int) -> dict:
    """Map each removable box of lam.left outside mu.left to its i-maximal balanced sub-bipartition."""
    lam, mu = Bipartition.of(*lam), Bipartition.of(*mu)
    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    if not is_balanced(lam, mu, delta):
        raise ValueError(f"{lam} and {mu} are not {delta}-balanced")
    out = {}
    for box in sorted(removable_boxes(lam.left)):
        if box.col <= mu.left.part(box.row):
            continue
        strip = _strip_for(lam, mu, box, delta)
        out[box] = (strip, _remove_strip(lam, strip))
    return out


def maximal_balanced_sub(lam, mu, delta: int) -> set:
    """Balanced sub-bipartitions whose removed strip is minimal under inclusion."""
    found = i_maximal_subs(lam, mu, delta)
    strips = {strip: nu for strip, nu in found.values()}
    return {nu for strip, nu in strips.items()
            if not any(other < strip for other in strips)}


def content_condition(lam: CellLabel, mu: CellLabel, delta, p: int = 0) -> bool:
    """Whether t*delta + c(lam) - c(mu) vanishes, t being the layer difference mu.t - lam.t."""
    if (lam.r, lam.s) != (mu.r, mu.s):
        raise ValueError("labels live in different algebras")
    t = mu.t - lam.t
    c = (content_sum(lam.left) + content_sum(lam.right)
         - content_sum(mu.left) - content_sum(mu.right))
    delta = normalize_delta(delta)
    if delta == "symbolic":
        return t == 0 and c == 0
    if p:
        params = AlgebraParams(lam.r, lam.s, delta, p)
        return (t * params.delta + c) % p == 0
    return t * delta + c == 0


def semisimple_verdict(params: AlgebraParams):
    """(semisimple?, name of the deciding clause)."""
    r, s, delta, p = params.r, params.s, params.delta, params.p
    if not params.sigma_semisimple:
        return False, "not-sigma-semisimple"
    if r == 0 or s == 0:
        return True, "trivial-side"
    if not params.delta_is_integer:
        return True, "non-integer"
    bound = r + s - 2
    if p:
        reps = {d for d in range(-bound, bound + 1) if (d - delta) % p == 0}
    else:
        reps = {delta} if abs(delta) <= bound else set()
    if not reps:
        return True, "large-delta"
    if reps == {0} and (r, s) in DELTA0_EXCEPTIONS:
        return True, "delta0-exceptional"
    return False, "none"


def is_semisimple(params: AlgebraParams) -> bool:
    return semisimple_verdict(params)[0]


@dataclass
class BlockReport:
    params: AlgebraParams
    classes: list
    minimal: list

    def class_of(self) -> dict:
        return {lab: k for k, cls in enumerate(self.classes) for lab in cls}

    def to_json(self):
        return {
            "r": self.params.r, "s": self.params.s,
            "delta": str(self.params.delta), "p": self.params.p,
            "classes": [
                {"labels": [_label_json(x) for x in cls],
                 "minimal": _label_json(m) if m is not None else None}
                for cls, m in zip(self.classes, self.minimal)
            ],
        }

    def csv_rows(self) -> list:
        rows = [["t", "left", "right", "class", "minimal"]]
        index = self.class_of()
        for lab in sorted(index, key=lambda x: (x.t, index[x])):
            m = self.minimal[index[lab]]
            rows.append([lab.t, _fmt(lab.left), _fmt(lab.right), index[lab],
                         str(m.bipartition) if m is not None else ""])
        return rows


def _fmt(p) -> str:
    return " ".join(str(x) for x in p)


def _label_json(lab: CellLabel):
    return {"t": lab.t, "left": list(lab.left), "right": list(lab.right)}


def block_partition(params: AlgebraParams) -> BlockReport:
    if not params.sigma_semisimple:
        raise NotSigmaSemisimple(
            f"blocks are only classified when p = 0 or p > max(r, s); got p={params.p}")
    labels = cell_labels(params.r, params.s)
    if not params.delta_is_integer:
        return BlockReport(params, [[x] for x in labels], list(labels))
    parent = list(range(len(labels)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, a in enumerate(labels):
        for j in range(i + 1, len(labels)):
            if find(i) != find(j) and is_balanced(a.bipartition, labels[j].bipartition,
                                                  params.delta, params.p):
                parent[find(j)] = find(i)
    groups = {}
    for i, lab in enumerate(labels):
        groups.setdefault(find(i), []).append(lab)
    classes = sorted(groups.values(), key=lambda c: labels.index(c[0]))
    minimal = []
    for cls in classes:
        mins = [x for x in cls if all(y.bipartition.contains(x.bipartition) for y in cls)]
        if len(mins) != 1:
            raise ArithmeticError(f"class {[str(x) for x in cls]} has no unique minimal weight")
        minimal.append(mins[0])
    return BlockReport(params, classes, minimal)
