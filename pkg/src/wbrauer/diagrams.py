"""Walled Brauer diagrams, their products and the one-row factorisation.

A diagram on ``n = r + s`` strands is a perfect matching of 2n nodes. Node
``k`` (0-based) is north node ``k+1`` for ``k < n`` and south node ``k-n+1``
otherwise. Strands 1..r sit left of the wall, r+1..r+s to its right.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import factorial
from typing import Iterator

BASIS_BOUND = 8


class AmbientMismatch(ValueError):
    pass


class IdempotentUnavailable(ValueError):
    pass


def _compose(top_a, mid, bot_b, match_a, match_b):
    """Stack a (top_a over mid nodes) above b (mid over bot_b nodes).

    ``match_a`` pairs nodes 0..top_a+mid-1 (north first), ``match_b`` pairs
    nodes 0..mid+bot_b-1. Returns (closed loops, matching on top_a+bot_b).
    """
    # global node ids: top 0..top_a-1, middle top_a.., bottom top_a+mid..
    off_b = top_a
    n_out = top_a + bot_b

    def edge_a(x):
        return match_a[x]

    def edge_b(x):
        return match_b[x - off_b] + off_b

    out = [None] * n_out
    seen_mid = [False] * mid

    def glob_to_out(x):
        return x if x < top_a else x - mid

    for start in range(top_a + mid + bot_b):
        if top_a <= start < top_a + mid:
            continue
        if out[glob_to_out(start)] is not None:
            continue
        use_a = start < top_a
        cur = start
        while True:
            nxt = edge_a(cur) if use_a else edge_b(cur)
            if top_a <= nxt < top_a + mid:
                seen_mid[nxt - top_a] = True
                cur = nxt
                use_a = not use_a
                continue
            break
        out[glob_to_out(start)] = glob_to_out(nxt)
        out[glob_to_out(nxt)] = glob_to_out(start)
    loops = 0
    for m in range(mid):
        if seen_mid[m]:
            continue
        loops += 1
        cur = top_a + m
        use_a = True
        while True:
            seen_mid[cur - top_a] = True
            cur = edge_a(cur) if use_a else edge_b(cur)
            use_a = not use_a
            if cur == top_a + m:
                break
    return loops, tuple(out)


@dataclass(frozen=True)
class WalledDiagram:
    r: int
    s: int
    match: tuple

    def __post_init__(self):
        n = self.r + self.s
        m = self.match
        if len(m) != 2 * n or sorted(m) != list(range(2 * n)):
            raise ValueError("not a perfect matching")
        for x, y in enumerate(m):
            if m[y] != x or x == y:
                raise ValueError("not a perfect matching")
            same_row = (x < n) == (y < n)
            left_x = x % n < self.r
            left_y = y % n < self.r
            if same_row and left_x == left_y:
                raise ValueError(f"arc {self._tag(x)}-{self._tag(y)} does not cross the wall")
            if not same_row and left_x != left_y:
                raise ValueError(f"line {self._tag(x)}-{self._tag(y)} crosses the wall")

    @property
    def n(self) -> int:
        return self.r + self.s

    def _tag(self, x) -> str:
        return f"N{x + 1}" if x < self.n else f"S{x - self.n + 1}"

    @classmethod
    def identity(cls, r, s) -> "WalledDiagram":
        n = r + s
        return cls(r, s, tuple(range(n, 2 * n)) + tuple(range(n)))

    @classmethod
    def from_edges(cls, r, s, edges) -> "WalledDiagram":
        """Build from pairs of tags like ("N1", "S2")."""
        n = r + s
        m = [None] * (2 * n)

        def node(tag):
            row, k = tag[0].upper(), int(tag[1:])
            if row not in "NS" or not 1 <= k <= n:
                raise ValueError(f"bad node tag {tag!r}")
            return k - 1 if row == "N" else n + k - 1

        for a, b in edges:
            x, y = node(a), node(b)
            if m[x] is not None or m[y] is not None:
                raise ValueError("node used twice")
            m[x], m[y] = y, x
        if None in m:
            raise ValueError("some node is unmatched")
        return cls(r, s, tuple(m))

    @classmethod
    def from_permutation(cls, r, s, perm) -> "WalledDiagram":
        """Permutation diagram joining north i to south perm[i] (0-based)."""
        n = r + s
        m = [0] * (2 * n)
        for i, j in enumerate(perm):
            m[i] = n + j
            m[n + j] = i
        return cls(r, s, tuple(m))

    @classmethod
    def arc(cls, r, s, i, j) -> "WalledDiagram":
        """E_{i,j}: arcs i--j on both rows (1-based, i <= r < j), other strands straight."""
        if not (1 <= i <= r < j <= r + s):
            raise ValueError(f"E_{i},{j} needs 1 <= i <= r < j <= r+s")
        n = r + s
        m = list(range(n, 2 * n)) + list(range(n))
        m[i - 1], m[j - 1] = j - 1, i - 1
        m[n + i - 1], m[n + j - 1] = n + j - 1, n + i - 1
        return cls(r, s, tuple(m))

    def edges(self) -> list:
        out = []
        for x, y in enumerate(self.match):
            if x < y:
                out.append((self._tag(x), self._tag(y)))
        return out

    def to_json(self):
        return {"r": self.r, "s": self.s, "edges": [list(e) for e in self.edges()]}

    def north_arcs(self) -> list:
        n = self.n
        return sorted((x + 1, y + 1) for x, y in enumerate(self.match) if x < y < n)

    def south_arcs(self) -> list:
        n = self.n
        return sorted((x - n + 1, y - n + 1) for x, y in enumerate(self.match) if n <= x < y)

    def perm(self) -> dict:
        """Propagating lines as a dict south strand -> north strand (1-based)."""
        n = self.n
        return {y - n + 1: x + 1 for x, y in enumerate(self.match) if x < n <= y}

    def __repr__(self):
        return f"WalledDiagram({self.r},{self.s},{self.edges()})"


def multiply(a: WalledDiagram, b: WalledDiagram):
    """Place a above b; returns (closed loops, reduced diagram)."""
    if (a.r, a.s) != (b.r, b.s):
        raise AmbientMismatch(f"cannot multiply B_{a.r},{a.s} by B_{b.r},{b.s}")
    n = a.n
    loops, m = _compose(n, n, n, a.match, b.match)
    return loops, WalledDiagram(a.r, a.s, m)


def involution(d: WalledDiagram) -> WalledDiagram:
    n = d.n
    flip = lambda x: x + n if x < n else x - n  # noqa: E731
    m = [0] * (2 * n)
    for x, y in enumerate(d.match):
        m[flip(x)] = flip(y)
    return WalledDiagram(d.r, d.s, tuple(m))


def propagating_vector(d: WalledDiagram):
    n = d.n
    a = b = 0
    for x in range(n):
        if d.match[x] >= n:
            if x < d.r:
                a += 1
            else:
                b += 1
    return a, b


def ideal_layer(d: WalledDiagram) -> int:
    return d.r - propagating_vector(d)[0]


@dataclass(frozen=True, order=True)
class PartialOneRow:
    r: int
    s: int
    arcs: tuple

    def __post_init__(self):
        used = set()
        for i, j in self.arcs:
            if not (1 <= i <= self.r < j <= self.r + self.s):
                raise ValueError(f"arc ({i},{j}) must join a left node to a right node")
            if i in used or j in used:
                raise ValueError("arcs must be disjoint")
            used.update((i, j))

    @property
    def t(self) -> int:
        return len(self.arcs)

    def free(self) -> list:
        """Strands not on an arc, increasing (1-based)."""
        used = {x for a in self.arcs for x in a}
        return [k for k in range(1, self.r + self.s + 1) if k not in used]


def one_row_diagrams(r, s, t) -> list:
    """The set of partial one-row diagrams with t arcs, ordered by sorted arc tuples."""
    out = []
    for lefts in combinations(range(1, r + 1), t):
        for rights in permutations(range(r + 1, r + s + 1), t):
            out.append(tuple(sorted(zip(lefts, rights))))
    return [PartialOneRow(r, s, arcs) for arcs in sorted(set(out))]


def count_one_row(r, s, t) -> int:
    from math import comb
    return comb(r, t) * comb(s, t) * factorial(t)


def assemble(v: PartialOneRow, w: PartialOneRow, sigma) -> WalledDiagram:
    """X_{v,w,sigma}: north arcs v, south arcs w, k-th free north strand to sigma[k]-th free south strand."""
    r, s = v.r, v.s
    n = r + s
    m = [None] * (2 * n)
    for i, j in v.arcs:
        m[i - 1], m[j - 1] = j - 1, i - 1
    for i, j in w.arcs:
        m[n + i - 1], m[n + j - 1] = n + j - 1, n + i - 1
    fn, fs = v.free(), w.free()
    if len(fn) != len(fs) or sorted(sigma) != list(range(len(fn))):
        raise ValueError("sigma does not match the free strands")
    for k, x in enumerate(fn):
        y = fs[sigma[k]]
        m[x - 1], m[n + y - 1] = n + y - 1, x - 1
    return WalledDiagram(r, s, tuple(m))


def factor_one_row(d: WalledDiagram):
    """Inverse of :func:`assemble`."""
    n = d.n
    v = PartialOneRow(d.r, d.s, tuple(d.north_arcs()))
    w = PartialOneRow(d.r, d.s, tuple(d.south_arcs()))
    fs = {y: k for k, y in enumerate(w.free())}
    sigma = tuple(fs[d.match[x - 1] - n + 1] for x in v.free())
    return v, w, sigma


def wall_permutations(a, b) -> Iterator[tuple]:
    """Permutations of range(a+b) preserving the blocks {0..a-1} and {a..a+b-1}."""
    for p in permutations(range(a)):
        for q in permutations(range(a, a + b)):
            yield p + q


def enumerate_basis(r, s, bound: int = BASIS_BOUND) -> list:
    """Every walled diagram once, grouped by layer then (v, w, sigma)."""
    if r + s > bound:
        raise ValueError(f"r+s = {r + s} exceeds the enumeration bound {bound}")
    out = []
    for t in range(min(r, s) + 1):
        rows = one_row_diagrams(r, s, t)
        perms = list(wall_permutations(r - t, s - t))
        for v, w, sigma in product(rows, rows, perms):
            out.append(assemble(v, w, sigma))
    return out


def embed_psi(d: WalledDiagram, side: str) -> WalledDiagram:
    """Insert a propagating line just left (L) or right (R) of the wall."""
    side = side.upper()
    if side not in ("L", "R"):
        raise ValueError("side must be L or R")
    r, s = (d.r + 1, d.s) if side == "L" else (d.r, d.s + 1)
    new = d.r  # 0-based position of the inserted strand in both cases
    n_old, n = d.n, d.n + 1

    def shift(x):
        row, k = divmod(x, n_old)
        k = k + 1 if k >= new else k
        return row * n + k

    m = [None] * (2 * n)
    for x, y in enumerate(d.match):
        m[shift(x)] = shift(y)
    m[new], m[n + new] = n + new, new
    return WalledDiagram(r, s, tuple(m))


def nested_arc_diagram(r, s, i) -> WalledDiagram:
    """Arcs (r-k, r+1+k) for k < i on both rows, remaining strands straight."""
    if not 0 <= i <= min(r, s):
        raise ValueError(f"need 0 <= i <= min(r, s), got i={i}")
    arcs = tuple(sorted((r - k, r + 1 + k) for k in range(i)))
    v = PartialOneRow(r, s, arcs)
    return assemble(v, v, tuple(range(r + s - 2 * i)))


def _rect(top, bottom, pairs):
    m = [None] * (top + bottom)
    for x, y in pairs:
        m[x], m[y] = y, x
    return tuple(m)


def corner_maps(r, s, zero_delta: bool):
    """Rectangular diagrams (U, W) with Phi(x) = U x W.

    U has r+s top and r+s-2 bottom nodes, W the reverse. For nonzero delta
    W.U closes one loop; the zero-delta pair is a zigzag with W.U = 1.
    """
    n, m = r + s, r + s - 2
    # U: top arc {r, r+1}; other top strands to the bottom in order
    u_pairs = [(r - 1, r)]
    for i in range(r - 1):
        u_pairs.append((i, n + i))
    for j in range(r + 1, n):
        u_pairs.append((j, n + j - 2))
    u = _rect(n, m, u_pairs)
    if not zero_delta:
        w_pairs = [(m + r - 1, m + r)]
        for i in range(r - 1):
            w_pairs.append((i, m + i))
        for j in range(r + 1, n):
            w_pairs.append((j - 2, m + j))
    elif s >= 2:
        # bottom arc {r, r+2}, bottom r+1 to the first right strand on top
        w_pairs = [(m + r - 1, m + r + 1), (r - 1, m + r)]
        for i in range(r - 1):
            w_pairs.append((i, m + i))
        for j in range(r + 2, n):
            w_pairs.append((j - 2, m + j))
    elif r >= 2:
        # bottom arc {r-1, r+1}, bottom r to the last left strand on top
        w_pairs = [(m + r - 2, m + r), (r - 2, m + r - 1)]
        for i in range(r - 2):
            w_pairs.append((i, m + i))
        for j in range(r + 1, n):
            w_pairs.append((j - 2, m + j))
    else:
        raise IdempotentUnavailable(
            f"no idempotent for B_{r},{s} at delta = 0 (needs r >= 2 or s >= 2)")
    return u, _rect(m, n, w_pairs)


def phi_diagram(d: WalledDiagram, zero_delta: bool):
    """U.d.W as (loops, diagram) in B_{r+1,s+1}; scale by delta^-1 when delta != 0."""
    r, s = d.r + 1, d.s + 1
    n = r + s
    u, w = corner_maps(r, s, zero_delta)
    loops1, ud = _compose(n, n - 2, n - 2, u, d.match)
    loops2, udw = _compose(n, n - 2, n, ud, w)
    return loops1 + loops2, WalledDiagram(r, s, udw)


class DiagramElement:
    """Finite linear combination of diagrams with coefficients in a context."""

    def __init__(self, r, s, ctx, terms=None):
        self.r, self.s, self.ctx = r, s, ctx
        self.terms = {}
        for d, c in (terms or {}).items():
            if (d.r, d.s) != (r, s):
                raise AmbientMismatch("diagram ambient differs from element ambient")
            c = ctx.coerce(c)
            if c:
                self.terms[d] = c

    @classmethod
    def basis(cls, d: WalledDiagram, ctx, coeff=1) -> "DiagramElement":
        return cls(d.r, d.s, ctx, {d: coeff})

    def _check(self, other):
        if (self.r, self.s) != (other.r, other.s):
            raise AmbientMismatch(f"B_{self.r},{self.s} vs B_{other.r},{other.s}")
        if self.ctx != other.ctx:
            raise AmbientMismatch("elements live in different scalar contexts")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, self.ctx.zero) + c
        return DiagramElement(self.r, self.s, self.ctx, out)

    def __neg__(self):
        return DiagramElement(self.r, self.s, self.ctx, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "DiagramElement":
        c = self.ctx.coerce(c)
        return DiagramElement(self.r, self.s, self.ctx, {d: c * x for d, x in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        out = {}
        delta = self.ctx.delta
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                k, d = multiply(a, b)
                out[d] = out.get(d, self.ctx.zero) + x * y * delta ** k
        return DiagramElement(self.r, self.s, self.ctx, out)

    def involution(self) -> "DiagramElement":
        return DiagramElement(self.r, self.s, self.ctx,
                              {involution(d): c for d, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, DiagramElement):
            return NotImplemented
        return (self.r, self.s, self.ctx) == (other.r, other.s, other.ctx) and self.terms == other.terms

    def __repr__(self):
        body = " + ".join(f"{c}*{d.edges()}" for d, c in sorted(self.terms.items(), key=lambda t: t[0].match))
        return f"DiagramElement(B_{self.r},{self.s}: {body or 0})"


def _phi_element(x: DiagramElement) -> DiagramElement:
    ctx = x.ctx
    zero_delta = ctx.delta_is_zero()
    inv = ctx.one if zero_delta else ctx.one / ctx.delta
    out = {}
    for d, c in x.terms.items():
        k, pd = phi_diagram(d, zero_delta)
        out[pd] = out.get(pd, ctx.zero) + c * inv * ctx.delta ** k
    return DiagramElement(x.r + 1, x.s + 1, ctx, out)


def phi(x: DiagramElement) -> DiagramElement:
    """Corner embedding of B_{r-1,s-1} into e B_{r,s} e."""
    if not x.ctx.is_field:
        raise IdempotentUnavailable("the corner embedding needs delta invertible or zero in a field")
    return _phi_element(x)


def idempotent_e(r, s, i, ctx) -> DiagramElement:
    """e_{r,s,i}; built by iterating the corner embedding on the identity."""
    if not 0 <= i <= min(r, s):
        raise IdempotentUnavailable(f"e_{r},{s},{i} needs 0 <= i <= min(r, s)")
    if not ctx.is_field:
        raise IdempotentUnavailable("delta is not invertible in the symbolic context")
    if ctx.delta_is_zero() and i and r == s == i:
        raise IdempotentUnavailable(f"e_{r},{r},{r} is not defined at delta = 0")
    x = DiagramElement.basis(WalledDiagram.identity(r - i, s - i), ctx)
    for _ in range(i):
        x = phi(x)
    return x
