"""Cell modules of the walled Brauer algebra as explicit matrices.

A basis vector is a pair (v, x): a partial one-row diagram v with t arcs
(the northern half of X_{v,1,id}) and a basis vector x of the product of
two Specht modules. Matrices are built once over Z[delta] and specialised
afterwards.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .combinatorics import (Bipartition, Partition, add_box, addable_boxes, content_sum,
                            lr_coefficient, partitions, remove_box, removable_boxes, specht_dim)
from .diagrams import (PartialOneRow, WalledDiagram, assemble, count_one_row, involution,
                       multiply, one_row_diagrams, propagating_vector)
from .linalg import SparseEchelon, bareiss_det, identity, kron, matadd, matmul, specialize
from .scalars import Poly
from .specht import build_specht, inverse

CELL_BOUND = 6


@dataclass(frozen=True, order=True)
class CellLabel:
    r: int
    s: int
    t: int
    left: Partition
    right: Partition

    def __post_init__(self):
        object.__setattr__(self, "left", Partition(self.left))
        object.__setattr__(self, "right", Partition(self.right))
        if not 0 <= self.t <= min(self.r, self.s):
            raise ValueError(f"layer t={self.t} out of range for ({self.r},{self.s})")
        if self.left.degree != self.r - self.t or self.right.degree != self.s - self.t:
            raise ValueError(
                f"({self.left},{self.right}) must have sizes ({self.r - self.t},{self.s - self.t})")

    @classmethod
    def of(cls, r, s, left, right) -> "CellLabel":
        """Label in B_{r,s}; the layer is read off from the partition sizes."""
        left, right = Partition(left), Partition(right)
        t = r - left.degree
        if s - right.degree != t:
            raise ValueError(f"sizes {left.degree},{right.degree} do not fit B_{r},{s}")
        return cls(r, s, t, left, right)

    @property
    def bipartition(self) -> Bipartition:
        return Bipartition(self.left, self.right)

    def globalize(self, k: int = 1) -> "CellLabel":
        return CellLabel(self.r + k, self.s + k, self.t + k, self.left, self.right)

    def __str__(self):
        return f"B_{self.r},{self.s}[t={self.t}]{self.bipartition}"


def cell_labels(r, s) -> list:
    """All cell labels of B_{r,s}, by layer then partitions in reverse lexicographic order."""
    out = []
    for t in range(min(r, s) + 1):
        for lam in partitions(r - t):
            for mu in partitions(s - t):
                out.append(CellLabel(r, s, t, lam, mu))
    return out


def cell_dim(label: CellLabel) -> int:
    return count_one_row(label.r, label.s, label.t) * specht_dim(label.left) * specht_dim(label.right)


def base_row(r, s, t) -> PartialOneRow:
    """Southern half of e_{r,s,t}: nested arcs around the wall."""
    return PartialOneRow(r, s, tuple(sorted((r - k, r + 1 + k) for k in range(t))))


def transposition_diagram(r, s, i, m) -> WalledDiagram:
    """Diagram of the transposition of strands i and m (1-based, same side of the wall)."""
    p = list(range(r + s))
    p[i - 1], p[m - 1] = p[m - 1], p[i - 1]
    return WalledDiagram.from_permutation(r, s, p)


def generators(r, s) -> list:
    """Named Coxeter transpositions of Sigma_r x Sigma_s plus E_{r,r+1}."""
    out = []
    for k in range(1, r + s):
        if k != r:
            out.append((f"s{k}", transposition_diagram(r, s, k, k + 1)))
    if r and s:
        out.append((f"E{r},{r + 1}", WalledDiagram.arc(r, s, r, r + 1)))
    return out


def _zero(n, m):
    return [[Poly()] * m for _ in range(n)]


@dataclass
class CellModuleRep:
    label: CellLabel
    rows: list
    left_rep: object
    right_rep: object
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def specht_dim(self) -> int:
        return self.left_rep.dim * self.right_rep.dim

    @property
    def dim(self) -> int:
        return len(self.rows) * self.specht_dim

    @property
    def basis(self) -> list:
        return [(v, a, b) for v in self.rows for a in self.left_rep.basis for b in self.right_rep.basis]

    def _free_perm_matrix(self, perm):
        key = ("perm", perm)
        if key not in self._cache:
            a = self.label.r - self.label.t
            left = tuple(perm[:a])
            right = tuple(x - a for x in perm[a:])
            self._cache[key] = kron(self.left_rep.act(left), self.right_rep.act(right))
        return self._cache[key]

    def _full_perm(self, c: WalledDiagram, v: PartialOneRow, w: PartialOneRow):
        """For C = X_{v,w,*}: perm[j] = index among v's free strands joined to w's j-th free strand."""
        n = c.n
        north_index = {x: k for k, x in enumerate(v.free())}
        return tuple(north_index[c.match[n + y - 1] + 1] for y in w.free())

    def action(self, d: WalledDiagram) -> list:
        """Matrix of a diagram over Z[delta]."""
        lab = self.label
        if (d.r, d.s) != (lab.r, lab.s):
            raise ValueError(f"diagram lives in B_{d.r},{d.s}, module in B_{lab.r},{lab.s}")
        key = ("act", d)
        if key in self._cache:
            return self._cache[key]
        one = base_row(lab.r, lab.s, lab.t)
        index = {v: k for k, v in enumerate(self.rows)}
        m = self.specht_dim
        out = _zero(self.dim, self.dim)
        ident = tuple(range(lab.r + lab.s - 2 * lab.t))
        full = (lab.r - lab.t, lab.s - lab.t)
        for col, v in enumerate(self.rows):
            loops, c = multiply(d, assemble(v, one, ident))
            if propagating_vector(c) != full:
                continue
            v2 = PartialOneRow(lab.r, lab.s, tuple(c.north_arcs()))
            block = self._free_perm_matrix(self._full_perm(c, v2, one))
            coeff = Poly.monomial(loops)
            row0, col0 = index[v2] * m, col * m
            for i in range(m):
                for j in range(m):
                    if block[i][j]:
                        out[row0 + i][col0 + j] = out[row0 + i][col0 + j] + coeff * block[i][j]
        self._cache[key] = out
        return out

    def gen_matrices(self) -> dict:
        return {name: self.action(d) for name, d in generators(self.label.r, self.label.s)}

    def gram_matrix(self) -> list:
        """Cellular form: pairs X_v, X_w through i(X_v).X_w and the Specht form."""
        if "gram" in self._cache:
            return self._cache["gram"]
        lab = self.label
        one = base_row(lab.r, lab.s, lab.t)
        ident = tuple(range(lab.r + lab.s - 2 * lab.t))
        full = (lab.r - lab.t, lab.s - lab.t)
        form_s = kron([list(x) for x in self.left_rep.form], [list(x) for x in self.right_rep.form])
        m = self.specht_dim
        out = _zero(self.dim, self.dim)
        xs = [assemble(v, one, ident) for v in self.rows]
        for a, xa in enumerate(xs):
            top = involution(xa)
            for b, xb in enumerate(xs):
                loops, c = multiply(top, xb)
                if propagating_vector(c) != full:
                    continue
                block = matmul(form_s, self._free_perm_matrix(self._full_perm(c, one, one)))
                coeff = Poly.monomial(loops)
                for i in range(m):
                    for j in range(m):
                        if block[i][j]:
                            out[a * m + i][b * m + j] = coeff * block[i][j]
        self._cache["gram"] = out
        return out

    def gram_det(self) -> Poly:
        if "det" not in self._cache:
            det = bareiss_det(self.gram_matrix())
            self._cache["det"] = det if isinstance(det, Poly) else Poly((det,))
        return self._cache["det"]

    def t_element_matrix(self) -> list:
        lab = self.label
        total = _zero(self.dim, self.dim)
        for i in range(1, lab.r + 1):
            for j in range(lab.r + 1, lab.r + lab.s + 1):
                total = matadd(total, self.action(WalledDiagram.arc(lab.r, lab.s, i, j)))
        return total

    def t_element_rhs(self) -> list:
        """The predicted value of the arc sum: scalar part plus the two transposition sums."""
        lab = self.label
        scalar = Poly((0, lab.t)) - content_sum(lab.left) - content_sum(lab.right)
        out = identity(self.dim, scalar, Poly())
        for lo, hi in ((1, lab.r), (lab.r + 1, lab.r + lab.s)):
            for i in range(lo, hi + 1):
                for m in range(i + 1, hi + 1):
                    out = matadd(out, self.action(transposition_diagram(lab.r, lab.s, i, m)))
        return out

    def specialized(self, ctx) -> dict:
        """Generator matrices pushed into a field context."""
        key = ("spec", ctx)
        if key not in self._cache:
            self._cache[key] = {name: specialize(a, ctx) for name, a in self.gen_matrices().items()}
        return self._cache[key]


@lru_cache(maxsize=None)
def build_cell_module(label: CellLabel, bound: int = CELL_BOUND) -> CellModuleRep:
    if label.r + label.s > bound:
        raise ValueError(f"r+s = {label.r + label.s} exceeds the cell-module bound {bound}")
    return CellModuleRep(label, one_row_diagrams(label.r, label.s, label.t),
                         build_specht(label.left), build_specht(label.right))


def gram_matrix(rep: CellModuleRep) -> list:
    return rep.gram_matrix()


def t_element_matrix(rep: CellModuleRep) -> list:
    return rep.t_element_matrix()


class SymbolicContextError(ValueError):
    pass


def hom_space_dim(source: CellLabel, target: CellLabel, ctx) -> int:
    """dim Hom(Delta(source), Delta(target)) by solving M A_src(g) = A_tgt(g) M."""
    if (source.r, source.s) != (target.r, target.s):
        raise ValueError("labels live in different algebras")
    if not ctx.is_field:
        raise SymbolicContextError("hom dimensions depend on delta; pick a rational or prime-field delta")
    src_rep, tgt_rep = build_cell_module(source), build_cell_module(target)
    ns, nt = src_rep.dim, tgt_rep.dim
    src, tgt = src_rep.specialized(ctx), tgt_rep.specialized(ctx)
    ech = SparseEchelon()
    for name in src:
        a, b = src[name], tgt[name]
        a_cols = [[(j, a[j][k]) for j in range(ns) if a[j][k]] for k in range(ns)]
        b_rows = [[(l, b[i][l]) for l in range(nt) if b[i][l]] for i in range(nt)]
        for i in range(nt):
            for k in range(ns):
                # (M A)[i][k] - (B M)[i][k]
                row = {}
                for j, x in a_cols[k]:
                    c = i * ns + j
                    row[c] = row.get(c, 0) + x
                for l, y in b_rows[i]:
                    c = l * ns + k
                    row[c] = row.get(c, 0) - y
                ech.add(row)
    return ns * nt - ech.rank


def restriction_terms(label: CellLabel, side: str) -> list:
    """Labels of the filtration factors of the restriction to B_{r-1,s} (L) or B_{r,s-1} (R)."""
    side = side.upper()
    r, s, t, lam_l, lam_r = label.r, label.s, label.t, label.left, label.right
    out = []
    if side == "L":
        if r == 0:
            raise ValueError("cannot restrict on the left when r = 0")
        for b in sorted(removable_boxes(lam_l)):
            out.append(CellLabel(r - 1, s, t, remove_box(lam_l, b), lam_r))
        if t > 0:
            for b in sorted(addable_boxes(lam_r)):
                out.append(CellLabel(r - 1, s, t - 1, lam_l, add_box(lam_r, b)))
    elif side == "R":
        if s == 0:
            raise ValueError("cannot restrict on the right when s = 0")
        for b in sorted(removable_boxes(lam_r)):
            out.append(CellLabel(r, s - 1, t, lam_l, remove_box(lam_r, b)))
        if t > 0:
            for b in sorted(addable_boxes(lam_l)):
                out.append(CellLabel(r, s - 1, t - 1, add_box(lam_l, b), lam_r))
    else:
        raise ValueError("side must be L or R")
    return out


def restriction_dim_check(label: CellLabel, side: str) -> bool:
    return cell_dim(label) == sum(cell_dim(x) for x in restriction_terms(label, side))


def halverson_multiplicity(label: CellLabel, target: Bipartition) -> int:
    tl, tr = Partition(target[0]), Partition(target[1])
    if tl.degree != label.r or tr.degree != label.s:
        raise ValueError(f"target must be a bipartition of ({label.r},{label.s})")
    return sum(lr_coefficient(tl, label.left, tau) * lr_coefficient(tr, label.right, tau)
               for tau in partitions(label.t))


def halverson_audit(label: CellLabel) -> Optional[tuple]:
    """(sum of multiplicity * dim, dim Delta); equal when the decomposition is consistent."""
    total = 0
    for a in partitions(label.r):
        for b in partitions(label.s):
            mult = halverson_multiplicity(label, Bipartition(a, b))
            total += mult * specht_dim(a) * specht_dim(b)
    return total, cell_dim(label)


def permutation_trace(rep: CellModuleRep, perm) -> int:
    """Trace of a wall-preserving permutation; no loops arise so the value is an integer."""
    d = WalledDiagram.from_permutation(rep.label.r, rep.label.s, inverse(perm))
    a = rep.action(d)
    total = Poly()
    for i in range(len(a)):
        total = total + a[i][i]
    if total.degree > 0:
        raise ArithmeticError("permutation trace depends on delta")
    return total.coeffs[0] if total.coeffs else 0
