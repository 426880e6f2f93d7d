"""Slow, independent reference computations used only by the tests.

Nothing here calls the code under test for the quantity it is checking;
each helper recomputes from definitions (brute force, characters, or plain
Fraction elimination).
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial, prod


# --- partitions and characters ---

def all_partitions(n, cap=None):
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for k in range(min(n, cap), 0, -1):
        for rest in all_partitions(n - k, k):
            yield (k,) + rest


def syt_count_brute(shape) -> int:
    """Count fillings by 1..n with increasing rows and columns (n <= 7)."""
    n = sum(shape)
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    count = 0
    for perm in permutations(range(1, n + 1)):
        grid = dict(zip(cells, perm))
        if all((j == 0 or grid[(i, j - 1)] < v) and (i == 0 or grid[(i - 1, j)] < v)
               for (i, j), v in grid.items()):
            count += 1
    return count


def _beta(shape, length):
    parts = list(shape) + [0] * (length - len(shape))
    return [parts[i] + length - 1 - i for i in range(length)]


def mn_character(shape, cycle_type) -> int:
    """chi^shape on the class of the given cycle type, by Murnaghan-Nakayama on beta-sets."""
    if sum(shape) != sum(cycle_type):
        raise ValueError("degree mismatch")
    if not cycle_type:
        return 1
    k, rest = cycle_type[0], cycle_type[1:]
    length = len(shape) + k
    beta = _beta(shape, length)
    total = 0
    bset = set(beta)
    for b in beta:
        if b - k >= 0 and b - k not in bset:
            # sign = (-1)^(number of beads strictly between b-k and b)
            height = sum(1 for x in beta if b - k < x < b)
            new = sorted((bset - {b}) | {b - k}, reverse=True)
            parts = [new[i] - (length - 1 - i) for i in range(length)]
            new_shape = tuple(x for x in parts if x > 0)
            total += (-1) ** height * mn_character(new_shape, rest)
    return total


def centralizer_size(cycle_type) -> int:
    out = 1
    for k in set(cycle_type):
        m = cycle_type.count(k)
        out *= k ** m * factorial(m)
    return out


def lr_by_characters(lam, mu, nu) -> int:
    """<chi^lam restricted to S_a x S_b, chi^mu x chi^nu> summed over classes."""
    a, b = sum(mu), sum(nu)
    if sum(lam) != a + b:
        return 0
    total = Fraction(0)
    for alpha in all_partitions(a):
        for beta in all_partitions(b):
            joint = tuple(sorted(alpha + beta, reverse=True))
            total += Fraction(mn_character(mu, alpha) * mn_character(nu, beta)
                              * mn_character(lam, joint),
                              centralizer_size(alpha) * centralizer_size(beta))
    assert total.denominator == 1
    return int(total)


# --- diagrams ---

def brute_walled_matchings(r, s) -> set:
    """Every perfect matching of 2(r+s) nodes obeying the wall rules, as frozensets of pairs."""
    n = r + s
    nodes = list(range(2 * n))

    def side(x):
        return (x % n) < r

    def ok(x, y):
        same_row = (x < n) == (y < n)
        return side(x) != side(y) if same_row else side(x) == side(y)

    out = set()

    def rec(free, acc):
        if not free:
            out.add(frozenset(acc))
            return
        x = free[0]
        for y in free[1:]:
            if ok(x, y):
                rec([z for z in free if z not in (x, y)], acc + [(x, y)])

    rec(nodes, [])
    return out


def stack_product(a_match, b_match, n):
    """Compose two matchings on 2n nodes with a union-find over 3n points; returns (loops, pairs)."""
    parent = list(range(3 * n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    # a: top row 0..n-1, middle n..2n-1 ; b: middle n..2n-1, bottom 2n..3n-1
    for x, y in enumerate(a_match):
        union(x, y)
    for x, y in enumerate(b_match):
        union(x + n, y + n)
    outer = list(range(n)) + list(range(2 * n, 3 * n))
    comps = {}
    for x in outer:
        comps.setdefault(find(x), []).append(x)
    pairs = set()
    for members in comps.values():
        assert len(members) == 2
        u, v = (m if m < n else m - n for m in members)
        pairs.add((min(u, v), max(u, v)))
    middle_roots = {find(x) for x in range(n, 2 * n)}
    loops = len(middle_roots - set(comps))
    return loops, pairs


def match_pairs(match) -> set:
    return {(x, y) for x, y in enumerate(match) if x < y}


# --- linear algebra ---

def frac_rank(rows) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def leibniz_det(a):
    n = len(a)
    total = 0
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        total += (-1) ** inv * prod(a[i][p[i]] for i in range(n))
    return total


def dense_hom_dim(src_mats, tgt_mats) -> int:
    """dim {M : M A = B M for every pair} by rank of the Kronecker system over Q."""
    rows = []
    for a, b in zip(src_mats, tgt_mats):
        ns, nt = len(a), len(b)
        for i in range(nt):
            for k in range(ns):
                row = [Fraction(0)] * (nt * ns)
                for j in range(ns):
                    row[i * ns + j] += a[j][k]
                for l in range(nt):
                    row[l * ns + k] -= b[i][l]
                rows.append(row)
    nvars = len(tgt_mats[0]) * len(src_mats[0]) if src_mats else 0
    return nvars - (frac_rank(rows) if rows else 0)


# --- matchings and orbits ---

def brute_matching_exists(n, allowed) -> bool:
    return any(all(allowed(i, p[i]) for i in range(n)) for p in permutations(range(n)))


def reflection_orbit(start, roots, reflect, limit):
    """Closure of ``start`` under ``reflect(w, root)`` keeping states with all |entries| <= limit."""
    seen, frontier = {start}, [start]
    while frontier:
        nxt = []
        for w in frontier:
            for root in roots:
                v = reflect(w, root)
                if max(abs(x) for x in v) <= limit and v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen
