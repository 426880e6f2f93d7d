"""Bipartite perfect matching by augmenting paths (Kuhn's algorithm).

The graphs here have at most a few dozen vertices per side, so the simple
O(V E) method is plenty.
"""
from __future__ import annotations

from typing import Callable, Optional, Sequence


def perfect_matching(left: Sequence, right: Sequence,
                     allowed: Callable[[object, object], bool]) -> Optional[list]:
    """Return ``m`` with left[i] matched to right[m[i]], or None if no perfect matching exists."""
    if len(left) != len(right):
        return None
    adj = [[j for j, b in enumerate(right) if allowed(a, b)] for a in left]
    owner = [-1] * len(right)

    def augment(i, seen):
        for j in adj[i]:
            if seen[j]:
                continue
            seen[j] = True
            if owner[j] < 0 or augment(owner[j], seen):
                owner[j] = i
                return True
        return False

    for i in range(len(left)):
        if not augment(i, [False] * len(right)):
            return None
    out = [0] * len(left)
    for j, i in enumerate(owner):
        out[i] = j
    return out
