"""Planar diagram basis of the Temperley-Lieb algebra TL_n.

A basis diagram is a noncrossing perfect matching of 2n boundary points of a
rectangle. Boundary points are numbered counterclockwise from the bottom
left: bottom points 0..n-1 left to right, then top points n..2n-1 right to
left. A diagram is stored as the tuple ``partner`` with ``partner[i]`` the
point matched to ``i``.

The basis is ordered by the lexicographic order of the sorted arc lists
``[(i, partner[i]) for i < partner[i]]``; this is the order in which
``noncrossing_matchings`` generates them and is stable across runs.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

import numpy as np


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def noncrossing_matchings(points: int) -> list[tuple[int, ...]]:
    """All noncrossing perfect matchings of ``0..points-1`` in lexicographic arc order."""
    out: list[tuple[int, ...]] = []

    def rec(partner: list[int]):
        try:
            i = partner.index(-1)
        except ValueError:
            out.append(tuple(partner))
            return
        # i is the smallest free point; its partner j must leave an even,
        # self-contained interval between them
        for j in range(i + 1, points, 2):
            if partner[j] != -1:
                break
            if any(partner[k] != -1 for k in range(i + 1, j)):
                break
            partner[i], partner[j] = j, i
            rec(partner)
            partner[i] = partner[j] = -1

    rec([-1] * points)
    return out


def _top(n: int, j: int) -> int:
    """Boundary label of the j-th top point (0-based, left to right)."""
    return 2 * n - 1 - j


def identity_diagram(n: int) -> tuple[int, ...]:
    partner = [0] * (2 * n)
    for j in range(n):
        partner[j], partner[_top(n, j)] = _top(n, j), j
    return tuple(partner)


def generator_diagram(n: int, i: int) -> tuple[int, ...]:
    """e_i (1-based): cup on bottom points i-1, i and cap on top points i-1, i."""
    partner = list(identity_diagram(n))
    a, b = i - 1, i
    partner[a], partner[b] = b, a
    ta, tb = _top(n, a), _top(n, b)
    partner[ta], partner[tb] = tb, ta
    return tuple(partner)


def stack(n: int, lower: tuple[int, ...], upper: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Place ``upper`` on top of ``lower``; return the reduced diagram and the closed loops removed."""
    size = 2 * n
    parent = list(range(2 * size))  # lower point x -> x, upper point x -> size + x

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for x in range(size):
        union(x, lower[x])
        union(size + x, size + upper[x])
    for j in range(n):
        union(_top(n, j), size + j)  # top j of lower is bottom j of upper

    outer = list(range(n)) + [size + x for x in range(n, size)]
    owner: dict[int, int] = {}
    result = [-1] * size
    for x in outer:
        label = x if x < size else x - size
        root = find(x)
        if root in owner:
            other = owner.pop(root)
            result[label], result[other] = other, label
        else:
            owner[root] = label
    inner_roots = {find(x) for x in range(2 * size)} - {find(x) for x in outer}
    return tuple(result), len(inner_roots)


def closure_loops(n: int, diagram: tuple[int, ...]) -> int:
    """Loops in the Markov closure (top point j joined to bottom point j)."""
    parent = list(range(2 * n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for i, j in enumerate(diagram):
        union(i, j)
    for j in range(n):
        union(j, _top(n, j))
    return len({find(x) for x in range(2 * n)})


class TLBasis:
    """Indexed diagram basis of TL_n with precomputed right action of each e_i."""

    def __init__(self, n: int):
        self.n = n
        self.diagrams = noncrossing_matchings(2 * n) if n else [()]
        self.index = {d: k for k, d in enumerate(self.diagrams)}
        self.identity = self.index[identity_diagram(n)] if n else 0
        self.closure_loops = np.array([closure_loops(n, d) for d in self.diagrams], dtype=np.int64)
        self._action: dict[int, tuple[np.ndarray, np.ndarray]] = {}

    def __len__(self) -> int:
        return len(self.diagrams)

    def action(self, i: int) -> tuple[np.ndarray, np.ndarray]:
        """Target indices and removed-loop counts of ``D -> D e_i`` for every basis diagram D."""
        if i not in self._action:
            ta, tb = _top(self.n, i - 1), _top(self.n, i)
            targets = np.empty(len(self.diagrams), dtype=np.int64)
            loops = np.zeros(len(self.diagrams), dtype=np.int64)
            for k, d in enumerate(self.diagrams):
                x, y = d[ta], d[tb]
                if x == tb:
                    # D already caps these two top points: the cup of e_i closes a loop
                    targets[k] = k
                    loops[k] = 1
                    continue
                prod = list(d)
                prod[x], prod[y] = y, x
                prod[ta], prod[tb] = tb, ta
                targets[k] = self.index[tuple(prod)]
            self._action[i] = (targets, loops)
        return self._action[i]

    def fan_in(self, i: int) -> int:
        """Largest number of basis diagrams that ``D -> D e_i`` sends to one diagram."""
        targets, _ = self.action(i)
        return int(np.bincount(targets, minlength=1).max())


@lru_cache(maxsize=16)
def tl_basis(n: int) -> TLBasis:
    return TLBasis(n)
