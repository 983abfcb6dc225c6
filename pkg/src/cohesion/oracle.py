"""Brute-force reference implementations for small graphs.

Nothing here shares code with the fast paths in :mod:`cohesion.triangles`
or :mod:`cohesion.detection`; these are definitional transcriptions meant for
cross-checking only.
"""

from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction
from itertools import combinations
from math import comb

from .graph import Graph
from .triangles import TriangleStats

__all__ = [
    "OracleLimitError",
    "naive_triangles",
    "naive_triangle_stats",
    "naive_cohesion",
    "naive_connectivity_classes",
    "brute_force_best_set",
]

NAIVE_LIMIT = 64
EXHAUSTIVE_LIMIT = 20


class OracleLimitError(ValueError):
    """Input too large for an exhaustive reference computation."""


def naive_triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All vertex triples that are pairwise adjacent, by checking every triple."""
    if g.node_count > NAIVE_LIMIT:
        raise OracleLimitError(f"naive enumeration limited to {NAIVE_LIMIT} nodes")
    return [
        (u, v, w)
        for u, v, w in combinations(range(g.node_count), 3)
        if g.has_edge(u, v) and g.has_edge(u, w) and g.has_edge(v, w)
    ]


def naive_triangle_stats(g: Graph, s: Iterable[int], triangles=None) -> TriangleStats:
    """Classify every triangle by how many of its vertices lie in ``s``.

    ``triangles`` may pass a precomputed :func:`naive_triangles` list of ``g``.
    """
    s = set(s)
    inbound = outbound = 0
    for tri in naive_triangles(g) if triangles is None else triangles:
        inside = sum(1 for x in tri if x in s)
        if inside == 3:
            inbound += 1
        elif inside == 2:
            outbound += 1
    return TriangleStats(inbound, outbound)


def naive_cohesion(g: Graph, s: Iterable[int]) -> Fraction:
    """Exact cohesion straight from the definition (0 where it is 0/0)."""
    s = set(s)
    st = naive_triangle_stats(g, s)
    if len(s) < 3 or st.inbound == 0:
        return Fraction(0)
    return Fraction(st.inbound, comb(len(s), 3)) * Fraction(
        st.inbound, st.inbound + st.outbound
    )


def naive_connectivity_classes(g: Graph) -> list[frozenset[tuple[int, int]]]:
    """Triangle-connectivity classes by explicit closure over triangle chains.

    Builds the "shares an edge" relation between triangles and walks its
    connected components breadth-first.
    """
    tris = naive_triangles(g)
    tri_edges = [frozenset({(u, v), (u, w), (v, w)}) for u, v, w in tris]
    seen = [False] * len(tris)
    classes = []
    for start in range(len(tris)):
        if seen[start]:
            continue
        seen[start] = True
        frontier = [start]
        edges = set(tri_edges[start])
        while frontier:
            nxt = []
            for t in frontier:
                for j in range(len(tris)):
                    if not seen[j] and tri_edges[t] & tri_edges[j]:
                        seen[j] = True
                        edges |= tri_edges[j]
                        nxt.append(j)
            frontier = nxt
        classes.append(frozenset(edges))
    return sorted(classes, key=min)


def brute_force_best_set(
    g: Graph, k_min: int = 3, k_max: int | None = None, limit: int = EXHAUSTIVE_LIMIT
) -> tuple[frozenset[int], Fraction]:
    """Maximum-cohesion set over every subset with ``k_min <= |S| <= k_max``.

    Ties go to the larger set, then to the lexicographically smallest sorted
    member tuple. Returns the set and its exact cohesion.
    """
    n = g.node_count
    if n > limit:
        raise OracleLimitError(f"exhaustive search limited to {limit} nodes, got {n}")
    if k_max is None:
        k_max = n
    k_min = max(k_min, 0)
    tris = naive_triangles(g)
    masks = [(1 << u) | (1 << v) | (1 << w) for u, v, w in tris]

    best: tuple[Fraction, int] | None = None
    best_set: tuple[int, ...] = ()
    for k in range(max(k_min, 0), min(k_max, n) + 1):
        for combo in combinations(range(n), k):
            bits = 0
            for x in combo:
                bits |= 1 << x
            inbound = outbound = 0
            for m in masks:
                c = (m & bits).bit_count()
                if c == 3:
                    inbound += 1
                elif c == 2:
                    outbound += 1
            if k < 3 or inbound == 0:
                value = Fraction(0)
            else:
                value = Fraction(inbound * inbound, comb(k, 3) * (inbound + outbound))
            key = (value, k)
            # combinations() yields lexicographic order, so strict ">" keeps the first
            if best is None or key > best:
                best, best_set = key, combo
    if best is None:
        return frozenset(), Fraction(0)
    return frozenset(best_set), best[0]
