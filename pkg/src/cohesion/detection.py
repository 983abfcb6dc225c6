"""Group detection by local cohesion maximization, and exact searches for
sets of cohesion 1 and cohesion 0."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .graph import Graph
from .metrics import CohesionScore, cohesion
from .triangles import (
    Triangle,
    enumerate_triangles,
    set_triangle_stats,
    triangle_connectivity_classes,
)

__all__ = [
    "DetectionConfig",
    "Egomunity",
    "ego_network",
    "grow_group",
    "detect_groups",
    "find_cohesion_one",
    "max_cohesion_zero_subset",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DetectionConfig:
    min_cohesion: float = 0.0
    max_group_size: int | None = None


@dataclass(frozen=True)
class Egomunity:
    members: frozenset[int]
    score: CohesionScore
    seed: Triangle


def ego_network(g: Graph, u: int) -> Graph:
    """Subgraph induced by the neighbors of ``u``, without ``u`` itself.

    The result keeps the parent's labels; ``origin`` maps back to ``g`` ids.
    """
    return g.induced_subgraph(g.neighbors(u))


def _value(inbound: int, outbound: int, size: int) -> Fraction:
    if size < 3 or inbound == 0:
        return Fraction(0)
    return Fraction(inbound * inbound, comb(size, 3) * (inbound + outbound))


def _split(g: Graph, v: int, members: set[int]) -> tuple[int, int]:
    """Triangles through ``v`` with two other vertices in ``members``, and
    with exactly one other vertex in ``members`` (``v`` itself not counted)."""
    nv = g.neighbor_set(v)
    both = one = 0
    for x in nv:
        if x not in members:
            continue
        for y in nv & g.neighbor_set(x):
            if y in members:
                both += 1
            elif y != v:
                one += 1
    return both // 2, one


def grow_group(g: Graph, seed, config: DetectionConfig = DetectionConfig()) -> frozenset[int]:
    """Greedy local maximum of cohesion reached from ``seed``.

    Nodes adjacent to at least two members are candidates for addition; the
    one giving the highest cohesion is added if it strictly improves the
    current value. When no addition helps, the best strictly improving
    single removal is tried (sets never shrink below 3). Ties go to the
    smallest node id. Each accepted move raises the value, so this ends.
    """
    members = set(seed)
    st = set_triangle_stats(g, members)
    inbound, outbound = st.inbound, st.outbound
    current = _value(inbound, outbound, len(members))
    limit = config.max_group_size

    while True:
        best = None
        if limit is None or len(members) < limit:
            counts: dict[int, int] = {}
            for x in members:
                for v in g.neighbors(x):
                    if v not in members:
                        counts[v] = counts.get(v, 0) + 1
            for v in sorted(c for c, n in counts.items() if n >= 2):
                both, one = _split(g, v, members)
                i, o = inbound + both, outbound - both + one
                val = _value(i, o, len(members) + 1)
                if val > current and (best is None or val > best[0]):
                    best = (val, v, i, o)
            if best is not None:
                current, v, inbound, outbound = best
                members.add(v)
                continue

        if len(members) > 3:
            for v in sorted(members):
                both, one = _split(g, v, members - {v})
                i, o = inbound - both, outbound + both - one
                val = _value(i, o, len(members) - 1)
                if val > current and (best is None or val > best[0]):
                    best = (val, v, i, o)
            if best is not None:
                current, v, inbound, outbound = best
                members.discard(v)
                continue
        return frozenset(members)


def detect_groups(g: Graph, config: DetectionConfig = DetectionConfig()) -> list[Egomunity]:
    """Grow a group from every triangle and keep the distinct local maxima.

    Groups scoring below ``config.min_cohesion`` are dropped. The result is
    sorted by decreasing cohesion, then by sorted member ids; groups may
    overlap.
    """
    found: dict[frozenset[int], Egomunity] = {}
    for seed in enumerate_triangles(g):
        members = grow_group(g, seed, config)
        if members in found:
            continue
        found[members] = Egomunity(members, cohesion(g, members), seed)
    groups = [e for e in found.values() if e.score.value >= config.min_cohesion]
    groups.sort(key=lambda e: (-e.score.exact(), sorted(e.members)))
    return groups


def find_cohesion_one(g: Graph, k: int) -> frozenset[int] | None:
    """A set of ``k`` nodes with cohesion exactly 1, or None.

    Such a set is a k-clique whose edges form a whole triangle-connectivity
    class, so only classes with C(k, 2) edges are candidates. Each candidate
    is checked directly (clique, no outbound triangle) before it is returned.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    target = comb(k, 2)
    partition = triangle_connectivity_classes(g)
    for i, cls in enumerate(partition.classes):
        if len(cls) != target:
            continue
        verts = partition.vertices(i)
        st = set_triangle_stats(g, verts) if len(verts) == k else None
        if st is not None and st.inbound == comb(k, 3) and st.outbound == 0:
            return verts
        log.warning(
            "class of %d edges on %d vertices is not a cohesion-1 set", len(cls), len(verts)
        )
    return None


def max_cohesion_zero_subset(g: Graph, k: int, limit: int = 20) -> frozenset[int] | None:
    """A ``k``-node set inducing no triangle, or None; exponential search.

    Exhaustive depth-first search over ascending node ids, pruning any branch
    that closes a triangle, so the lexicographically smallest such set is
    returned. Refuses graphs above ``limit`` nodes.
    """
    n = g.node_count
    if n > limit:
        raise ValueError(f"exhaustive search limited to {limit} nodes, got {n}")
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > n:
        return None
    chosen: list[int] = []

    def closes_triangle(v: int) -> bool:
        nv = g.neighbor_set(v)
        inside = [x for x in chosen if x in nv]
        return any(g.has_edge(a, b) for j, a in enumerate(inside) for b in inside[j + 1:])

    def search(start: int) -> bool:
        if len(chosen) == k:
            return True
        for v in range(start, n - (k - len(chosen)) + 1):
            if closes_triangle(v):
                continue
            chosen.append(v)
            if search(v + 1):
                return True
            chosen.pop()
        return False

    return frozenset(chosen) if search(0) else None
