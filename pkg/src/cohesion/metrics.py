"""Cohesion of a node set, plus the classical metrics it is compared with."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .graph import Graph, node_set
from .triangles import TriangleStats, set_triangle_stats, weighted_set_triangle_stats

__all__ = [
    "CohesionScore",
    "score_from_stats",
    "cohesion",
    "weighted_cohesion",
    "internal_edge_count",
    "density",
    "clustering",
    "conductance",
    "density_cohesion_bound",
]


@dataclass(frozen=True)
class CohesionScore:
    """Cohesion value together with its two factors.

    ``density_factor`` is the fraction of the C(|S|, 3) possible triples of S
    that are triangles; ``isolation_factor`` is the share of inbound among
    inbound plus outbound triangles. ``value`` is their product.
    """

    value: float
    density_factor: float
    isolation_factor: float
    stats: TriangleStats
    size: int

    def exact(self) -> Fraction:
        """Exact rational value; only defined for integer (unweighted) stats."""
        i, o = self.stats.inbound, self.stats.outbound
        if not (isinstance(i, int) and isinstance(o, int)):
            raise TypeError("exact value needs integer triangle counts")
        if self.size < 3 or i == 0:
            return Fraction(0)
        return Fraction(i, comb(self.size, 3)) * Fraction(i, i + o)

    def __float__(self) -> float:
        return self.value


def score_from_stats(stats: TriangleStats, size: int) -> CohesionScore:
    """Combine triangle counts of a set of ``size`` nodes into a score.

    Sets smaller than 3, and sets with no inbound or outbound triangle at
    all, score 0.
    """
    inbound, outbound = stats.inbound, stats.outbound
    if size < 3 or inbound + outbound == 0:
        return CohesionScore(0.0, 0.0, 0.0, stats, size)
    dens = inbound / comb(size, 3)
    iso = inbound / (inbound + outbound)
    return CohesionScore(dens * iso, dens, iso, stats, size)


def cohesion(g: Graph, s: Iterable[int]) -> CohesionScore:
    s = node_set(g, s)
    return score_from_stats(set_triangle_stats(g, s), len(s))


def weighted_cohesion(g: Graph, s: Iterable[int]) -> CohesionScore:
    """Cohesion where each triangle counts the product of its edge weights.

    On an unweighted graph every weight is 1 and this equals :func:`cohesion`.
    """
    s = node_set(g, s)
    return score_from_stats(weighted_set_triangle_stats(g, s), len(s))


def internal_edge_count(g: Graph, s: Iterable[int]) -> int:
    s = node_set(g, s)
    return sum(1 for u in s for v in g.neighbors(u) if v > u and v in s)


def density(g: Graph, s: Iterable[int]) -> float:
    """Internal edges over C(|S|, 2); 0 for sets of fewer than 2 nodes."""
    s = node_set(g, s)
    if len(s) < 2:
        return 0.0
    return internal_edge_count(g, s) / comb(len(s), 2)


def clustering(g: Graph, s: Iterable[int]) -> float:
    """Transitivity of the subgraph induced by ``s``.

    Three times the triangle count over the number of connected triples
    (paths of length two) inside S; 0 when there are none.
    """
    s = node_set(g, s)
    triples = 0
    for u in s:
        d = len(g.neighbor_set(u) & s)
        triples += d * (d - 1) // 2
    if triples == 0:
        return 0.0
    return 3 * set_triangle_stats(g, s).inbound / triples


def conductance(g: Graph, s: Iterable[int]) -> float:
    s = node_set(g, s)
    cut = vol_in = 0
    for u in s:
        vol_in += g.degree(u)
        cut += sum(1 for v in g.neighbors(u) if v not in s)
    vol_out = 2 * g.edge_count - vol_in
    denom = min(vol_in, vol_out)
    if denom == 0:
        return 0.0
    return cut / denom


def density_cohesion_bound(size: int, internal_edges: int) -> float:
    """Upper bound on the cohesion of any set with this size and edge count.

    Cohesion never exceeds the triangle density, and m edges carry fewer than
    m^1.5 triangles.
    """
    if internal_edges < 0:
        raise ValueError("internal_edges must be non-negative")
    if size < 3:
        return 0.0
    return min(1.0, internal_edges**1.5 / comb(size, 3))
