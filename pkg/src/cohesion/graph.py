"""Immutable undirected simple graphs built from edge-list text.

External node labels are arbitrary string tokens; they are remapped to dense
integer ids ``0 .. n-1`` in canonical label order (integer-looking labels
first, numerically, then the rest lexicographically), so the ids never depend
on the order of input lines. The mapping is kept on the graph so results can
be reported in the caller's vocabulary.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from pathlib import Path
from types import MappingProxyType

__all__ = [
    "EdgeListError",
    "MixedWeightsError",
    "SelfLoopError",
    "WeightDomainError",
    "Graph",
    "from_edge_list",
    "parse_edge_list",
    "read_edge_list",
    "format_edge_list",
    "label_order",
    "node_set",
]


class EdgeListError(ValueError):
    """Malformed edge-list input. ``lineno`` is 1-based, or None."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class WeightDomainError(EdgeListError):
    pass


class MixedWeightsError(EdgeListError):
    pass


class SelfLoopError(EdgeListError):
    pass


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph with sorted neighbor lists.

    Instances are not meant to be mutated after construction. Use
    :func:`from_edge_list` or :meth:`Graph.from_edges` to build one.

    ``origin`` is set on induced subgraphs and maps each local id to the id
    of the same vertex in the parent graph.
    """

    __slots__ = ("_adj", "_adj_sets", "_weights", "_labels", "_index", "origin")

    def __init__(
        self,
        labels: Sequence[str],
        edges: Iterable[tuple[int, int]],
        weights: dict[tuple[int, int], float] | None = None,
        origin: Sequence[int] | None = None,
    ):
        n = len(labels)
        self._labels = tuple(str(x) for x in labels)
        index = {label: i for i, label in enumerate(self._labels)}
        if len(index) != n:
            raise ValueError("node labels must be unique")
        self._index = MappingProxyType(index)
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u}, {v}) out of range for {n} nodes")
            if u == v:
                raise SelfLoopError(f"self-loop on node {self._labels[u]!r}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._adj = tuple(tuple(sorted(s)) for s in nbrs)
        self._adj_sets = tuple(frozenset(s) for s in nbrs)
        if weights is not None:
            stored = {}
            for (u, v), w in weights.items():
                key = _edge_key(u, v)
                if v not in self._adj_sets[u]:
                    raise ValueError(f"weight given for missing edge {key}")
                if not 0.0 < w <= 1.0:
                    raise WeightDomainError(f"weight {w!r} outside (0, 1]")
                stored[key] = float(w)
            if len(stored) != self.edge_count:
                raise ValueError("weighted graph needs a weight for every edge")
            self._weights = MappingProxyType(stored)
        else:
            self._weights = None
        self.origin = tuple(origin) if origin is not None else None

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[int, int]],
        n: int | None = None,
        weights: dict[tuple[int, int], float] | None = None,
    ) -> "Graph":
        """Build from integer edges; labels are the decimal ids."""
        edges = list(edges)
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        return cls([str(i) for i in range(n)], edges, weights)

    # -- size ---------------------------------------------------------------

    @property
    def node_count(self) -> int:
        return len(self._adj)

    def __len__(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    @property
    def is_weighted(self) -> bool:
        return self._weights is not None

    # -- access -------------------------------------------------------------

    def _check(self, u: int) -> None:
        if not 0 <= u < len(self._adj):
            raise IndexError(f"node id {u} out of range [0, {len(self._adj)})")

    def neighbors(self, u: int) -> tuple[int, ...]:
        """Sorted neighbors of ``u``."""
        self._check(u)
        return self._adj[u]

    def neighbor_set(self, u: int) -> frozenset[int]:
        self._check(u)
        return self._adj_sets[u]

    def degree(self, u: int) -> int:
        self._check(u)
        return len(self._adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj_sets[u]

    def weight(self, u: int, v: int) -> float:
        """Edge weight; 1.0 for present edges of an unweighted graph, 0.0 if absent."""
        if not self.has_edge(u, v):
            return 0.0
        if self._weights is None:
            return 1.0
        return self._weights[_edge_key(u, v)]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u, nb in enumerate(self._adj) for v in nb if u < v]

    # -- labels -------------------------------------------------------------

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def label(self, u: int) -> str:
        self._check(u)
        return self._labels[u]

    def node_id(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown node label {label!r}") from None

    # -- derived graphs -----------------------------------------------------

    def induced_subgraph(self, nodes: Iterable[int]) -> "Graph":
        """Subgraph induced by ``nodes``; local ids follow ascending parent id."""
        keep = sorted(set(nodes))
        for u in keep:
            self._check(u)
        local = {u: i for i, u in enumerate(keep)}
        edges = []
        weights = {} if self._weights is not None else None
        for u in keep:
            for v in self._adj[u]:
                if v > u and v in local:
                    edges.append((local[u], local[v]))
                    if weights is not None:
                        weights[(local[u], local[v])] = self._weights[(u, v)]
        return Graph([self._labels[u] for u in keep], edges, weights, origin=keep)

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        """Copy of the graph with the given edges deleted; node ids kept."""
        drop = {_edge_key(u, v) for u, v in removed}
        kept = [e for e in self.edges() if e not in drop]
        weights = None
        if self._weights is not None:
            weights = {e: self._weights[e] for e in kept}
        return Graph(self._labels, kept, weights)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._labels == other._labels
            and self._adj == other._adj
            and (dict(self._weights or {}) == dict(other._weights or {}))
            and self.is_weighted == other.is_weighted
        )

    def __hash__(self) -> int:
        return hash((self._labels, self._adj))

    def __repr__(self) -> str:
        kind = "weighted " if self.is_weighted else ""
        return f"<{kind}Graph n={self.node_count} m={self.edge_count}>"


def label_order(label: str):
    """Sort key placing ``"2"`` before ``"10"`` before ``"a"``."""
    try:
        return (0, int(label), label)
    except ValueError:
        return (1, 0, label)


def node_set(g: Graph, members: Iterable[int]) -> frozenset[int]:
    """Validate ``members`` as a subset of ``g``'s vertices."""
    s = frozenset(members)
    for u in s:
        if not isinstance(u, int) or not 0 <= u < g.node_count:
            raise ValueError(f"node {u!r} is not a vertex of the graph")
    return s


def from_edge_list(records: Iterable[Sequence]) -> Graph:
    """Build a graph from ``(u, v)`` or ``(u, v, w)`` records.

    Labels are remapped to dense ids in :func:`label_order`. Duplicate
    edges collapse; for weighted input the last weight wins. A record of the
    form ``(u,)`` declares an isolated node.
    """
    seen: set[str] = set()
    raw: dict[tuple[str, str], float | None] = {}
    weighted: bool | None = None

    for lineno, rec in enumerate(records, start=1):
        rec = tuple(rec)
        if len(rec) == 1:
            seen.add(str(rec[0]))
            continue
        if len(rec) not in (2, 3):
            raise EdgeListError(f"expected 'u v [w]', got {len(rec)} fields", lineno)
        has_w = len(rec) == 3
        if weighted is None:
            weighted = has_w
        elif weighted != has_w:
            raise MixedWeightsError("mixing weighted and unweighted edges", lineno)
        a, b = str(rec[0]), str(rec[1])
        if a == b:
            raise SelfLoopError(f"self-loop on node {a!r}", lineno)
        w = None
        if has_w:
            try:
                w = float(rec[2])
            except (TypeError, ValueError):
                raise EdgeListError(f"weight {rec[2]!r} is not a number", lineno) from None
            if not 0.0 < w <= 1.0:
                raise WeightDomainError(f"weight {w!r} outside (0, 1]", lineno)
        seen.update((a, b))
        raw[(a, b) if a < b else (b, a)] = w

    labels = sorted(seen, key=label_order)
    index = {label: i for i, label in enumerate(labels)}
    edges = {_edge_key(index[a], index[b]): w for (a, b), w in raw.items()}
    weights = edges if weighted else None
    return Graph(labels, edges.keys(), weights)


def parse_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse whitespace-separated ``u v [w]`` lines; ``#`` starts a comment line.

    A line holding a single token declares an isolated node.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    records = []
    linenos = []
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if len(fields) > 3:
            raise EdgeListError(f"expected 'u v [w]', got {len(fields)} fields", lineno)
        records.append(fields)
        linenos.append(lineno)
    try:
        return from_edge_list(records)
    except EdgeListError as exc:
        # translate record index back to the physical line
        if exc.lineno is not None:
            msg = str(exc).split(": ", 1)[1]
            raise type(exc)(msg, linenos[exc.lineno - 1]) from None
        raise


def read_edge_list(path: str | Path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    """Edge-list text that :func:`parse_edge_list` maps back to ``g``.

    Isolated nodes are declared on lines of their own. Graphs whose labels
    are not already in :func:`label_order` come back with renumbered ids.
    """
    out = [g.label(u) for u in range(g.node_count) if not g.neighbors(u)]
    for u, v in g.edges():
        if g.is_weighted:
            out.append(f"{g.label(u)} {g.label(v)} {g.weight(u, v)!r}")
        else:
            out.append(f"{g.label(u)} {g.label(v)}")
    return "\n".join(out) + ("\n" if out else "")
