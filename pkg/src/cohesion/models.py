"""Random graph models and the expected cohesion of their natural sets.

Randomness comes from numpy's PCG64 generator seeded through a
``SeedSequence`` of ``(rng_seed, trial, purpose)``; purpose 0 draws the
graph and purpose 1 drives set selection. Edge ``e`` in row-major upper
triangle order (pairs ``i < j``) is present iff the ``e``-th uniform draw of
the graph stream is below its probability, so graphs are reproducible
bit-for-bit from the spec alone.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, fields
from math import comb, inf, isnan

import numpy as np

from .graph import Graph
from .metrics import cohesion

__all__ = [
    "ModelSpec",
    "parse_model_specs",
    "model_rng",
    "gen_gnp",
    "gen_four_groups",
    "expected_cohesion_gnp",
    "expected_cohesion_gnp_ratio",
    "expected_cohesion_four_groups",
    "expected_cohesion_four_groups_ratio",
    "random_subsets",
    "planted_blocks",
    "MonteCarloResult",
    "monte_carlo_cohesion",
]

KINDS = ("gnp", "four_groups")


def _check_prob(name: str, p) -> None:
    if p is None or isnan(p) or not 0.0 <= p <= 1.0:
        raise ValueError(f"{name} must be a probability in [0, 1], got {p!r}")


@dataclass(frozen=True)
class ModelSpec:
    """Parameters of one synthetic model.

    ``gnp`` uses ``n`` and ``p``; ``four_groups`` builds 4 blocks of ``n``
    nodes wired with ``p_in`` inside blocks and ``p_out`` across. ``k`` is the
    random subset size used when validating ``gnp``.
    """

    kind: str
    n: int
    p: float | None = None
    p_in: float | None = None
    p_out: float | None = None
    rng_seed: int = 0
    k: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown model kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0 <= self.rng_seed < 2**64:
            raise ValueError("rng_seed must fit in 64 unsigned bits")
        if self.kind == "gnp":
            _check_prob("p", self.p)
            if self.k is not None and not 0 <= self.k <= self.n:
                raise ValueError("k must lie in [0, n]")
        else:
            _check_prob("p_in", self.p_in)
            _check_prob("p_out", self.p_out)

    @classmethod
    def from_text(cls, text: str) -> "ModelSpec":
        """Parse ``key=value`` pairs separated by whitespace or newlines."""
        types = {f.name: f.type for f in fields(cls)}
        kw = {}
        for token in text.split():
            if token.startswith("#"):
                continue
            key, sep, value = token.partition("=")
            if not sep or key not in types:
                raise ValueError(f"bad model spec entry {token!r}")
            if key == "kind":
                kw[key] = value
            elif key in ("n", "rng_seed", "k"):
                kw[key] = int(value)
            else:
                kw[key] = float(value)
        if "kind" not in kw or "n" not in kw:
            raise ValueError("model spec needs at least kind= and n=")
        return cls(**kw)

    def to_text(self) -> str:
        parts = []
        for f in fields(self):
            v = getattr(self, f.name)
            if v is not None:
                parts.append(f"{f.name}={v}")
        return "\n".join(parts) + "\n"

    @property
    def node_count(self) -> int:
        return self.n if self.kind == "gnp" else 4 * self.n


def parse_model_specs(text: str) -> list[ModelSpec]:
    """Several specs in one text, separated by blank lines."""
    blocks, cur = [], []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            cur.append(line)
        elif cur:
            blocks.append(" ".join(cur))
            cur = []
    if cur:
        blocks.append(" ".join(cur))
    return [ModelSpec.from_text(b) for b in blocks]


def model_rng(seed: int, trial: int = 0, purpose: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, trial, purpose])))


def _sample(n: int, prob_of_pair: Callable, rng: np.random.Generator) -> Graph:
    iu, ju = np.triu_indices(n, 1)
    draws = rng.random(iu.size)
    keep = draws < prob_of_pair(iu, ju)
    return Graph.from_edges(zip(iu[keep].tolist(), ju[keep].tolist()), n)


def gen_gnp(spec: ModelSpec, trial: int = 0) -> Graph:
    if spec.kind != "gnp":
        raise ValueError("gen_gnp needs a gnp spec")
    return _sample(spec.n, lambda i, j: spec.p, model_rng(spec.rng_seed, trial))


def gen_four_groups(spec: ModelSpec, trial: int = 0) -> tuple[Graph, list[frozenset[int]]]:
    """Graph on ``4n`` nodes and its four planted blocks (ids ``b*n .. b*n+n-1``)."""
    if spec.kind != "four_groups":
        raise ValueError("gen_four_groups needs a four_groups spec")
    n = spec.n

    def prob(i, j):
        return np.where(i // n == j // n, spec.p_in, spec.p_out)

    g = _sample(4 * n, prob, model_rng(spec.rng_seed, trial))
    blocks = [frozenset(range(b * n, (b + 1) * n)) for b in range(4)]
    return g, blocks


def expected_cohesion_gnp(n: int, k: int, p: float) -> float:
    """Large-n estimate ``p**3 * k / n`` for a k-subset of G(n, p)."""
    if not 3 <= k <= n:
        raise ValueError("need 3 <= k <= n")
    _check_prob("p", p)
    return p**3 * k / n


def expected_cohesion_gnp_ratio(n: int, k: int, p: float) -> float:
    """Ratio of expected triangle counts for a k-subset of G(n, p).

    Expected inbound p^3 C(k,3) and outbound p^3 (n-k) C(k,2) give
    ``p**3 * (k-2) / (k-2 + 3(n-k))``. For k much smaller than n this is
    about a third of :func:`expected_cohesion_gnp`.
    """
    if not 3 <= k <= n:
        raise ValueError("need 3 <= k <= n")
    _check_prob("p", p)
    if p == 0:
        return 0.0
    tin = comb(k, 3)
    tout = (n - k) * comb(k, 2)
    return p**3 * tin / (tin + tout)


def expected_cohesion_four_groups(p_in: float, p_out: float) -> float:
    """Large-n estimate ``p_in**5 / (p_in**2 + 9 p_out**2)`` for one block."""
    _check_prob("p_in", p_in)
    _check_prob("p_out", p_out)
    denom = p_in**2 + 9 * p_out**2
    if denom == 0:
        return 0.0
    return p_in**5 / denom


def expected_cohesion_four_groups_ratio(n: int, p_in: float, p_out: float) -> float:
    """Finite-n ratio of expectations for one planted block of size n."""
    _check_prob("p_in", p_in)
    _check_prob("p_out", p_out)
    tin = comb(n, 3) * p_in**3
    tout = 3 * n * comb(n, 2) * p_in * p_out**2
    if tin == 0:
        return 0.0
    return p_in**3 * tin / (tin + tout)


SetSelector = Callable[[Graph, Sequence[frozenset[int]], np.random.Generator], Iterable[Iterable[int]]]


def random_subsets(k: int, count: int = 1) -> SetSelector:
    """Selector drawing ``count`` uniform random k-subsets per graph."""

    def select(g, planted, rng):
        return [rng.choice(g.node_count, size=k, replace=False).tolist() for _ in range(count)]

    return select


def planted_blocks(g, planted, rng):
    return planted


@dataclass(frozen=True)
class MonteCarloResult:
    mean: float
    std: float
    formula: float
    samples: tuple[float, ...]

    @property
    def rel_err(self) -> float:
        if self.formula == 0:
            return 0.0 if self.mean == 0 else inf
        return abs(self.mean - self.formula) / self.formula


def monte_carlo_cohesion(
    spec: ModelSpec, set_selector: SetSelector | None = None, trials: int = 50
) -> MonteCarloResult:
    """Sample cohesion of selected sets over ``trials`` independent graphs.

    Defaults: uniform random ``spec.k``-subsets for gnp, the four planted
    blocks for four_groups. ``formula`` is the matching large-n estimate.
    ``std`` is the sample standard deviation (0 for a single sample).
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if spec.kind == "gnp":
        if set_selector is None:
            if spec.k is None:
                raise ValueError("gnp validation needs k")
            set_selector = random_subsets(spec.k)
        formula = expected_cohesion_gnp(spec.n, spec.k, spec.p) if spec.k and spec.k >= 3 else 0.0
    else:
        if set_selector is None:
            set_selector = planted_blocks
        formula = expected_cohesion_four_groups(spec.p_in, spec.p_out)

    samples = []
    for t in range(trials):
        if spec.kind == "gnp":
            g, planted = gen_gnp(spec, t), []
        else:
            g, planted = gen_four_groups(spec, t)
        rng = model_rng(spec.rng_seed, t, 1)
        for s in set_selector(g, planted, rng):
            samples.append(cohesion(g, s).value)
    arr = np.asarray(samples)
    std = float(arr.std(ddof=1)) if arr.size > 1 else 0.0
    return MonteCarloResult(float(arr.mean()), std, formula, tuple(samples))
