import random
from fractions import Fraction
from itertools import combinations

import pytest

from cohesion import TriangleStats
from cohesion.oracle import (
    OracleLimitError,
    brute_force_best_set,
    naive_cohesion,
    naive_triangle_stats,
    naive_triangles,
)
from samples import FIG2_DARK, bridged_k4s, complete, cycle, fig2, ids, random_graph


def test_naive_stats_examples():
    g = fig2()
    assert naive_triangle_stats(g, ids(g, FIG2_DARK)) == TriangleStats(2, 1)
    assert naive_triangle_stats(complete(4), range(4)) == TriangleStats(4, 0)
    assert naive_triangle_stats(complete(4), ()) == TriangleStats(0, 0)


def test_naive_limit():
    with pytest.raises(OracleLimitError):
        naive_triangles(cycle(65))


def test_best_set_bridged_k4s():
    best, value = brute_force_best_set(bridged_k4s(), 3, 8)
    assert value == 1
    assert best == frozenset(range(4))


def test_best_set_triangle_free():
    best, value = brute_force_best_set(cycle(6))
    assert value == 0


def test_best_set_k5_prefers_larger():
    best, value = brute_force_best_set(complete(5), 3, 5)
    assert best == frozenset(range(5)) and value == 1


def test_best_set_refuses_large_graph():
    with pytest.raises(OracleLimitError):
        brute_force_best_set(cycle(21))


def test_naive_cohesion_fig2():
    g = fig2()
    assert naive_cohesion(g, ids(g, FIG2_DARK)) == Fraction(1, 3)


def test_best_set_is_argmax():
    g = random_graph(random.Random(5), 8, 0.5)
    best, value = brute_force_best_set(g)
    assert value == max(naive_cohesion(g, s) for k in range(3, 9) for s in combinations(range(8), k))
    assert naive_cohesion(g, best) == value
