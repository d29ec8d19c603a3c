"""Seeded uniform generators for the random verification corpora.

Everything is driven by a caller-supplied random.Random so test runs are
reproducible across platforms.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graphs import WeightedOrientedGraph, detect_setting_paths
from .monomials import MonomialIdeal


def _random_oriented_edges(rng: random.Random, n: int, p: float):
    edges = []
    for i, j in combinations(range(n), 2):
        if rng.random() < p:
            edges.append((i, j) if rng.random() < 0.5 else (j, i))
    return edges


def random_sink_oriented_graph(rng: random.Random, nmax: int = 7,
                               wmax: int = 4) -> WeightedOrientedGraph:
    """Random oriented graph with at least one edge whose weighted vertices
    are all sinks: only out-degree-zero vertices may get weight >= 2."""
    while True:
        n = rng.randint(2, nmax)
        p = rng.uniform(0.25, 0.6)
        edges = _random_oriented_edges(rng, n, p)
        if edges:
            break
    has_out = {t for t, _ in edges}
    names = [f"v{i}" for i in range(n)]
    weights = []
    for i in range(n):
        if i not in has_out and rng.random() < 0.7:
            weights.append(rng.randint(2, wmax))
        else:
            weights.append(1)
    return WeightedOrientedGraph.build(
        list(zip(names, weights)), [(names[t], names[h]) for t, h in edges])


def random_graph(rng: random.Random, nmax: int = 7,
                 wmax: int = 4) -> WeightedOrientedGraph:
    """Random oriented graph with at least one edge and unrestricted weights."""
    while True:
        n = rng.randint(2, nmax)
        p = rng.uniform(0.25, 0.6)
        edges = _random_oriented_edges(rng, n, p)
        if edges:
            break
    names = [f"v{i}" for i in range(n)]
    weights = [rng.randint(1, wmax) if rng.random() < 0.5 else 1 for _ in range(n)]
    return WeightedOrientedGraph.build(
        list(zip(names, weights)), [(names[t], names[h]) for t, h in edges])


def random_setting_graph(rng: random.Random, nmax: int = 7,
                         wmax: int = 4) -> WeightedOrientedGraph:
    """Random graph containing an induced weighted directed length-2 path."""
    while True:
        D = random_graph(rng, nmax=nmax, wmax=wmax)
        if any(p.induced for p in detect_setting_paths(D)):
            return D


def random_forest(rng: random.Random, nmax: int = 7,
                  wmax: int = 4) -> WeightedOrientedGraph:
    """Random oriented forest (each new vertex attaches to at most one earlier one)."""
    n = rng.randint(2, nmax)
    names = [f"v{i}" for i in range(n)]
    edges = []
    for j in range(1, n):
        if rng.random() < 0.8:
            i = rng.randrange(j)
            edges.append((names[i], names[j]) if rng.random() < 0.5
                         else (names[j], names[i]))
    weights = [rng.randint(1, wmax) if rng.random() < 0.5 else 1 for _ in range(n)]
    return WeightedOrientedGraph.build(list(zip(names, weights)), edges)


def random_ideal(rng: random.Random, nmax: int = 5, max_degree: int = 8,
                 max_gens: int = 6) -> MonomialIdeal:
    """Random nonzero proper monomial ideal with bounded generator degree."""
    n = rng.randint(1, nmax)
    variables = [f"x{i}" for i in range(n)]
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        deg = rng.randint(1, max_degree)
        g = [0] * n
        for _ in range(deg):
            g[rng.randrange(n)] += 1
        gens.append(tuple(g))
    return MonomialIdeal(variables, gens)


def random_monomial(rng: random.Random, n: int, max_exp: int = 4) -> tuple[int, ...]:
    return tuple(rng.randint(0, max_exp) for _ in range(n))
