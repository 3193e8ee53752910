"""Seeded random trees and unicyclic graphs for property tests and lemma suites."""

from __future__ import annotations

import random

from .graph import Graph, GraphError, relabel


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random recursive tree (vertex i attaches to a uniform earlier vertex),
    then randomly relabelled."""
    if n < 1:
        raise GraphError("tree needs at least one vertex")
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    g = Graph.from_edges(n, edges)
    perm = list(range(n))
    rng.shuffle(perm)
    return relabel(g, perm)


def random_unicyclic(n: int, rng: random.Random, girth: int | None = None) -> Graph:
    if n < 3:
        raise GraphError("unicyclic graph needs n >= 3")
    g = girth if girth is not None else rng.randint(3, n)
    if not 3 <= g <= n:
        raise GraphError("girth out of range")
    edges = [(j, (j + 1) % g) for j in range(g)]
    edges += [(rng.randrange(i), i) for i in range(g, n)]
    graph = Graph.from_edges(n, edges)
    perm = list(range(n))
    rng.shuffle(perm)
    return relabel(graph, perm)


def random_connected(n: int, rng: random.Random) -> Graph:
    """A tree or (when n >= 3, with probability 1/2) a unicyclic graph."""
    if n >= 3 and rng.random() < 0.5:
        return random_unicyclic(n, rng)
    return random_tree(n, rng)
