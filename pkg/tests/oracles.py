"""Independent reference implementations used only by the tests.

Everything here is deliberately naive: networkx for structure, itertools for
subsets. None of it shares code with the package.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_cis(g, must=()) -> int:
    """Count connected vertex subsets containing every vertex of ``must``."""
    h = to_nx(g)
    total = 0
    for k in range(1, g.n + 1):
        for s in combinations(range(g.n), k):
            if all(m in s for m in must) and nx.is_connected(h.subgraph(s)):
                total += 1
    return total


def deletion_cut_vertices(g) -> set[int]:
    h = to_nx(g)
    base = nx.number_connected_components(h)
    out = set()
    for v in range(g.n):
        k = h.copy()
        k.remove_node(v)
        if k.number_of_nodes() and nx.number_connected_components(k) > base:
            out.add(v)
    return out


def shortest_cycle(g):
    value = nx.girth(to_nx(g))
    return None if value == float("inf") else value


def labelled_unicyclic_classes(n: int) -> int:
    """Number of unicyclic graphs on n vertices up to isomorphism, by brute force
    over trees plus one extra edge, deduplicated with nx isomorphism tests."""
    reps: dict[str, list[nx.Graph]] = {}
    count = 0
    for t in nx.nonisomorphic_trees(n):
        for u, v in combinations(range(n), 2):
            if t.has_edge(u, v):
                continue
            h = t.copy()
            h.add_edge(u, v)
            key = nx.weisfeiler_lehman_graph_hash(h)
            bucket = reps.setdefault(key, [])
            if not any(nx.is_isomorphic(h, r) for r in bucket):
                bucket.append(h)
                count += 1
    return count


def isomorphic(a, b) -> bool:
    return nx.is_isomorphic(to_nx(a), to_nx(b))
