"""Counting connected induced subgraphs (CIS).

Two independent routes:

* a brute-force subset oracle (exponential, capped at ``n <= 20`` by default);
* polynomial counters for trees (rooted product recursion) and unicyclic graphs
  (cycle-arc decomposition over the trees hanging off the cycle).

All counts are Python ints. The empty graph has count 0.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Sequence

import numpy as np

from .graph import (
    Graph,
    GraphError,
    RootedTree,
    UnicyclicDecomposition,
    components,
    decompose_unicyclic,
    induced_subgraph,
    remove_vertices,
    tree_from_graph,
)

DEFAULT_ORACLE_CAP = 20


class OracleCapError(GraphError):
    pass


def oracle_cap() -> int:
    return int(os.environ.get("UNICIS_ORACLE_CAP", DEFAULT_ORACLE_CAP))


# ---------------------------------------------------------------- subset oracle


def connected_subsets(g: Graph, cap: int | None = None) -> np.ndarray:
    """Boolean table indexed by vertex bitmask: is the induced subgraph connected?

    Subsets are processed in increasing popcount. A set of size >= 2 is
    connected iff some member ``v`` leaves a connected remainder that ``v`` is
    adjacent to (every connected graph has a non-cut vertex).
    """
    cap = oracle_cap() if cap is None else cap
    n = g.n
    if n > cap:
        raise OracleCapError(
            f"subset oracle capped at n={cap} (got n={n}); use the decomposition counter "
            "or raise the cap")
    size = 1 << n
    conn = np.zeros(size, dtype=bool)
    if n == 0:
        return conn
    masks = np.arange(size, dtype=np.int64)
    pop = np.zeros(size, dtype=np.int64)
    for v in range(n):
        pop += (masks >> v) & 1
    order = np.argsort(pop, kind="stable")
    bounds = np.searchsorted(pop[order], np.arange(n + 2))
    nbr = g.neighbor_masks()
    for v in range(n):
        conn[1 << v] = True
    for k in range(2, n + 1):
        layer = order[bounds[k]:bounds[k + 1]]
        ok = np.zeros(layer.shape, dtype=bool)
        for v in range(n):
            bit = 1 << v
            has = (layer & bit) != 0
            rest = layer ^ bit
            ok |= has & conn[rest] & ((rest & nbr[v]) != 0)
        conn[layer] = ok
    return conn


def _anchor_mask(g: Graph, anchors: Iterable[int]) -> int:
    mask = 0
    for a in anchors:
        if not 0 <= a < g.n:
            raise GraphError(f"anchor {a} out of range")
        if mask >> a & 1:
            raise GraphError("anchors must be distinct")
        mask |= 1 << a
    return mask


def count_cis_oracle(g: Graph, cap: int | None = None) -> int:
    return int(np.count_nonzero(connected_subsets(g, cap)))


def count_cis_rooted_oracle(g: Graph, anchors: int | Sequence[int], cap: int | None = None) -> int:
    """Brute-force count of CIS containing every anchor (one or two vertices)."""
    if isinstance(anchors, int):
        anchors = (anchors,)
    if not 1 <= len(anchors) <= 2:
        raise GraphError("one or two anchors expected")
    want = _anchor_mask(g, anchors)
    conn = connected_subsets(g, cap)
    idx = np.flatnonzero(conn)
    return int(np.count_nonzero((idx & want) == want))


# ---------------------------------------------------------------- trees


@dataclass(frozen=True)
class RootedCountProfile:
    """Rooted CIS counts of a tree.

    ``fringe[v]`` counts CIS of the fringe subtree ``T[v]`` containing ``v``
    (equivalently, CIS of ``T`` whose topmost vertex is ``v``); ``rooted[v]``
    is ``N(T)_v``; ``pairs`` holds any requested ``N(T)_{u,v}``.
    """

    root: int
    fringe: dict[int, int]
    rooted: dict[int, int]
    total: int
    pairs: dict[tuple[int, int], int] = field(default_factory=dict)


def tree_count_rooted(t: RootedTree, pairs: Iterable[tuple[int, int]] = ()) -> RootedCountProfile:
    """Product recursion ``f(v) = prod(1 + f(child))`` plus a rerooting pass."""
    f: dict[int, int] = {}
    for v in t.postorder():
        f[v] = prod(1 + f[c] for c in t.children[v])
    up: dict[int, int] = {t.root: 0}  # CIS above v (outside T[v]) containing parent(v)
    rooted: dict[int, int] = {}
    for v in t.vertices():
        rooted[v] = f[v] * (1 + up[v])
        for c in t.children[v]:
            up[c] = rooted[v] // (1 + f[c])
    total = sum(f.values())

    parent = t.parents()

    def away(x: int, w: int) -> int:
        # rooted count of the component containing x after deleting edge xw
        return f[x] if parent.get(x) == w else up[w]

    def neighbours(v: int) -> list[int]:
        return list(t.children[v]) + ([parent[v]] if v in parent else [])

    pair_counts = {}
    for u, v in pairs:
        if u == v:
            raise GraphError("pair anchors must be distinct")
        # path u .. v through the lowest common ancestor
        anc_u = [u]
        while anc_u[-1] in parent:
            anc_u.append(parent[anc_u[-1]])
        pos = {x: i for i, x in enumerate(anc_u)}
        tail = [v]
        while tail[-1] not in pos:
            tail.append(parent[tail[-1]])
        path = anc_u[: pos[tail[-1]] + 1] + tail[-2::-1]
        on_path = set(path)
        value = 1
        for w in path:
            for x in neighbours(w):
                if x not in on_path:
                    value *= 1 + away(x, w)
        pair_counts[(u, v)] = value
    return RootedCountProfile(t.root, f, rooted, total, pair_counts)


def count_cis_tree(g: Graph) -> int:
    return tree_count_rooted(tree_from_graph(g, 0)).total


# ---------------------------------------------------------------- unicyclic


def cycle_terms(d: UnicyclicDecomposition) -> tuple[list[int], list[int]]:
    """Per cycle position: ``f_j = N(T_j)_{v_j}`` and ``N(T_j - v_j)``."""
    f, inner = [], []
    for t in d.trees:
        prof = tree_count_rooted(t)
        f.append(prof.fringe[t.root])
        inner.append(prof.total - prof.fringe[t.root])
    return f, inner


def arc_sum(f: Sequence[int]) -> int:
    """Sum over nonempty proper cyclic arcs of the product of ``f`` along the arc,
    plus the product over the whole cycle."""
    g = len(f)
    total = prod(f)
    for start in range(g):
        p = 1
        for length in range(1, g):
            p *= f[(start + length - 1) % g]
            total += p
    return total


def count_cis_unicyclic(d: UnicyclicDecomposition) -> int:
    f, inner = cycle_terms(d)
    return sum(inner) + arc_sum(f)


def _girth_check(f: Sequence[int], inner: Sequence[int], g: int) -> None:
    if len(f) != g or len(inner) != g:
        raise GraphError(f"formula needs exactly {g} cycle terms")


def formula_girth3(f: Sequence[int], inner: Sequence[int]) -> int:
    _girth_check(f, inner, 3)
    f0, f1, f2 = f
    return sum(inner) + (1 + f0) * (1 + f1) * (1 + f2) - 1


def formula_girth4(f: Sequence[int], inner: Sequence[int]) -> int:
    _girth_check(f, inner, 4)
    f0, f1, f2, f3 = f
    return (sum(inner) + (1 + f0) * (1 + f1) * (1 + f2) * (1 + f3)
            - (1 + f0 * f2 + f1 * f3))


# ---------------------------------------------------------------- general dispatch


def count_cis(g: Graph) -> int:
    """Exact N(G) for any graph: per component, tree/unicyclic counters where the
    component allows it, the subset oracle otherwise."""
    total = 0
    for comp in components(g):
        sub, _ = induced_subgraph(g, comp)
        if sub.m == sub.n - 1:
            total += count_cis_tree(sub)
        elif sub.m == sub.n:
            total += count_cis_unicyclic(decompose_unicyclic(sub))
        else:
            total += count_cis_oracle(sub)
    return total


def count_cis_rooted(g: Graph, anchors: int | Sequence[int], without: Iterable[int] = ()) -> int:
    """``N(G - without)`` restricted to CIS containing all anchors, by inclusion-exclusion
    over vertex deletions (each term counted with :func:`count_cis`)."""
    if isinstance(anchors, int):
        anchors = (anchors,)
    anchors = tuple(anchors)
    _anchor_mask(g, anchors)
    dropped = set(without)
    if dropped & set(anchors):
        raise GraphError("an anchor was deleted")
    total = 0
    for k in range(1 << len(anchors)):
        drop = {a for i, a in enumerate(anchors) if k >> i & 1}
        sub, _ = remove_vertices(g, dropped | drop)
        total += (-1) ** len(drop) * count_cis(sub)
    return total


# ---------------------------------------------------------------- constructions


def count_construction_closed_form(family: str, n: int, c: int) -> int:
    """N of Delta_{n,c} (``family='delta'``) or Omega_{n,c} (``'omega'``) without
    building the graph.

    Each corner carries pendant paths; a corner with paths of lengths
    ``l_1, l_2, ...`` (vertices beyond the corner) has rooted count
    ``prod(l_i + 1)`` and contributes ``sum(l_i (l_i + 1) / 2)`` subgraphs
    avoiding the corner. These feed the girth-3 / girth-4 formulas.
    """
    from .constructions import construction_params

    params = construction_params(family, n, c)
    g = params.girth
    lengths: list[list[int]] = [[] for _ in range(g)]
    for corner, length in params.paths:
        lengths[corner].append(length)
    f = [prod(l + 1 for l in ls) for ls in lengths]
    inner = [sum(l * (l + 1) // 2 for l in ls) for ls in lengths]
    return formula_girth3(f, inner) if g == 3 else formula_girth4(f, inner)
