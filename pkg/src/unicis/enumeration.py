"""Isomorphism-free generation of unicyclic graphs and exhaustive extremal search.

A unicyclic graph of girth g is a cyclic sequence of g rooted trees. We
enumerate rooted trees by canonical level sequences, rank them by canonical
code, and keep exactly the rank tuples that are least among their rotations
and reflections.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .count import count_cis_unicyclic
from .graph import Graph, GraphError, RootedTree, UnicyclicDecomposition, wiener_index


def rooted_level_sequences(size: int) -> Iterator[tuple[int, ...]]:
    """All rooted trees on ``size`` vertices as canonical level sequences.

    Successor rule: take the last position ``p`` at level > 1, the last
    earlier position ``q`` one level higher up, and copy the block starting
    at ``q`` periodically over the tail from ``p``. Starts at the path,
    stops at the star.
    """
    if size < 1:
        return
    seq = list(range(size))
    while True:
        yield tuple(seq)
        p = size - 1
        while p > 0 and seq[p] <= 1:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while seq[q] != seq[p] - 1:
            q -= 1
        for i in range(p, size):
            seq[i] = seq[i - (p - q)]


@dataclass(frozen=True)
class _TreeShape:
    levels: tuple[int, ...]
    code: str
    size: int
    cuts_below_root: int  # non-root vertices with children

    @property
    def root_is_cut(self) -> bool:
        return self.size > 1


@lru_cache(maxsize=None)
def _shapes_upto(max_size: int) -> tuple[_TreeShape, ...]:
    """Every rooted tree with at most ``max_size`` vertices, sorted by code."""
    shapes = []
    for s in range(1, max_size + 1):
        for levels in rooted_level_sequences(s):
            t = RootedTree.from_level_sequence(levels)
            internal = sum(1 for v, cs in t.children.items() if cs and v != t.root)
            shapes.append(_TreeShape(levels, t.code(), s, internal))
    shapes.sort(key=lambda sh: sh.code)
    return tuple(shapes)


@dataclass(frozen=True)
class EnumerationQuery:
    n: int
    c: int | None = None
    girth_min: int = 3
    girth_max: int | None = None

    def __post_init__(self):
        if self.n < 3:
            raise GraphError("unicyclic graphs need n >= 3")
        if self.c is not None and not 0 <= self.c <= self.n - 3:
            raise GraphError(f"cut-vertex count must lie in 0..{self.n - 3}")
        if self.girth_max is not None and self.girth_max < self.girth_min:
            raise GraphError("girth_max must not be below girth_min")

    def girths(self) -> range:
        hi = self.n if self.girth_max is None else min(self.girth_max, self.n)
        return range(max(3, self.girth_min), hi + 1)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _is_dihedral_min(ranks: tuple[int, ...]) -> bool:
    g = len(ranks)
    rev = ranks[::-1]
    for k in range(g):
        if ranks[k:] + ranks[:k] < ranks or rev[k:] + rev[:k] < ranks:
            return False
    return True


def _graph_from_shapes(shapes: list[_TreeShape]) -> tuple[Graph, UnicyclicDecomposition]:
    g = len(shapes)
    trees = []
    nxt = g
    for j, sh in enumerate(shapes):
        t = RootedTree.from_level_sequence(sh.levels, first_id=nxt, root_id=j)
        nxt += sh.size - 1
        trees.append(t)
    d = UnicyclicDecomposition(tuple(range(g)), tuple(trees))
    return d.to_graph(), d


def _enumerate_girth(n: int, g: int, c: int | None) -> list[tuple[bytes, Graph, UnicyclicDecomposition]]:
    shapes = _shapes_upto(n - g + 1)
    by_size: dict[int, list[int]] = {}
    for i, sh in enumerate(shapes):
        by_size.setdefault(sh.size, []).append(i)
    out = []
    for comp in _compositions(n, g):
        # a dihedral-minimal rank tuple must start with its smallest rank, which
        # lets us prune at the first position
        choices = [by_size[s] for s in comp]
        ranks = [0] * g

        def rec(pos: int, cuts: int):
            if pos == g:
                tup = tuple(ranks)
                if (c is None or cuts == c) and _is_dihedral_min(tup):
                    chosen = [shapes[r] for r in tup]
                    graph, d = _graph_from_shapes(chosen)
                    code = b"U" + "|".join(sh.code for sh in chosen).encode()
                    out.append((code, graph, d))
                return
            for r in choices[pos]:
                if pos and r < ranks[0]:
                    continue
                sh = shapes[r]
                add = sh.cuts_below_root + sh.root_is_cut
                if c is not None and cuts + add > c:
                    continue
                ranks[pos] = r
                rec(pos + 1, cuts + add)

        rec(0, 0)
    return out


def _worker(args):
    n, g, c = args
    return [(code, graph) for code, graph, _ in _enumerate_girth(n, g, c)]


def enumerate_unicyclic_coded(q: EnumerationQuery, workers: int = 1) -> list[tuple[bytes, Graph]]:
    """All (canonical code, graph) pairs for the query, sorted by code."""
    jobs = [(q.n, g, q.c) for g in q.girths()]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_worker, jobs))
    else:
        chunks = [_worker(j) for j in jobs]
    items = [item for chunk in chunks for item in chunk]
    items.sort(key=lambda it: it[0])
    return items


def enumerate_unicyclic(q: EnumerationQuery, workers: int = 1) -> Iterator[Graph]:
    for _, graph in enumerate_unicyclic_coded(q, workers):
        yield graph


def enumerate_with_cuts(n: int, c: int, workers: int = 1) -> Iterator[Graph]:
    return enumerate_unicyclic(EnumerationQuery(n, c), workers)


# ---------------------------------------------------------------- extremal search

OBJECTIVES = ("max-N", "min-N", "max-W", "min-W")


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    c: int
    objective: str
    value: int
    optimizers: tuple[str, ...]  # hex canonical codes, sorted
    count: int  # |U(n, c)|
    graphs: tuple[Graph, ...] = field(default=(), compare=False, repr=False)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "c": self.c,
            "objective": self.objective,
            "value": str(self.value),
            "optimizers": list(self.optimizers),
            "count": self.count,
        }


def objective_value(objective: str, g: Graph) -> int:
    if objective.endswith("-N"):
        from .graph import decompose_unicyclic

        return count_cis_unicyclic(decompose_unicyclic(g))
    if objective.endswith("-W"):
        return wiener_index(g)
    raise GraphError(f"unknown objective {objective!r}")


def _scan(n: int, c: int, workers: int) -> list[tuple[bytes, Graph]]:
    return enumerate_unicyclic_coded(EnumerationQuery(n, c), workers)


def extremize(items: list[tuple[bytes, Graph]], n: int, c: int, objective: str) -> ExtremalReport:
    if objective not in OBJECTIVES:
        raise GraphError(f"objective must be one of {', '.join(OBJECTIVES)}")
    if not items:
        raise GraphError(f"U({n},{c}) is empty")
    sign = 1 if objective.startswith("max") else -1
    best = None
    winners: list[tuple[bytes, Graph]] = []
    for code, g in items:
        val = objective_value(objective, g)
        if best is None or sign * val > sign * best:
            best, winners = val, [(code, g)]
        elif val == best:
            winners.append((code, g))
    return ExtremalReport(n, c, objective, best, tuple(code.hex() for code, _ in winners),
                          len(items), tuple(g for _, g in winners))


def find_extremizers(n: int, c: int, objective: str = "max-N", workers: int = 1) -> ExtremalReport:
    """Exhaustive optimum of ``objective`` over U(n, c), keeping every tied optimiser."""
    return extremize(_scan(n, c, workers), n, c, objective)
