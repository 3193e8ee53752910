"""Graph rewrites used in the extremal argument, each paired with its closed-form
change in N and its cut-vertex bookkeeping.

Every transform returns a :class:`TransformOutcome`. ``cut_preserved`` is what
the rewrite's hypotheses promise: ``True`` (c unchanged), ``False`` (c changes;
only the leaf move makes this claim) or ``None`` (no claim).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb, prod
from typing import Callable

from .count import count_cis, count_cis_rooted, count_cis_oracle, tree_count_rooted
from .generators import random_connected, random_tree
from .graph import (
    Graph,
    GraphError,
    UnicyclicDecomposition,
    add_edges,
    attach_path,
    cut_vertices,
    decompose_unicyclic,
    glue,
    is_connected,
)


class TransformError(GraphError):
    pass


@dataclass(frozen=True)
class TransformOutcome:
    lemma: str
    before: Graph
    after: tuple[Graph, ...]
    predicted_delta: tuple[int, ...]
    cut_preserved: tuple[bool | None, ...]
    details: dict = field(default_factory=dict, compare=False)


def _c(g: Graph) -> int:
    return len(cut_vertices(g))


def _nontrivial(g: Graph, name: str) -> None:
    if g.n < 2:
        raise TransformError(f"{name} must be non-trivial")
    if not is_connected(g):
        raise TransformError(f"{name} must be connected")


# ---------------------------------------------------------------- merging


def merge_count(g1: Graph, u1: int, g2: Graph, u2: int) -> tuple[Graph, int]:
    """Identify ``u1`` with ``u2``; N of the result from the two parts alone."""
    if not (is_connected(g1) and is_connected(g2)):
        raise TransformError("both parts must be connected")
    merged, _ = glue([g1, g2], [((0, u1), (1, u2))])
    value = (count_cis(g1) + count_cis(g2) - 1
             + (count_cis_rooted(g1, u1) - 1) * (count_cis_rooted(g2, u2) - 1))
    return merged, value


# ---------------------------------------------------------------- one branching vertex


def single_branch_variants(L: Graph, l: int, M: Graph, u: int, v: int, R: Graph, r: int
                           ) -> TransformOutcome:
    """G hangs L at u and R at v; G' hangs both at u, G'' both at v."""
    for name, part in (("L", L), ("M", M), ("R", R)):
        _nontrivial(part, name)
    if u == v:
        raise TransformError("u and v must differ")
    G, _ = glue([L, M, R], [((0, l), (1, u)), ((2, r), (1, v))])
    G1, _ = glue([L, M, R], [((0, l), (1, u)), ((2, r), (1, u))])
    G2, _ = glue([L, M, R], [((0, l), (1, v)), ((2, r), (1, v))])
    nl, nr = count_cis_rooted(L, l), count_cis_rooted(R, r)
    a = count_cis_rooted(M, u, without=[v])  # N(M - v)_u
    b = count_cis_rooted(M, v, without=[u])  # N(M - u)_v
    d1 = (nr - 1) * (nl * a - b)
    d2 = (nl - 1) * (nr * b - a)
    mc = cut_vertices(M)
    flag = True if (u in mc and v in mc) else None
    return TransformOutcome("single-branch", G, (G1, G2), (d1, d2), (flag, flag),
                            {"N(L)_l": nl, "N(R)_r": nr, "N(M-v)_u": a, "N(M-u)_v": b})


# ---------------------------------------------------------------- girth reduction


def _arc_weight(f, idx) -> int:
    return prod(f[j] for j in idx)


def girth_reduce_terms(f: list[int]) -> dict[str, int]:
    """M_1, M_2 and two versions of M_3 for cycle weights ``f`` (pivot at g-2).

    ``M3_published`` is the published triple sum. ``M3_exact`` counts cycle arcs
    through both ``v_{g-2}`` and ``v_{g-1}`` directly: extend ``a`` steps back
    from ``v_{g-2}`` and ``b`` steps forward from ``v_{g-1}``; ``a + b = g - 2``
    is the whole cycle, counted once. The two differ by
    ``(g - 4) * prod(f[0..g-3])``.
    """
    g = len(f)
    m1 = sum(_arc_weight(f, [g - j for j in range(3, r + 1)]) for r in range(3, g + 1))
    m2 = sum(_arc_weight(f, range(0, l + 1)) for l in range(0, g - 2))
    m3_published = (1 + sum(_arc_weight(f, [g - j for j in range(3, r + 1)]) for r in range(3, g))
                + sum(_arc_weight(f, range(0, l + 1)) for l in range(0, g - 3))
                + sum(_arc_weight(f, range(0, l + 1)) * _arc_weight(f, [g - j for j in range(3, r + 1)])
                      for l in range(0, g - 3) for r in range(3, g - l)))
    m3_exact = _arc_weight(f, range(0, g - 2))
    for a in range(0, g - 2):
        for b in range(0, g - 2 - a):
            back = [g - 3 - i for i in range(a)]
            fwd = list(range(b))
            m3_exact += _arc_weight(f, back + fwd)
    return {"M1": m1, "M2": m2, "M3_published": m3_published, "M3_exact": m3_exact}


def girth_reduce(d: UnicyclicDecomposition, pivot: int) -> TransformOutcome:
    """Shorten the cycle by one: ``v_{g-1}`` is detached from ``v_0`` and hung
    below the pivot, which is closed onto ``v_0``.

    Positions are rotated so the pivot sits at ``g-2``. The pivot's tree must
    have the largest rooted count. ``predicted_delta`` evaluates the published
    difference with the published M_3; ``details['exact_delta']`` uses the
    direct arc count instead. ``details['claims_increase']`` is the sign the
    rewrite is claimed to have (``None`` when no sign is claimed).
    """
    g = d.girth
    if g <= 3:
        raise TransformError("girth reduction needs g > 3")
    d = d.rotated(pivot - (g - 2))
    f = [tree_count_rooted(t).fringe[t.root] for t in d.trees]
    if f[g - 2] != max(f):
        raise TransformError("pivot tree must maximise the rooted count")
    G = d.to_graph()
    cyc = d.cycle
    kept = [e for e in G.edges() if set(e) != {cyc[g - 1], cyc[0]}]
    Gp = Graph.from_edges(G.n, kept + [(cyc[g - 2], cyc[0])])
    t = girth_reduce_terms(f)
    fa, fb = f[g - 2], f[g - 1]
    published = fa * (t["M3_published"] - 1) - fa * t["M1"] - fb * t["M2"]
    exact = fa * (t["M3_exact"] - 1) - fa * t["M1"] - fb * t["M2"]
    if g > 4:
        claim = True
    else:
        claim = None  # sign decided by the threshold below
    details = {**t, "f": f, "exact_delta": exact, "claims_increase": claim}
    if g == 4:
        details["threshold_delta"] = f[0] * (f[2] - f[3] * (1 + f[1]))
        details["claims_nonnegative"] = f[2] >= f[3] * (1 + f[1])
    is_cycle = all(tr.size == 1 for tr in d.trees)
    return TransformOutcome("girth-reduce", G, (Gp,), (published,), (None if is_cycle else True,), details)


# ---------------------------------------------------------------- path shifting


def _ab_graph(A: Graph, u: int, B: Graph, v: int, n1: int, n2: int) -> Graph:
    """A with a pendant path of order n1 at u, joined to B by a u-v path of order n2
    (n2 = 1 identifies u with v)."""
    if n2 == 1:
        base, maps = glue([A, B], [((0, u), (1, v))])
    else:
        base, maps = glue([A, B])
    uu, vv = maps[0][u], maps[1][v]
    if n2 >= 2:
        inner = list(range(base.n, base.n + n2 - 2))
        chain = [uu] + inner + [vv]
        base = add_edges(base, zip(chain, chain[1:]), len(inner))
    out, _ = attach_path(base, uu, n1)
    return out


def path_shift(A: Graph, u: int, B: Graph, v: int, n1: int, n2: int) -> TransformOutcome:
    """Move one vertex between the pendant path at ``u`` (order n1) and the
    ``u``-``v`` path (order n2): G' = (n1-1, n2+1), G'' = (n1+1, n2-1)."""
    if A.n < 2 or not is_connected(A) or not is_connected(B):
        raise TransformError("A must be connected and non-trivial, B connected")
    if n1 < 2 or n2 < 2:
        raise TransformError("path orders must exceed 1")
    G = _ab_graph(A, u, B, v, n1, n2)
    G1 = _ab_graph(A, u, B, v, n1 - 1, n2 + 1)
    G2 = _ab_graph(A, u, B, v, n1 + 1, n2 - 1)
    au = count_cis_rooted(A, u)
    bv = count_cis_rooted(B, v)
    d1 = (au - 1) * (n1 - n2 - bv)
    if n2 > 2:
        d2 = -(au - 1) * (n1 - n2 + 2 - bv)
    else:
        d2 = -(au - 1) * (n1 - bv)
    flag1 = True if n1 > 2 else None
    flag2 = True if (n2 > 2 or B.n > 1) else None
    return TransformOutcome("path-shift", G, (G1, G2), (d1, d2), (flag1, flag2),
                            {"N(A)_u": au, "N(B)_v": bv,
                             "G'_increases": bv < n1 - n2, "G''_increases": bv > n1 - n2 + 2})


# ---------------------------------------------------------------- leaf moves


def leaf_move(h: Graph, x: int, y: int) -> TransformOutcome:
    """G has a pendant edge at ``y``, G' has it at ``x`` instead."""
    if x == y:
        raise TransformError("x and y must differ")
    if not is_connected(h):
        raise TransformError("H must be connected")
    G = add_edges(h, [(y, h.n)], 1)
    Gp = add_edges(h, [(x, h.n)], 1)
    delta = count_cis_rooted(h, x) - count_cis_rooted(h, y)
    hc = cut_vertices(h)
    return TransformOutcome("leaf-move", G, (Gp,), (delta,), ((x in hc) == (y in hc),))


# ---------------------------------------------------------------- balancing paths on an edge


def path_pair_graph(h: Graph, u: int, v: int, n1: int, n2: int) -> Graph:
    g, _ = attach_path(h, u, n1)
    g, _ = attach_path(g, v, n2)
    return g


def _path_pair_terms(h: Graph, u: int, v: int) -> tuple[int, int, int, int]:
    if not h.has_edge(u, v):
        raise TransformError(f"{u}{v} is not an edge of H")
    return (count_cis_rooted(h, (u, v)), count_cis_rooted(h, u, without=[v]),
            count_cis_rooted(h, v, without=[u]), count_cis_rooted(h, (), without=[u, v]))


def path_balance_count(h: Graph, u: int, v: int, n1: int, n2: int) -> int:
    """N(H(n1; n2)) from four counts of H."""
    if n1 < 1 or n2 < 1:
        raise TransformError("path orders must be at least 1")
    nuv, nu, nv, rest = _path_pair_terms(h, u, v)
    return n1 * n2 * nuv + n1 * nu + n2 * nv + comb(n1, 2) + comb(n2, 2) + rest


def path_balance(h: Graph, u: int, v: int, n1: int, n2: int) -> TransformOutcome:
    """H(n1; n2) -> H(n1 + 1; n2 - 1)."""
    if n1 < 1 or n2 < 2:
        raise TransformError("need n1 >= 1 and n2 >= 2")
    nuv, nu, nv, _ = _path_pair_terms(h, u, v)
    before = path_pair_graph(h, u, v, n1, n2)
    after = path_pair_graph(h, u, v, n1 + 1, n2 - 1)
    delta = (n2 - n1 - 1) * (nuv - 1) + nu - nv
    hyp = n1 <= n2 - 2 and h.degree(u) != 1
    flag = True if hyp and not (n1 == 1 and u in cut_vertices(h)) else None
    return TransformOutcome("path-balance", before, (after,), (delta,), (flag,),
                            {"claims_increase": hyp})


# ---------------------------------------------------------------- randomized suites

LEMMAS = ("single-branch", "girth-reduce", "path-shift", "leaf-move", "path-balance")
MAX_ORDER = 14


def _pick(g: Graph, rng: random.Random) -> int:
    return rng.randrange(g.n)


def random_instance(lemma: str, rng: random.Random) -> TransformOutcome:
    """One valid instance of ``lemma`` with every graph of order <= 14."""
    if lemma == "single-branch":
        L, R = random_tree(rng.randint(2, 4), rng), random_tree(rng.randint(2, 4), rng)
        M = random_connected(rng.randint(2, MAX_ORDER + 2 - L.n - R.n), rng)
        u, v = rng.sample(range(M.n), 2)
        return single_branch_variants(L, _pick(L, rng), M, u, v, R, _pick(R, rng))
    if lemma == "girth-reduce":
        while True:
            g = rng.randint(4, 8)
            n = rng.randint(g, MAX_ORDER)
            sizes = [1] * g
            for _ in range(n - g):
                sizes[rng.randrange(g)] += 1
            parts = [random_tree(s, rng) for s in sizes]
            glued, maps = glue(parts)
            roots = [maps[j][_pick(p, rng)] for j, p in enumerate(parts)]
            G = add_edges(glued, [(roots[j], roots[(j + 1) % g]) for j in range(g)])
            d = decompose_unicyclic(G)
            f = [tree_count_rooted(t).fringe[t.root] for t in d.trees]
            best = [j for j, x in enumerate(f) if x == max(f)]
            return girth_reduce(d, rng.choice(best))
    if lemma == "path-shift":
        A = random_connected(rng.randint(2, 5), rng)
        B = random_connected(rng.randint(1, 4), rng)
        budget = MAX_ORDER - A.n - B.n + 3  # n1 + n2 <= budget keeps every variant <= 14
        n1 = rng.randint(2, max(2, budget - 2))
        n2 = rng.randint(2, max(2, budget - n1))
        return path_shift(A, _pick(A, rng), B, _pick(B, rng), n1, n2)
    if lemma == "leaf-move":
        H = random_connected(rng.randint(2, MAX_ORDER - 1), rng)
        x, y = rng.sample(range(H.n), 2)
        return leaf_move(H, x, y)
    if lemma == "path-balance":
        H = random_connected(rng.randint(2, 8), rng)
        u, v = rng.choice(H.edges())
        if rng.random() < 0.5:
            u, v = v, u
        room = MAX_ORDER - H.n + 2
        n2 = rng.randint(2, room - 1)
        n1 = rng.randint(1, room - n2)
        return path_balance(H, u, v, n1, n2)
    raise TransformError(f"unknown lemma {lemma!r}")


@dataclass
class LemmaCheck:
    lemma: str
    trials: int = 0
    delta_mismatches: int = 0
    cut_violations: int = 0
    claim_violations: int = 0
    max_order: int = 0
    examples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.delta_mismatches or self.cut_violations or self.claim_violations)


def check_outcome(out: TransformOutcome, counter: Callable[[Graph], int] = count_cis_oracle) -> dict:
    """Compare an outcome against direct counts. Returns per-alternative verdicts."""
    before_n = counter(out.before)
    before_c = _c(out.before)
    actual = [counter(a) - before_n for a in out.after]
    delta_ok = all(p == a for p, a in zip(out.predicted_delta, actual))
    cut_ok = True
    for flag, a in zip(out.cut_preserved, out.after):
        if flag is None:
            continue
        if (_c(a) == before_c) != flag:
            cut_ok = False
    claim_ok = True
    if out.lemma == "single-branch":
        claim_ok = max(actual) > 0
    elif out.lemma == "girth-reduce":
        if out.details.get("claims_increase"):
            claim_ok = actual[0] > 0
        elif "claims_nonnegative" in out.details:
            claim_ok = (actual[0] >= 0) == out.details["claims_nonnegative"]
    elif out.lemma == "path-shift":
        claim_ok = ((actual[0] > 0) == out.details["G'_increases"]
                    and (actual[1] > 0) == out.details["G''_increases"])
    elif out.lemma == "path-balance" and out.details["claims_increase"]:
        claim_ok = actual[0] > 0
    return {"actual": actual, "delta_ok": delta_ok, "cut_ok": cut_ok, "claim_ok": claim_ok}


def lemma_suite(lemma: str, trials: int = 500, seed: int = 0) -> LemmaCheck:
    rng = random.Random(f"{lemma}:{seed}")
    rep = LemmaCheck(lemma)
    for _ in range(trials):
        out = random_instance(lemma, rng)
        res = check_outcome(out)
        rep.trials += 1
        rep.max_order = max(rep.max_order, out.before.n, *(a.n for a in out.after))
        bad = False
        if not res["delta_ok"]:
            rep.delta_mismatches += 1
            bad = True
        if not res["cut_ok"]:
            rep.cut_violations += 1
            bad = True
        if not res["claim_ok"]:
            rep.claim_violations += 1
            bad = True
        if bad and len(rep.examples) < 3:
            rep.examples.append({"before": out.before.edges(), "n": out.before.n,
                                 "predicted": out.predicted_delta, "actual": res["actual"]})
    return rep
