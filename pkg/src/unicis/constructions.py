"""The extremal graphs Delta_{n,c}, Omega_{n,n-4}, Omega_{n,n-5} and the predicted
maximiser set for every admissible (n, c).

Labelling is deterministic: cycle vertices ``0..g-1`` first, then the pendant
paths in definition order, each path listed from the corner outwards.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError


class ConstructionError(GraphError):
    pass


@dataclass(frozen=True)
class ConstructionParams:
    """Shape of one construction.

    ``paths`` lists ``(corner, length)`` in emission order, where ``length``
    counts the path vertices beyond the corner (zero-length entries are kept
    for Delta but attach nothing).
    """

    family: str  # "delta", "omega-n4" or "omega-n5"
    n: int
    c: int
    girth: int
    paths: tuple[tuple[int, int], ...]
    q: int | None = None
    r: int | None = None
    m: int | None = None
    k: int | None = None

    @property
    def corner_orders(self) -> list[list[int]]:
        """Pendant-path orders (corner included) at each cycle vertex."""
        out: list[list[int]] = [[] for _ in range(self.girth)]
        for corner, length in self.paths:
            if length:
                out[corner].append(length + 1)
        return out


def _check_range(n: int, c: int) -> None:
    if n <= 3 or not 0 < c < n - 2:
        raise ConstructionError(f"need n > 3 and 0 < c < n - 2, got n={n}, c={c}")


def delta_params(n: int, c: int) -> ConstructionParams:
    _check_range(n, c)
    parts = n - c
    q, r = divmod(n - 3, parts)
    lengths = [q + 1] * r + [q] * (parts - r)
    paths = [(2, l) for l in lengths[: parts - 2]] + [(1, lengths[parts - 2]), (0, lengths[parts - 1])]
    return ConstructionParams("delta", n, c, 3, tuple(paths), q=q, r=r)


def omega_params(n: int, c: int) -> ConstructionParams:
    """Square-based construction; defined for c = n-4 (n >= 5) and for
    c = n-5 when n > 7 and n mod 5 is 0, 3 or 4."""
    _check_range(n, c)
    if c == n - 4:
        m, r = divmod(n, 4)
        orders = [m + (j < r) for j in range(4)]
        paths = tuple((j, orders[j] - 1) for j in range(4))
        return ConstructionParams("omega-n4", n, c, 4, paths, m=m, r=r)
    if c == n - 5:
        if n <= 7 or n % 5 in (1, 2):
            raise ConstructionError(f"Omega undefined for this residue (n={n}, c={c})")
        k = (-n) % 5
        m = (n + k) // 5
        orders = {0: [m, m, m + 1, m], 1: [m, m, m, m], 2: [m - 1, m, m, m]}[k]
        paths = tuple((j, orders[j] - 1) for j in range(4)) + ((2, m - 1),)
        return ConstructionParams("omega-n5", n, c, 4, paths, m=m, k=k)
    raise ConstructionError(f"Omega is only defined for c = n-4 or c = n-5 (n={n}, c={c})")


def construction_params(family: str, n: int, c: int) -> ConstructionParams:
    if family == "delta":
        return delta_params(n, c)
    if family == "omega":
        return omega_params(n, c)
    raise ConstructionError(f"unknown family {family!r}")


def build(params: ConstructionParams) -> Graph:
    g = params.girth
    edges = [(j, (j + 1) % g) for j in range(g)]
    nxt = g
    for corner, length in params.paths:
        prev = corner
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    if nxt != params.n:
        raise ConstructionError(f"construction produced {nxt} vertices, expected {params.n}")
    return Graph.from_edges(params.n, edges)


def build_delta(n: int, c: int) -> Graph:
    return build(delta_params(n, c))


def build_omega(n: int, c: int) -> Graph:
    return build(omega_params(n, c))


def build_family(family: str, n: int, c: int) -> Graph:
    return build(construction_params(family, n, c))


@dataclass(frozen=True)
class TheoremPrediction:
    n: int
    c: int
    predicted: frozenset[str]  # subset of {"delta", "omega"}
    extrapolated: bool = False

    def graphs(self) -> dict[str, Graph]:
        return {fam: build_family(fam, self.n, self.c) for fam in sorted(self.predicted)}


def predicted_maximizers(n: int, c: int) -> TheoremPrediction:
    """Which of Delta/Omega maximise N over U(n, c).

    For c = n-5 with n = 1, 2 (mod 5) no statement covers the case; Delta is
    returned with ``extrapolated=True``.
    """
    _check_range(n, c)
    both = frozenset({"delta", "omega"})
    delta, omega = frozenset({"delta"}), frozenset({"omega"})
    if c == n - 3 or c < n - 5:
        return TheoremPrediction(n, c, delta)
    if c == n - 4:
        return TheoremPrediction(n, c, both if c == 1 else omega)
    # c == n - 5
    if n % 5 == 0 or c == 3:
        return TheoremPrediction(n, c, both)
    if n % 5 in (3, 4):
        return TheoremPrediction(n, c, omega)
    return TheoremPrediction(n, c, delta, extrapolated=True)
