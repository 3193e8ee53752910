"""Simple undirected graphs and the structural queries the rest of the package needs.

Vertices are dense integers ``0..n-1``. A :class:`Graph` is immutable; every
operation that "modifies" a graph returns a new one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for structurally invalid input (disconnected, wrong cycle count, ...)."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        for v, nbrs in enumerate(self.adj):
            for a, b in zip(nbrs, nbrs[1:]):
                if a >= b:
                    raise GraphError(f"neighbours of {v} not strictly increasing")
            for w in nbrs:
                if w == v:
                    raise GraphError(f"loop at {v}")
                if not 0 <= w < self.n:
                    raise GraphError(f"neighbour {w} of {v} out of range")
                if v not in self.adj[w]:
                    raise GraphError(f"edge {v}-{w} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def empty(cls, n: int = 0) -> Graph:
        return cls(n, tuple(() for _ in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbor_masks(self) -> list[int]:
        return [sum(1 << w for w in nbrs) for nbrs in self.adj]

    def __str__(self) -> str:
        return format_edgelist(self)


# ---------------------------------------------------------------- text I/O


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: a header ``n m`` followed by ``m`` lines ``u v``.

    ``#`` starts a comment; blank lines are ignored. Errors carry the
    1-based line number of the offending line.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise ParseError(1, "missing header 'n m'")

    def ints(lineno: int, toks: list[str]) -> tuple[int, int]:
        if len(toks) != 2:
            raise ParseError(lineno, f"expected two integers, got {len(toks)} fields")
        try:
            a, b = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(lineno, "non-integer field") from None
        return a, b

    hline, htoks = rows[0]
    n, m = ints(hline, htoks)
    if n < 0 or m < 0:
        raise ParseError(hline, "negative header value")
    if len(rows) - 1 != m:
        bad = rows[-1][0] if len(rows) - 1 > m else hline
        raise ParseError(bad, f"header announces {m} edges, found {len(rows) - 1}")

    nbrs: list[set[int]] = [set() for _ in range(n)]
    for lineno, toks in rows[1:]:
        u, v = ints(lineno, toks)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex out of range 0..{n - 1}")
        if u == v:
            raise ParseError(lineno, f"loop at vertex {u}")
        if v in nbrs[u]:
            raise ParseError(lineno, f"duplicate edge {u} {v}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def format_edgelist(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- rewiring


def relabel(g: Graph, mapping: Sequence[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed to ``mapping[v]`` (a permutation)."""
    if sorted(mapping) != list(range(g.n)):
        raise GraphError("mapping is not a permutation")
    return Graph.from_edges(g.n, ((mapping[u], mapping[v]) for u, v in g.edges()))


def remove_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Delete vertices; survivors are renumbered in increasing order.

    Returns the new graph and the old-id -> new-id map of the survivors.
    """
    gone = set(removed)
    keep = [v for v in range(g.n) if v not in gone]
    index = {v: i for i, v in enumerate(keep)}
    edges = ((index[u], index[v]) for u, v in g.edges() if u in index and v in index)
    return Graph.from_edges(len(keep), edges), index


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    keep = set(vertices)
    return remove_vertices(g, (v for v in range(g.n) if v not in keep))


def add_edges(g: Graph, edges: Iterable[tuple[int, int]], new_vertices: int = 0) -> Graph:
    return Graph.from_edges(g.n + new_vertices, [*g.edges(), *edges])


def attach_path(g: Graph, at: int, order: int) -> tuple[Graph, list[int]]:
    """Attach a pendant path of ``order`` vertices *including* ``at``.

    Returns the new graph and the path's vertices from ``at`` to its free end.
    Order 1 attaches nothing.
    """
    if order < 1:
        raise GraphError("path order must be at least 1")
    verts = [at] + list(range(g.n, g.n + order - 1))
    return add_edges(g, zip(verts, verts[1:]), order - 1), verts


def glue(parts: Sequence[Graph], identify: Iterable[tuple[tuple[int, int], tuple[int, int]]] = ()
         ) -> tuple[Graph, list[list[int]]]:
    """Disjoint union of ``parts`` with some vertices identified.

    ``identify`` holds pairs ``((i, u), (j, v))`` meaning vertex ``u`` of part
    ``i`` is merged with vertex ``v`` of part ``j``. Returns the glued graph and,
    for each part, the new id of each of its vertices. Merged vertices take the
    smallest position in the union; survivors are numbered in union order.
    """
    offsets = []
    total = 0
    for p in parts:
        offsets.append(total)
        total += p.n
    parent = list(range(total))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (i, u), (j, v) in identify:
        a, b = find(offsets[i] + u), find(offsets[j] + v)
        if a != b:
            parent[max(a, b)] = min(a, b)

    roots = sorted({find(x) for x in range(total)})
    index = {r: k for k, r in enumerate(roots)}
    maps = [[index[find(offsets[i] + v)] for v in range(p.n)] for i, p in enumerate(parts)]
    edges = set()
    for p, mp in zip(parts, maps):
        for u, v in p.edges():
            a, b = mp[u], mp[v]
            if a == b:
                raise GraphError("identification collapses an edge")
            edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(len(roots), sorted(edges)), maps


# ---------------------------------------------------------------- structure


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def _require_connected(g: Graph, what: str) -> None:
    if not is_connected(g):
        raise GraphError(f"{what} requires a connected graph")


def cut_vertices(g: Graph) -> set[int]:
    """Articulation points via one iterative depth-first search (low-link)."""
    _require_connected(g, "cut_vertices")
    disc = [-1] * g.n
    low = [0] * g.n
    cuts: set[int] = set()
    root = 0
    disc[root] = low[root] = 0
    clock = 1
    root_children = 0
    # frames: (vertex, parent, neighbour iterator)
    stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(g.adj[root]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                disc[w] = low[w] = clock
                clock += 1
                stack.append((w, v, iter(g.adj[w])))
                advanced = True
                break
            if w != parent:
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[v])
        if parent == root:
            root_children += 1
        elif low[v] >= disc[parent]:
            cuts.add(parent)
    if root_children > 1:
        cuts.add(root)
    return cuts


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for forests.

    BFS from every vertex; a non-tree edge ``(u, w)`` seen from root ``s``
    closes a closed walk of length ``d(u) + d(w) + 1`` through ``s``, and the
    minimum over all roots is the girth.
    """
    best = None
    for s in range(g.n):
        dist = [-1] * g.n
        par = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    par[w] = u
                    q.append(w)
                elif par[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def bfs_distances(g: Graph, s: int) -> list[int]:
    dist = [-1] * g.n
    dist[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        for w in g.adj[u]:
            if dist[w] == -1:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def wiener_index(g: Graph) -> int:
    """Sum of shortest-path distances over unordered vertex pairs."""
    _require_connected(g, "wiener_index")
    return sum(sum(bfs_distances(g, s)) for s in range(g.n)) // 2


def is_unicyclic(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


def permute(g: Graph, rng) -> Graph:
    """Random relabelling; ``rng`` is a :class:`random.Random`."""
    perm = list(range(g.n))
    rng.shuffle(perm)
    return relabel(g, perm)


# ---------------------------------------------------------------- unicyclic shape


@dataclass(frozen=True)
class RootedTree:
    """A rooted tree over graph vertex ids.

    ``children`` maps every vertex of the tree (leaves included) to the tuple
    of its children in increasing id order.
    """

    root: int
    children: dict[int, tuple[int, ...]] = field(hash=False, compare=True)

    @property
    def size(self) -> int:
        return len(self.children)

    def vertices(self) -> list[int]:
        """Preorder."""
        out = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(reversed(self.children[v]))
        return out

    def postorder(self) -> list[int]:
        return self.vertices()[::-1]

    def parents(self) -> dict[int, int]:
        return {c: v for v, cs in self.children.items() for c in cs}

    def fringe(self, v: int) -> RootedTree:
        """The fringe subtree ``T[v]``: ``v`` and all of its descendants."""
        sub = {}
        stack = [v]
        while stack:
            x = stack.pop()
            sub[x] = self.children[x]
            stack.extend(self.children[x])
        return RootedTree(v, sub)

    def branching_vertices(self) -> list[int]:
        return sorted(v for v, cs in self.children.items() if len(cs) > 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(v, c) for v, cs in self.children.items() for c in cs]

    def code(self) -> str:
        """Canonical parenthesis code; equal for isomorphic rooted trees."""
        codes: dict[int, str] = {}
        for v in self.postorder():
            kids = sorted((codes.pop(c) for c in self.children[v]), reverse=True)
            codes[v] = "(" + "".join(kids) + ")"
        return codes[self.root]

    def level_sequence(self) -> list[int]:
        """Canonical level sequence (root at level 0), read off :meth:`code`."""
        out = []
        depth = 0
        for ch in self.code():
            if ch == "(":
                out.append(depth)
                depth += 1
            else:
                depth -= 1
        return out

    @classmethod
    def from_level_sequence(cls, levels: Sequence[int], first_id: int = 0, root_id: int | None = None
                            ) -> RootedTree:
        """Build a tree from a level sequence; vertex ``i`` of the sequence gets id
        ``first_id + i`` (or ``root_id`` for the root)."""
        if not levels or levels[0] != 0:
            raise GraphError("level sequence must start with the root at level 0")
        ids = [root_id if (i == 0 and root_id is not None) else first_id + i - (root_id is not None)
               for i in range(len(levels))]
        children: dict[int, list[int]] = {x: [] for x in ids}
        path = [ids[0]]
        for i in range(1, len(levels)):
            lv = levels[i]
            if lv < 1 or lv > len(path):
                raise GraphError("invalid level sequence")
            del path[lv:]
            children[path[-1]].append(ids[i])
            path.append(ids[i])
        return cls(ids[0], {v: tuple(sorted(cs)) for v, cs in children.items()})


def tree_from_graph(g: Graph, root: int, blocked: Iterable[int] = ()) -> RootedTree:
    """Rooted tree spanned from ``root`` without entering ``blocked`` vertices."""
    stop = set(blocked)
    stop.discard(root)
    children: dict[int, tuple[int, ...]] = {}
    parent = {root: -1}
    stack = [root]
    while stack:
        v = stack.pop()
        kids = tuple(w for w in g.adj[v] if w not in stop and w != parent[v])
        for w in kids:
            if w in parent:
                raise GraphError("not a tree below the given root")
            parent[w] = v
            stack.append(w)
        children[v] = kids
    return RootedTree(root, children)


@dataclass(frozen=True)
class UnicyclicDecomposition:
    """The unique cycle ``v_0..v_{g-1}`` and the tree hanging from each ``v_j``."""

    cycle: tuple[int, ...]
    trees: tuple[RootedTree, ...]

    @property
    def girth(self) -> int:
        return len(self.cycle)

    @property
    def n(self) -> int:
        return sum(t.size for t in self.trees)

    @property
    def vertex_map(self) -> dict[int, int]:
        """Vertex id -> index ``j`` of the tree ``T_j`` containing it."""
        return {v: j for j, t in enumerate(self.trees) for v in t.children}

    def rotated(self, shift: int) -> UnicyclicDecomposition:
        """Renumber positions so that old position ``shift`` becomes ``v_0``."""
        k = shift % self.girth
        return UnicyclicDecomposition(self.cycle[k:] + self.cycle[:k], self.trees[k:] + self.trees[:k])

    def to_graph(self) -> Graph:
        g = self.girth
        edges = [(self.cycle[j], self.cycle[(j + 1) % g]) for j in range(g)]
        for t in self.trees:
            edges.extend(t.edges())
        return Graph.from_edges(self.n, edges)


def decompose_unicyclic(g: Graph) -> UnicyclicDecomposition:
    """Split a unicyclic graph into its cycle and rooted trees.

    ``v_0`` is the smallest cycle vertex and ``v_1`` its smaller cycle neighbour.
    """
    if not is_connected(g):
        raise GraphError("decompose_unicyclic requires a connected graph")
    if g.m != g.n:
        raise GraphError(f"not unicyclic: {g.n} vertices but {g.m} edges")
    deg = [g.degree(v) for v in range(g.n)]
    on_cycle = [True] * g.n
    leaves = [v for v in range(g.n) if deg[v] == 1]
    while leaves:
        v = leaves.pop()
        on_cycle[v] = False
        for w in g.adj[v]:
            if on_cycle[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
    start = on_cycle.index(True)
    cyc = [start]
    prev, cur = -1, min(w for w in g.adj[start] if on_cycle[w])
    prev = start
    while cur != start:
        cyc.append(cur)
        nxt = [w for w in g.adj[cur] if on_cycle[w] and w != prev]
        prev, cur = cur, nxt[0]
    blocked = set(cyc)
    trees = tuple(tree_from_graph(g, v, blocked) for v in cyc)
    return UnicyclicDecomposition(tuple(cyc), trees)


# ---------------------------------------------------------------- canonical codes


def _tree_centroids(g: Graph) -> list[int]:
    n = g.n
    order = []
    parent = [-1] * n
    seen = [False] * n
    stack = [0]
    seen[0] = True
    while stack:
        v = stack.pop()
        order.append(v)
        for w in g.adj[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                stack.append(w)
    size = [1] * n
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    best, out = n + 1, []
    for v in range(n):
        heaviest = n - size[v]
        for w in g.adj[v]:
            if parent[w] == v:
                heaviest = max(heaviest, size[w])
        if heaviest < best:
            best, out = heaviest, [v]
        elif heaviest == best:
            out.append(v)
    return out


def necklace_min(codes: Sequence[str]) -> tuple[str, ...]:
    """Lexicographically least image of ``codes`` under cyclic rotation and reflection."""
    g = len(codes)
    seq = tuple(codes)
    rev = seq[::-1]
    return min(min(seq[k:] + seq[:k] for k in range(g)), min(rev[k:] + rev[:k] for k in range(g)))


def canonical_code(g: Graph) -> bytes:
    """Isomorphism-invariant code for trees and unicyclic graphs.

    Trees: ``T`` + rooted code at the centroid (smaller of two if bicentroidal).
    Unicyclic: ``U`` + rooted codes of the cycle trees, joined by ``|`` in the
    dihedrally least order.
    """
    if not is_connected(g):
        raise GraphError("canonical_code requires a connected graph")
    if g.m == g.n - 1:
        return b"T" + min(tree_from_graph(g, c).code() for c in _tree_centroids(g)).encode()
    if g.m == g.n:
        d = decompose_unicyclic(g)
        return b"U" + "|".join(necklace_min([t.code() for t in d.trees])).encode()
    raise GraphError("canonical_code supports trees and unicyclic graphs only")


def canonical_hex(g: Graph) -> str:
    return canonical_code(g).hex()
