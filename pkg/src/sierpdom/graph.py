"""Immutable simple graphs on vertices ``1..n`` and the standard families.

All public functions speak 1-based vertex labels.  Internally a graph keeps
one frozenset of neighbours per vertex plus lazily built integer bitmasks
(bit ``v - 1`` stands for vertex ``v``) used by the domination kernel.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Sequence

from .errors import InvalidListError, InvalidOrderError, VertexError


def mod_star(t: int, n: int) -> int:
    """1-based wraparound: ``t mod* n = (t - 1) mod n + 1``."""
    return (t - 1) % n + 1


class Graph:
    """Simple undirected graph with vertex set ``{1, ..., n}``.

    ``family`` is an informational tag set by the builders (``"cycle"``,
    ``"complete"``, ...) and ``origin`` maps each vertex to its label in the
    graph it was derived from, when there is one.  Neither takes part in
    equality, which compares order and edge set only.
    """

    __slots__ = ("_n", "_adj", "_edges", "family", "origin", "_masks")

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[int]] = (),
        *,
        family: str | None = None,
        origin: Sequence[int] | None = None,
    ):
        if not isinstance(n, int) or n < 0:
            raise InvalidOrderError(f"vertex count must be a non-negative integer, got {n!r}")
        adj: list[set[int]] = [set() for _ in range(n)]
        norm = set()
        for e in edges:
            u, v = e
            if not (1 <= u <= n and 1 <= v <= n):
                raise VertexError(f"edge {u}-{v} outside [1, {n}]")
            if u == v:
                raise VertexError(f"self-loop at {u}")
            adj[u - 1].add(v)
            adj[v - 1].add(u)
            norm.add((u, v) if u < v else (v, u))
        self._n = n
        self._adj = tuple(frozenset(a) for a in adj)
        self._edges = tuple(sorted(norm))
        self.family = family
        self.origin = tuple(origin) if origin is not None else None
        if self.origin is not None and len(self.origin) != n:
            raise ValueError("origin map must have one entry per vertex")
        self._masks = None

    # basic invariants -------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return self._edges

    def vertices(self) -> range:
        return range(1, self._n + 1)

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 1 <= v <= self._n:
            raise VertexError(f"vertex {v!r} not in [1, {self._n}]")
        return v

    def check_vertices(self, vs: Iterable[int]) -> frozenset[int]:
        return frozenset(self.check_vertex(v) for v in vs)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[self.check_vertex(v) - 1]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors(u)

    def closed_masks(self) -> tuple[int, ...]:
        """Closed neighbourhood of every vertex as a bitmask (0-based bits)."""
        if self._masks is None:
            out = []
            for i, a in enumerate(self._adj):
                mask = 1 << i
                for w in a:
                    mask |= 1 << (w - 1)
                out.append(mask)
            self._masks = tuple(out)
        return self._masks

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        tag = f" {self.family}" if self.family else ""
        return f"<Graph{tag} n={self._n} m={self.m}>"

    # derived quantities -----------------------------------------------

    def bfs_distances(self, source: int) -> list[float]:
        """Distances from ``source`` to every vertex, indexed ``0..n-1``."""
        self.check_vertex(source)
        dist: list[float] = [math.inf] * self._n
        dist[source - 1] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du = dist[u - 1]
            for w in self._adj[u - 1]:
                if dist[w - 1] == math.inf:
                    dist[w - 1] = du + 1
                    queue.append(w)
        return dist

    def components(self) -> list[list[int]]:
        seen = [False] * self._n
        comps = []
        for s in self.vertices():
            if seen[s - 1]:
                continue
            seen[s - 1] = True
            comp, stack = [], [s]
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self._adj[u - 1]:
                    if not seen[w - 1]:
                        seen[w - 1] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def diameter(self) -> float:
        return max((max(self.bfs_distances(v)) for v in self.vertices()), default=0)


# builders -------------------------------------------------------------


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidOrderError(f"a cycle needs n >= 3, got {n}")
    return Graph(n, ((i, mod_star(i + 1, n)) for i in range(1, n + 1)), family="cycle")


def build_path(n: int) -> Graph:
    if n < 1:
        raise InvalidOrderError(f"a path needs n >= 1, got {n}")
    return Graph(n, ((i, i + 1) for i in range(1, n)), family="path")


def build_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidOrderError(f"a complete graph needs n >= 1, got {n}")
    return Graph(
        n, ((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)), family="complete"
    )


def build_star(n: int) -> Graph:
    """K_{1,n-1} with centre 1."""
    if n < 1:
        raise InvalidOrderError(f"a star needs n >= 1, got {n}")
    return Graph(n, ((1, i) for i in range(2, n + 1)), family="star")


def build_empty(n: int) -> Graph:
    if n < 1:
        raise InvalidOrderError(f"need n >= 1, got {n}")
    return Graph(n, (), family="empty")


def build_circulant(n: int, jumps: Iterable[int]) -> Graph:
    """C_n<L>: vertex i is adjacent to i + j and i - j (mod* n) for j in L."""
    if n < 3:
        raise InvalidOrderError(f"a circulant needs n >= 3, got {n}")
    jumps = sorted(set(jumps))
    if not jumps:
        raise InvalidListError("jump list must be nonempty")
    bad = [j for j in jumps if not 1 <= j <= n // 2]
    if bad:
        raise InvalidListError(f"jumps {bad} outside [1, {n // 2}]")
    edges = ((i, mod_star(i + j, n)) for j in jumps for i in range(1, n + 1))
    return Graph(n, edges, family="circulant")


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shift = a.n
    return Graph(a.n + b.n, [*a.edges, *((u + shift, v + shift) for u, v in b.edges)])


# queries ---------------------------------------------------------------


def distance(G: Graph, u: int, v: int) -> float:
    """Shortest-path length; ``math.inf`` across components."""
    G.check_vertex(v)
    return G.bfs_distances(u)[v - 1]


def delete_vertices(G: Graph, S: Iterable[int]) -> Graph:
    """Induced subgraph ``G - S`` relabelled to ``1..n-|S|`` in increasing order.

    The result's ``origin`` gives, for each new vertex, its label in the
    root graph (composing with ``G.origin`` when ``G`` is itself derived).
    """
    S = G.check_vertices(S)
    keep = [v for v in G.vertices() if v not in S]
    new_label = {v: i for i, v in enumerate(keep, start=1)}
    edges = [(new_label[u], new_label[v]) for u, v in G.edges if u in new_label and v in new_label]
    base = G.origin
    origin = [base[v - 1] for v in keep] if base is not None else keep
    return Graph(len(keep), edges, origin=origin)


def cycle_order(G: Graph) -> list[int] | None:
    """Vertices of a cycle graph in cyclic order starting ``1, min N(1), ...``.

    Returns None when ``G`` is not a single cycle.  For ``build_cycle(n)``
    this is ``[1, 2, ..., n]``.
    """
    n = G.n
    if n < 3 or G.m != n or any(d != 2 for d in G.degrees()):
        return None
    order = [1]
    prev, cur = 1, min(G.neighbors(1))
    while cur != 1:
        order.append(cur)
        a, b = G.neighbors(cur)
        prev, cur = cur, (b if a == prev else a)
    return order if len(order) == n else None


def is_complete(G: Graph) -> bool:
    return G.m == G.n * (G.n - 1) // 2
