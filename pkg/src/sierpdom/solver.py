"""Exact minimum dominating sets with forced, pre-dominated and deleted vertices.

The search is a branch and bound over the set-cover view of domination:
the universe is the set of vertices still to be dominated and each
admissible vertex offers its closed neighbourhood.  At every node the solver
branches on an undominated vertex with the fewest admissible dominators
(children in increasing label order) and prunes with the larger of

* a greedy 2-packing of undominated vertices with pairwise disjoint
  dominator sets, and
* an optional block bound: for a partition hint (pairs of consecutive layers
  of a Sierpinski product) each block must itself contain enough vertices to
  dominate its undominated vertices that have no dominator outside the
  block.  With several partition hints the largest sum is used.

``gamma(G | S)`` is ``solve(DominationInstance(G, pre_dominated=S))``.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import kernel
from .errors import InfeasibleError, SolverCapError, VertexError
from .graph import Graph

MAX_VERTICES = 512
MAX_BLOCK_WIDTH = 16
MAX_PARTITIONS = 4
BRUTE_FORCE_MAX = 26


@dataclass(frozen=True)
class DominationInstance:
    graph: Graph
    forced_in: frozenset[int] = frozenset()
    pre_dominated: frozenset[int] = frozenset()
    deleted: frozenset[int] = frozenset()
    partitions: tuple[tuple[tuple[int, ...], ...], ...] = field(default=(), compare=False)

    def __post_init__(self):
        G = self.graph
        for name in ("forced_in", "pre_dominated", "deleted"):
            object.__setattr__(self, name, G.check_vertices(getattr(self, name)))
        if self.forced_in & self.deleted:
            raise VertexError(f"vertices {sorted(self.forced_in & self.deleted)} both forced and deleted")
        parts = tuple(tuple(tuple(b) for b in part) for part in self.partitions)
        for part in parts:
            seen: set[int] = set()
            for b in part:
                for v in b:
                    G.check_vertex(v)
                    if v in seen:
                        raise VertexError(f"vertex {v} appears in two blocks of one partition")
                    seen.add(v)
        object.__setattr__(self, "partitions", parts)

    def to_dict(self) -> dict:
        return {
            "forced_in": sorted(self.forced_in),
            "pre_dominated": sorted(self.pre_dominated),
            "deleted": sorted(self.deleted),
        }


@dataclass(frozen=True)
class DominationCertificate:
    gamma: int
    witness: tuple[int, ...]
    instance: DominationInstance
    nodes_explored: int = 0
    millis: int = 0
    backend: str = ""

    def to_json(self) -> str:
        return json.dumps(
            {
                "gamma": self.gamma,
                "witness": list(self.witness),
                "nodes_explored": self.nodes_explored,
                "millis": self.millis,
            }
        )


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << (v - 1)
    return m


def _labels(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def _greedy_cover(nbr: Sequence[int], need: int, avail: int, chosen: int) -> tuple[int, int]:
    """Max-coverage greedy: repeatedly take the vertex dominating most of ``need``."""
    size = chosen.bit_count()
    while need:
        best_gain, best_v = 0, -1
        x = avail & ~chosen
        while x:
            low = x & -x
            x ^= low
            v = low.bit_length() - 1
            gain = (nbr[v] & need).bit_count()
            if gain > best_gain:
                best_gain, best_v = gain, v
        if best_v < 0:
            raise InfeasibleError("greedy cover stalled on an undominatable vertex")
        chosen |= 1 << best_v
        need &= ~nbr[best_v]
        size += 1
    return size, chosen


def _prepare_blocks(
    partitions: Sequence[Sequence[Sequence[int]]], nbr: Sequence[int], deleted: int
) -> tuple[list[tuple[int, int, int, int, int]], list[tuple[int, ...]]]:
    """Kernel block specs; non-contiguous or oversized blocks are skipped."""
    specs: list[tuple[int, int, int, int, int]] = []
    locs: list[tuple[int, ...]] = []
    table_ids: dict[tuple[int, ...], int] = {}
    blocks = [(part, b) for part, bs in enumerate(partitions[:MAX_PARTITIONS]) for b in bs]
    for part, b in blocks:
        vs = sorted(b)
        if not vs or len(vs) > MAX_BLOCK_WIDTH or vs[-1] - vs[0] + 1 != len(vs):
            continue
        off, width = vs[0] - 1, len(vs)
        full = ((1 << width) - 1) << off
        inner = 0
        loc = []
        for v in vs:
            i = v - 1
            if nbr[i] and not (nbr[i] & ~full) and not (deleted >> i & 1):
                inner |= 1 << i
            loc.append((nbr[i] & full) >> off)
        key = tuple(loc)
        tid = table_ids.setdefault(key, len(locs))
        if tid == len(locs):
            locs.append(key)
        specs.append((off, width, inner, tid, part))
    return specs, locs


def solve(
    inst: DominationInstance,
    *,
    backend: str | None = None,
    cap: int = MAX_VERTICES,
    validate: bool = True,
) -> DominationCertificate:
    """Optimal certificate for ``inst``.

    Raises SolverCapError above ``cap`` vertices and InfeasibleError when
    some vertex that must be dominated has no admissible dominator.
    """
    G = inst.graph
    cap = min(cap, MAX_VERTICES)
    if G.n > cap:
        raise SolverCapError(f"graph has {G.n} vertices; solver cap is {cap}")
    t0 = time.perf_counter()
    full = (1 << G.n) - 1
    deleted = _mask(inst.deleted)
    avail = full & ~deleted
    nbr = [0 if deleted >> i & 1 else m & avail for i, m in enumerate(G.closed_masks())]
    chosen = _mask(inst.forced_in)
    need = avail & ~_mask(inst.pre_dominated)
    x = chosen
    while x:
        low = x & -x
        x ^= low
        need &= ~nbr[low.bit_length() - 1]
    starved = [v for v in _labels(need) if not nbr[v - 1]]
    if starved:
        raise InfeasibleError(f"vertices {starved} cannot be dominated")
    ub_size, ub_set = _greedy_cover(nbr, need, avail, chosen)
    specs, locs = _prepare_blocks(inst.partitions, nbr, deleted)
    name = backend or kernel.BACKEND
    best, best_set, nodes = kernel.get_solver(name)(
        nbr, need, avail, chosen, chosen.bit_count(), ub_size, ub_set, specs, locs
    )
    cert = DominationCertificate(
        gamma=best,
        witness=_labels(best_set),
        instance=inst,
        nodes_explored=nodes,
        millis=int(1000 * (time.perf_counter() - t0)),
        backend=name,
    )
    if validate:
        problems = certificate_problems(cert)
        if problems:
            raise AssertionError(f"solver produced an invalid certificate: {problems}")
    return cert


def certificate_problems(cert: DominationCertificate) -> list[str]:
    """Independent feasibility check of a certificate; empty list means valid.

    Optimality is not re-proved here (see :func:`brute_force_gamma`).
    """
    inst = cert.instance
    G = inst.graph
    W = set(cert.witness)
    problems = []
    if len(W) != len(cert.witness) or len(W) != cert.gamma:
        problems.append(f"witness size {len(cert.witness)} != gamma {cert.gamma}")
    if not W <= set(G.vertices()):
        problems.append("witness has out-of-range vertices")
    if not inst.forced_in <= W:
        problems.append(f"forced vertices {sorted(inst.forced_in - W)} missing")
    if W & inst.deleted:
        problems.append(f"deleted vertices {sorted(W & inst.deleted)} chosen")
    for v in G.vertices():
        if v in inst.deleted or v in inst.pre_dominated or v in W:
            continue
        if not any(u in W and u not in inst.deleted for u in G.neighbors(v)):
            problems.append(f"vertex {v} undominated")
    return problems


def is_dominating(G: Graph, S: Iterable[int]) -> bool:
    S = set(S)
    return all(v in S or not S.isdisjoint(G.neighbors(v)) for v in G.vertices())


def layer_partitions(P) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Block hints for a product: consecutive layer pairs at both offsets, or single layers."""
    layers = [tuple(r) for r in P.layers()]
    if 2 * P.H.n > MAX_BLOCK_WIDTH or len(layers) < 2:
        return (tuple(layers),)
    out = []
    for start in (0, 1):
        part = [layers[0]] if start else []
        for i in range(start, len(layers), 2):
            part.append(layers[i] + layers[i + 1] if i + 1 < len(layers) else layers[i])
        out.append(tuple(part))
    return tuple(out)


def _product_blocks(obj) -> tuple[Graph, tuple]:
    from .product import SierpinskiProduct

    if isinstance(obj, SierpinskiProduct):
        return obj.graph, layer_partitions(obj)
    return obj, ()


def gamma(G, *, backend: str | None = None, cap: int = MAX_VERTICES) -> int:
    """Domination number of a Graph or a SierpinskiProduct."""
    return dominating_set(G, backend=backend, cap=cap).gamma


def dominating_set(G, *, backend: str | None = None, cap: int = MAX_VERTICES, **constraints) -> DominationCertificate:
    graph, partitions = _product_blocks(G)
    return solve(DominationInstance(graph, partitions=partitions, **constraints), backend=backend, cap=cap)


def gamma_given(G: Graph, S: Iterable[int], **kw) -> int:
    """``gamma(G | S)``: vertices of ``S`` count as already dominated."""
    return solve(DominationInstance(G, pre_dominated=frozenset(S)), **kw).gamma


def brute_force_gamma(
    G: Graph,
    cap: int | None = None,
    *,
    forced_in: Iterable[int] = (),
    pre_dominated: Iterable[int] = (),
    deleted: Iterable[int] = (),
    max_vertices: int = BRUTE_FORCE_MAX,
) -> int | None:
    """Smallest admissible dominating set size by subset enumeration.

    Tries sizes ``0, 1, ..., cap`` in order and returns None if nothing of
    size ``<= cap`` works.  Refuses graphs above ``max_vertices``.
    """
    if G.n > max_vertices:
        raise SolverCapError(f"brute force refuses n={G.n} > {max_vertices}")
    forced = set(G.check_vertices(forced_in))
    pre = set(G.check_vertices(pre_dominated))
    gone = set(G.check_vertices(deleted))
    if forced & gone:
        return None
    targets = [v for v in G.vertices() if v not in pre and v not in gone]
    closed = {v: (G.neighbors(v) | {v}) - gone for v in G.vertices()}
    pool = [v for v in G.vertices() if v not in gone and v not in forced]
    top = G.n if cap is None else cap
    for k in range(len(forced), top + 1):
        for extra in itertools.combinations(pool, k - len(forced)):
            S = forced.union(extra)
            if all(not closed[t].isdisjoint(S) for t in targets):
                return k
    return None
