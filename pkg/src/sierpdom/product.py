"""Sierpinski products ``G (x)_f H``.

Product vertex ``(g, h)`` gets the flat label ``(g - 1) * n(H) + h``
(row-major, 1-based), so layer ``gH`` occupies a contiguous label range.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import FunctionError, UnsupportedStructureError, VertexError
from .formats import encode_dot, encode_graph6, encode_json
from .graph import Graph, cycle_order, mod_star


@dataclass(frozen=True)
class FunctionAssignment:
    """A total map ``f: V(G) -> V(H)``; ``values[i]`` is ``f(i + 1)``."""

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        object.__setattr__(self, "values", tuple(int(v) for v in values))

    @property
    def domain_size(self) -> int:
        return len(self.values)

    def __call__(self, g: int) -> int:
        return self.values[g - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def validate(self, G: Graph, H: Graph) -> "FunctionAssignment":
        if len(self.values) != G.n:
            raise FunctionError(f"f has {len(self.values)} entries, G has {G.n} vertices")
        bad = [(g, h) for g, h in enumerate(self.values, start=1) if not 1 <= h <= H.n]
        if bad:
            raise FunctionError(f"f maps outside V(H)=[1, {H.n}]: {bad[:5]}")
        return self

    def to_json(self) -> str:
        return json.dumps({"n": len(self.values), "f": list(self.values)}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "FunctionAssignment":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FunctionError(f"invalid function JSON at line {exc.lineno}: {exc.msg}") from None
        if not isinstance(obj, dict) or not isinstance(obj.get("f"), list):
            raise FunctionError('expected {"n": int, "f": [int, ...]}')
        f = obj["f"]
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in f):
            raise FunctionError("function values must be integers")
        if "n" in obj and obj["n"] != len(f):
            raise FunctionError(f'"n"={obj["n"]} disagrees with {len(f)} entries')
        return cls(f)


@dataclass(frozen=True)
class ProductVertex:
    g: int
    h: int

    def __str__(self) -> str:
        return f"({self.g},{self.h})"


class SierpinskiProduct:
    """``G (x)_f H`` together with its layer structure and ``f``."""

    def __init__(self, G: Graph, H: Graph, f: FunctionAssignment | Sequence[int]):
        if not isinstance(f, FunctionAssignment):
            f = FunctionAssignment(f)
        f.validate(G, H)
        self.G, self.H, self.f = G, H, f
        nh = H.n
        edges = [
            ((g - 1) * nh + a, (g - 1) * nh + b) for g in G.vertices() for a, b in H.edges
        ]
        # one connecting edge per edge of G
        self.connecting_edges = tuple(
            (self.flat(g, f(g2)), self.flat(g2, f(g))) for g, g2 in G.edges
        )
        edges.extend(self.connecting_edges)
        self.graph = Graph(G.n * nh, edges, family="sierpinski-product")

    # coordinates ----------------------------------------------------------

    def flat(self, g: int, h: int) -> int:
        return (g - 1) * self.H.n + h

    def coords(self, v: int) -> ProductVertex:
        self.graph.check_vertex(v)
        g, h = divmod(v - 1, self.H.n)
        return ProductVertex(g + 1, h + 1)

    def layer(self, g: int) -> range:
        """Flat labels of layer ``gH``."""
        self.G.check_vertex(g)
        start = (g - 1) * self.H.n + 1
        return range(start, start + self.H.n)

    def layers(self) -> list[range]:
        return [self.layer(g) for g in self.G.vertices()]

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def __repr__(self) -> str:
        return f"<SierpinskiProduct n(G)={self.G.n} n(H)={self.H.n} f={list(self.f.values)}>"

    # cycle structure ----------------------------------------------------------

    @cached_property
    def _g_order(self) -> list[int]:
        order = cycle_order(self.G)
        if order is None:
            raise UnsupportedStructureError("connecting vertices x_i, y_i need G to be a cycle")
        return order

    def base_vertex(self, i: int) -> int:
        """The vertex ``g_i`` of the cycle ``G = g_1 g_2 ... g_n g_1``."""
        order = self._g_order
        if not 1 <= i <= len(order):
            raise VertexError(f"layer index {i} not in [1, {len(order)}]")
        return order[i - 1]

    def connecting_vertices(self, i: int) -> tuple[ProductVertex, ProductVertex]:
        """``(y_i, x_i)`` where ``y_i = (g_i, f(g_{i-1}))`` and ``x_i = (g_i, f(g_{i+1}))``."""
        order = self._g_order
        n = len(order)
        g = self.base_vertex(i)
        prev_g = order[mod_star(i - 1, n) - 1]
        next_g = order[mod_star(i + 1, n) - 1]
        return ProductVertex(g, self.f(prev_g)), ProductVertex(g, self.f(next_g))

    def layer_subgraph(self, g: int) -> Graph:
        """The induced layer ``gH``, relabelled ``h -> h`` with flat labels as origin."""
        labels = list(self.layer(g))
        start = labels[0] - 1
        edges = [
            (u - start, v - start)
            for u, v in self.graph.edges
            if start < u <= start + self.H.n and start < v <= start + self.H.n
        ]
        return Graph(self.H.n, edges, origin=labels)

    # export --------------------------------------------------------------------

    def export(self, fmt: str) -> str:
        if fmt == "dot":
            notes = {v: str(self.coords(v)) for v in self.graph.vertices()}
            return encode_dot(self.graph, name="SierpinskiProduct", comments=notes)
        if fmt == "graph6":
            return encode_graph6(self.graph)
        if fmt == "json":
            return encode_json(self.graph)
        raise ValueError(f"unknown format {fmt!r}")


def product(G: Graph, H: Graph, f: FunctionAssignment | Sequence[int]) -> SierpinskiProduct:
    return SierpinskiProduct(G, H, f)


def connecting_vertices(P: SierpinskiProduct, i: int) -> tuple[ProductVertex, ProductVertex]:
    return P.connecting_vertices(i)


def layer_subgraph(P: SierpinskiProduct, g: int) -> Graph:
    return P.layer_subgraph(g)
