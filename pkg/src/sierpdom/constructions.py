"""Explicit functions and dominating sets for products of a cycle with a layer graph.

Every ``build_*`` function assembles a dominating set layer by layer and
then validates it against the product; a failed validation raises
ConstructionError rather than being repaired.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ConstructionError, PreconditionError
from .graph import Graph, build_cycle, cycle_order, distance
from .product import FunctionAssignment, ProductVertex, SierpinskiProduct
from .solver import DominationInstance, gamma, is_dominating, solve
from .theorems import ceil_div, claim2_size, pattern_3k1_size, pattern_3k2_size

TAGS = ("D_i1", "D_i2", "D_i3", "custom")


# class H_k -------------------------------------------------------------------


@dataclass(frozen=True)
class HkReport:
    k: int
    gamma: int
    deletion_gammas: dict[int, int]
    property_a: bool
    pair_failures: tuple[tuple[int, int], ...]
    property_b: bool

    @property
    def member(self) -> bool:
        return self.property_a and self.property_b

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "gamma": self.gamma,
            "deletion_gammas": {str(v): g for v, g in self.deletion_gammas.items()},
            "property_a": self.property_a,
            "property_b": self.property_b,
            "pair_failures": [list(p) for p in self.pair_failures],
            "member": self.member,
        }


def check_Hk(H: Graph, k: int) -> HkReport:
    """Test both defining properties of the class H_k on ``H``.

    (a) gamma(H) = k + 1 and gamma(H - v) = k for every v;
    (b) every pair x, y (x = y allowed) lies in a common gamma-set of H.
    """
    g = gamma(H)
    deletion = {v: solve(DominationInstance(H, deleted=frozenset({v}))).gamma for v in H.vertices()}
    prop_a = g == k + 1 and all(d == k for d in deletion.values())
    failures = []
    for x in H.vertices():
        for y in range(x, H.n + 1):
            if solve(DominationInstance(H, forced_in=frozenset({x, y}))).gamma != g:
                failures.append((x, y))
    return HkReport(k, g, deletion, prop_a, tuple(failures), not failures)


# explicit functions --------------------------------------------------------------


def f_constant(G: Graph, H: Graph, h: int) -> FunctionAssignment:
    H.check_vertex(h)
    return FunctionAssignment([h] * G.n)


def f_3k1(n: int) -> FunctionAssignment:
    """1 on positions ``i mod 4 in {1, 2}``, 3 elsewhere."""
    if n < 3:
        raise PreconditionError(f"need n >= 3, got {n}")
    return FunctionAssignment(1 if i % 4 in (1, 2) else 3 for i in range(1, n + 1))


def f_3k2(n: int) -> FunctionAssignment:
    """1 on ``i = 1 (mod 4)``, 2 on ``i = 2 (mod 4)``, 3 elsewhere."""
    if n < 3:
        raise PreconditionError(f"need n >= 3, got {n}")
    return FunctionAssignment({1: 1, 2: 2}.get(i % 4, 3) for i in range(1, n + 1))


def f_c18c7() -> FunctionAssignment:
    """The function on C_18 -> C_7 whose product has domination number 36."""
    table = {4: (1, 4, 5, 18), 2: (2, 3, 6, 7), 7: (8, 9), 5: (10, 11), 3: (12, 13), 1: (14, 15), 6: (16, 17)}
    values = [0] * 18
    for h, gs in table.items():
        for g in gs:
            values[g - 1] = h
    return FunctionAssignment(values)


# layer plans -------------------------------------------------------------------------


@dataclass(frozen=True)
class LayerChoice:
    index: int
    g: int
    tag: str
    rule: str
    vertices: tuple[ProductVertex, ...]


@dataclass
class LayerSetPlan:
    family: str
    n: int
    k: int
    product: SierpinskiProduct
    layers: list[LayerChoice]
    extra: list[ProductVertex] = field(default_factory=list)
    expected_size: int = 0

    @property
    def vertices(self) -> list[ProductVertex]:
        out = [v for layer in self.layers for v in layer.vertices]
        out.extend(v for v in self.extra if v not in out)
        return out

    @property
    def flat(self) -> list[int]:
        P = self.product
        return sorted({P.flat(v.g, v.h) for v in self.vertices})

    @property
    def size(self) -> int:
        return len(self.flat)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "k": self.k,
            "f": list(self.product.f.values),
            "layers": [
                {"i": c.index, "g": c.g, "tag": c.tag, "rule": c.rule, "vertices": [[v.g, v.h] for v in c.vertices]}
                for c in self.layers
            ],
            "extra": [[v.g, v.h] for v in self.extra],
            "size": self.size,
            "expected_size": self.expected_size,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def validate_plan(plan: LayerSetPlan) -> LayerSetPlan:
    P = plan.product
    D = plan.flat
    if not is_dominating(P.graph, D):
        raise ConstructionError(f"{plan.family} set for n={plan.n}, k={plan.k} does not dominate the product")
    if len(D) != plan.expected_size:
        raise ConstructionError(
            f"{plan.family} set for n={plan.n}, k={plan.k} has {len(D)} vertices, expected {plan.expected_size}"
        )
    return plan


def _layer_gamma_set(H: Graph, *, forced=(), deleted=()) -> tuple[int, ...]:
    return solve(DominationInstance(H, forced_in=frozenset(forced), deleted=frozenset(deleted))).witness


def _require_cycle(G: Graph) -> None:
    if cycle_order(G) is None:
        raise PreconditionError("the base graph must be a cycle")


def build_claim2_set(G: Graph, H: Graph, f: FunctionAssignment, k: int | None = None) -> LayerSetPlan:
    """The set of size ``kn + ceil(n/3)`` dominating ``C_n (x)_f H`` for H in H_k.

    Layer i takes a gamma-set of H_i - x_i (i = 1 mod 3, i != n), a gamma-set
    of H_i through x_i and y_i (i = 2 mod 3, or i = n = 1 mod 3), or a
    gamma-set of H_i - y_i (i = 0 mod 3).
    """
    _require_cycle(G)
    if k is None:
        k = gamma(H) - 1
    report = check_Hk(H, k)
    if not report.member:
        raise PreconditionError(f"H is not in H_{k}")
    P = SierpinskiProduct(G, H, f)
    n = G.n
    layers = []
    for i in range(1, n + 1):
        y, x = P.connecting_vertices(i)
        if i % 3 == 1 and i != n:
            tag, rule, S = "D_i1", "gamma-set of H_i - x_i", _layer_gamma_set(H, deleted={x.h})
            want = k
        elif i % 3 == 0:
            tag, rule, S = "D_i3", "gamma-set of H_i - y_i", _layer_gamma_set(H, deleted={y.h})
            want = k
        else:
            tag, rule, S = "D_i2", "gamma-set of H_i containing x_i and y_i", _layer_gamma_set(H, forced={x.h, y.h})
            want = k + 1
        if len(S) != want:
            raise ConstructionError(f"layer {i}: {tag} has size {len(S)}, expected {want}")
        layers.append(LayerChoice(i, P.base_vertex(i), tag, rule, tuple(ProductVertex(x.g, h) for h in S)))
    plan = LayerSetPlan("claim2", n, k, P, layers, expected_size=claim2_size(n, k))
    return validate_plan(plan)


def build_3k1_set(n: int, k: int) -> LayerSetPlan:
    """Dominating set of size ``kn + ceil(n/4) - floor(n/4)`` for ``C_n (x)_f C_{3k+1}``, f = f_3k1.

    Layer i takes the vertices at distance 2 (mod 3) from y_i, the unique
    gamma-set of H_i - y_i.  One extra connecting vertex is added when
    n is not 0 (mod 4): x_1 for n = 1, 2 (mod 4) and x_n for n = 3 (mod 4).
    """
    if n < 3 or k < 1:
        raise PreconditionError(f"need n >= 3 and k >= 1, got n={n}, k={k}")
    H = build_cycle(3 * k + 1)
    P = SierpinskiProduct(build_cycle(n), H, f_3k1(n))
    gamma_minus = solve(DominationInstance(H, deleted=frozenset({1}))).gamma
    if gamma_minus != k:
        raise ConstructionError(f"gamma(C_{3 * k + 1} - v) = {gamma_minus}, expected {k}")
    layers = []
    for i in range(1, n + 1):
        y, x = P.connecting_vertices(i)
        dist = H.bfs_distances(y.h)
        S = tuple(h for h in H.vertices() if dist[h - 1] % 3 == 2)
        covered = all(h in S or not H.neighbors(h).isdisjoint(S) for h in H.vertices() if h != y.h)
        if len(S) != k or y.h in S or not covered:
            raise ConstructionError(f"layer {i}: distance-2-mod-3 set {S} is not a gamma-set of H_i - y_i")
        layers.append(LayerChoice(i, P.base_vertex(i), "custom", "distance 2 mod 3 from y_i", tuple(ProductVertex(x.g, h) for h in S)))
    extra = []
    if n % 4 in (1, 2):
        extra.append(P.connecting_vertices(1)[1])
    elif n % 4 == 3:
        extra.append(P.connecting_vertices(n)[1])
    plan = LayerSetPlan("3k1", n, k, P, layers, extra, expected_size=pattern_3k1_size(n, k))
    return validate_plan(plan)


def _3k2_rule(i: int, n: int) -> str:
    full, tail = 4 * (n // 4), n % 4
    if i <= full:
        return "remnant" if i % 4 in (1, 3) else "both"
    if tail == 1:
        return "with-x"
    if tail == 2:
        return "remnant" if i == full + 1 else "with-x"
    return {full + 1: "remnant", full + 2: "both"}.get(i, "with-x")


def build_3k2_set(n: int, k: int) -> LayerSetPlan:
    """Dominating set for ``C_n (x)_f C_{3k+2}``, f = f_3k2.

    Layers whose connecting vertices are adjacent take a gamma-set of
    ``H_i - {x_i, y_i}``; the others a gamma-set of ``H_i`` through the
    connecting vertices.  Size ``kn + floor(n/2) + ceil(n/4) - floor(n/4)``.
    """
    if n < 3 or k < 1:
        raise PreconditionError(f"need n >= 3 and k >= 1, got n={n}, k={k}")
    H = build_cycle(3 * k + 2)
    P = SierpinskiProduct(build_cycle(n), H, f_3k2(n))
    layers = []
    for i in range(1, n + 1):
        y, x = P.connecting_vertices(i)
        rule = _3k2_rule(i, n)
        if rule == "remnant":
            S = _layer_gamma_set(H, deleted={x.h, y.h})
            text = "gamma-set of H_i - {x_i, y_i}"
        elif rule == "both":
            S = _layer_gamma_set(H, forced={x.h, y.h})
            text = "gamma-set of H_i containing x_i and y_i"
        else:
            S = _layer_gamma_set(H, forced={x.h})
            text = "gamma-set of H_i containing x_i"
        layers.append(LayerChoice(i, P.base_vertex(i), "custom", text, tuple(ProductVertex(x.g, h) for h in S)))
    plan = LayerSetPlan("3k2", n, k, P, layers, expected_size=pattern_3k2_size(n, k))
    return validate_plan(plan)


# upper-bound equality ------------------------------------------------------------------


@dataclass(frozen=True)
class EquUpperReport:
    gamma_H: int
    restricted: dict[int, int]
    predicate: bool
    upper: int | None = None
    nG: int | None = None

    @property
    def witnesses(self) -> list[int]:
        return [x for x, g in self.restricted.items() if g == self.gamma_H]

    @property
    def upper_attains_bound(self) -> bool | None:
        if self.upper is None:
            return None
        return self.upper == self.nG * self.gamma_H

    @property
    def consistent(self) -> bool | None:
        att = self.upper_attains_bound
        return None if att is None else att == self.predicate

    def to_dict(self) -> dict:
        return {
            "gamma_H": self.gamma_H,
            "gamma_H_given_x": {str(x): g for x, g in self.restricted.items()},
            "exists_x": self.predicate,
            "witnesses": self.witnesses,
            "upper": self.upper,
            "bound": None if self.nG is None else self.nG * self.gamma_H,
            "consistent": self.consistent,
        }


def check_equ_upper(G: Graph, H: Graph, *, cross_check: bool = True, budget: int | None = None) -> EquUpperReport:
    """Is there x with gamma(H | x) = gamma(H)?  Optionally compare with Gamma_S(G, H)."""
    g = gamma(H)
    restricted = {x: solve(DominationInstance(H, pre_dominated=frozenset({x}))).gamma for x in H.vertices()}
    predicate = any(v == g for v in restricted.values())
    upper = None
    if cross_check:
        from .search import sierpinski_gamma

        upper = sierpinski_gamma(G, H, "max", budget=budget).value
    return EquUpperReport(g, restricted, predicate, upper, G.n)


# layer audit for C_{3k+2} ---------------------------------------------------


def audit_3k2_layers(P: SierpinskiProduct, witness) -> list[dict]:
    """Per-layer record of an optimal set against the two per-layer patterns of the C_{3k+2} lower bound.

    ``pattern`` is ``"a"`` when d(x_i, y_i) = 1 (mod 3), |D_i| = k and both
    connecting vertices are dominated only from outside; ``"b"`` when
    d(x_i, y_i) != 1 (mod 3) and |D_i| = k + 1; ``"neither"`` otherwise.
    Records, does not judge.
    """
    H = P.H
    k = (H.n - 2) // 3
    D = {P.coords(v) for v in witness}
    rows = []
    for i in range(1, P.G.n + 1):
        y, x = P.connecting_vertices(i)
        g = y.g
        Di = {v.h for v in D if v.g == g}
        d = int(distance(H, x.h, y.h))

        def inner(h: int) -> bool:
            return h in Di or not Di.isdisjoint(H.neighbors(h))

        outside = not inner(x.h) and not inner(y.h)
        if d % 3 == 1 and len(Di) == k and outside:
            pattern = "a"
        elif d % 3 != 1 and len(Di) == k + 1:
            pattern = "b"
        else:
            pattern = "neither"
        rows.append({"i": i, "d": d, "size": len(Di), "outside": outside, "pattern": pattern})
    return rows
