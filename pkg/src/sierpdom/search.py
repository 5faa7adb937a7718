"""Lower and upper Sierpinski domination numbers by search over ``f in H^G``.

Three strategies, all exact over the full function space:

``exhaustive``
    every ``f``, in lexicographic order.
``orbit-reduced``
    ``f(g_1) = 1`` only; valid when ``H`` is vertex-transitive, because
    composing ``f`` with an automorphism of ``H`` gives an isomorphic product.
``distance-sequence``
    both factors cycles.  Layer ``i`` is a cycle with two marked connecting
    vertices, so the product is determined up to isomorphism by the cyclic
    sequence ``d_i = d_H(y_i, x_i)`` modulo rotation and reflection.  One
    realizing ``f`` per realizable class is evaluated.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterator, Sequence

from .errors import BudgetExceededError, PreconditionError, TheoremViolationError, UnsupportedStructureError
from .graph import Graph, build_cycle, cycle_order, is_complete
from .product import FunctionAssignment, SierpinskiProduct
from .solver import gamma as domination_number
from .theorems import elementary_bounds, lower_sierpinski_forced, lower_sierpinski_set

STRATEGIES = ("exhaustive", "orbit-reduced", "distance-sequence")
DEFAULT_BUDGET = {"exhaustive": 2_000_000, "orbit-reduced": 2_000_000, "distance-sequence": 100_000}
VERTEX_TRANSITIVE_FAMILIES = {"cycle", "complete", "circulant"}


@dataclass(frozen=True)
class SearchOutcome:
    mode: str
    value: int
    witness_f: FunctionAssignment | None
    strategy: str
    candidates_evaluated: int
    exact: bool = True
    two_value_resolution: dict | None = None
    seconds: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict:
        out = {
            "mode": self.mode,
            "value": self.value,
            "witness_f": None if self.witness_f is None else list(self.witness_f.values),
            "strategy": self.strategy,
            "candidates": self.candidates_evaluated,
            "exact": self.exact,
        }
        if self.two_value_resolution is not None:
            out["two_value_resolution"] = self.two_value_resolution
        return out


@dataclass(frozen=True)
class DistanceSequence:
    """A canonical cyclic distance sequence with one realizing function."""

    seq: tuple[int, ...]
    f: FunctionAssignment

    @property
    def canonical_form(self) -> tuple[int, ...]:
        return canonical_cyclic(self.seq)


# cyclic sequences ----------------------------------------------------------


def canonical_cyclic(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least rotation or reflection of ``seq``."""
    s = tuple(seq)
    n = len(s)
    r = s[::-1]
    return min(min(s[i:] + s[:i] for i in range(n)), min(r[i:] + r[:i] for i in range(n)))


def _necklaces(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Lex-least representatives of length-``n`` necklaces over ``0..k-1`` (FKM)."""
    a = [0] * (n + 1)

    def gen(t: int, p: int):
        if t > n:
            if n % p == 0:
                yield tuple(a[1:])
            return
        a[t] = a[t - p]
        yield from gen(t + 1, p)
        for j in range(a[t - p] + 1, k):
            a[t] = j
            yield from gen(t + 1, t)

    yield from gen(1, 1)


def bracelets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Canonical sequences under rotation and reflection, in lex order."""
    for neck in _necklaces(n, k):
        rev = neck[::-1]
        if neck <= min(rev[i:] + rev[:i] for i in range(n)):
            yield neck


def _chains(n: int) -> list[list[int]]:
    """Layer indices (0-based) whose constraints link one parity class of f."""
    if n % 2:
        return [[(2 * t + 1) % n for t in range(n)]]
    return [[(2 * t + 1) % n for t in range(n // 2)], [(2 * t + 2) % n for t in range(n // 2)]]


def _signs_closing(steps: Sequence[int], m: int) -> list[int] | None:
    """Signs ``e_j`` with ``sum e_j * steps[j] = 0 (mod m)``, or None."""
    reach = [1]  # bitmask of reachable residues after j steps
    full = (1 << m) - 1
    for d in steps:
        r = reach[-1]
        up = ((r << d) | (r >> (m - d))) & full
        down = ((r >> d) | (r << (m - d))) & full
        reach.append(up | down)
    if not reach[-1] & 1:
        return None
    signs = []
    res = 0
    for j in range(len(steps) - 1, -1, -1):
        d = steps[j]
        for e in (1, -1):
            prev = (res - e * d) % m
            if reach[j] >> prev & 1:
                signs.append(e)
                res = prev
                break
    return signs[::-1]


def realize_distance_sequence(seq: Sequence[int], m: int) -> list[int] | None:
    """Cycle positions ``0..m-1`` of some ``f`` with distance sequence ``seq``.

    ``seq[i]`` is ``d(f(g_{i-1}), f(g_{i+1}))`` (0-based, cyclic); each
    constraint reads ``f(g_{i+1}) = f(g_{i-1}) +- seq[i] (mod m)``.
    """
    n = len(seq)
    pos = [0] * n
    for chain in _chains(n):
        signs = _signs_closing([seq[i] for i in chain], m)
        if signs is None:
            return None
        j = (chain[0] - 1) % n
        pos[j] = 0
        for i, e in zip(chain[:-1], signs):
            pos[(i + 1) % n] = (pos[(i - 1) % n] + e * seq[i]) % m
    return pos


def distance_sequence_of(positions: Sequence[int], m: int) -> tuple[int, ...]:
    n = len(positions)
    out = []
    for i in range(n):
        diff = abs(positions[(i - 1) % n] - positions[(i + 1) % n]) % m
        out.append(min(diff, m - diff))
    return tuple(out)


def _cycle_orders(G: Graph, H: Graph) -> tuple[list[int], list[int]]:
    g_order, h_order = cycle_order(G), cycle_order(H)
    if g_order is None or h_order is None:
        raise UnsupportedStructureError("distance-sequence strategy needs both factors to be cycles")
    return g_order, h_order


def _positions_to_f(positions: Sequence[int], g_order: list[int], h_order: list[int]) -> FunctionAssignment:
    values = [0] * len(g_order)
    for i, g in enumerate(g_order):
        values[g - 1] = h_order[positions[i]]
    return FunctionAssignment(values)


def enumerate_distance_sequences(n: int, m: int, G: Graph | None = None, H: Graph | None = None) -> Iterator[DistanceSequence]:
    """Each realizable canonical class for ``C_n (x) C_m`` once, with a realizing f."""
    G = G if G is not None else build_cycle(n)
    H = H if H is not None else build_cycle(m)
    g_order, h_order = _cycle_orders(G, H)
    for seq in bracelets(n, m // 2 + 1):
        pos = realize_distance_sequence(seq, m)
        if pos is None:
            continue
        if distance_sequence_of(pos, m) != seq:
            raise AssertionError(f"realizer for {seq} produced {distance_sequence_of(pos, m)}")
        yield DistanceSequence(seq, _positions_to_f(pos, g_order, h_order))


# candidates -----------------------------------------------------------------


def is_vertex_transitive_family(H: Graph) -> bool:
    return H.family in VERTEX_TRANSITIVE_FAMILIES or cycle_order(H) is not None or is_complete(H)


def choose_strategy(G: Graph, H: Graph) -> str:
    if cycle_order(G) is not None and cycle_order(H) is not None:
        return "distance-sequence"
    if is_vertex_transitive_family(H):
        return "orbit-reduced"
    return "exhaustive"


def _candidates(G: Graph, H: Graph, strategy: str) -> Iterator[tuple[int, ...]]:
    if strategy == "exhaustive":
        yield from itertools.product(range(1, H.n + 1), repeat=G.n)
    elif strategy == "orbit-reduced":
        if not is_vertex_transitive_family(H):
            raise PreconditionError("orbit reduction needs a cycle, complete or circulant H")
        for rest in itertools.product(range(1, H.n + 1), repeat=G.n - 1):
            yield (1,) + rest
    elif strategy == "distance-sequence":
        for ds in enumerate_distance_sequences(G.n, H.n, G, H):
            yield ds.f.values
    else:
        raise ValueError(f"unknown strategy {strategy!r}; expected auto or one of {STRATEGIES}")


# evaluation -------------------------------------------------------------------


class _Fold:
    """Running optimum per mode; ties go to the lexicographically least f."""

    def __init__(self, modes: Sequence[str]):
        self.keys: dict[str, tuple[int, tuple[int, ...]] | None] = {m: None for m in modes}
        self.count = 0

    def _offer(self, mode: str, value: int, f: tuple[int, ...]) -> None:
        key = (value if mode == "min" else -value, f)
        cur = self.keys[mode]
        if cur is None or key < cur:
            self.keys[mode] = key

    def add(self, value: int, f: tuple[int, ...]) -> None:
        self.count += 1
        for mode in self.keys:
            self._offer(mode, value, f)

    def merge(self, other: "_Fold") -> None:
        self.count += other.count
        for mode, key in other.keys.items():
            if key is not None:
                self._offer(mode, key[0] if mode == "min" else -key[0], key[1])

    def best(self, mode: str) -> tuple[int, tuple[int, ...]]:
        key = self.keys[mode]
        return (key[0] if mode == "min" else -key[0]), key[1]


def _evaluate(G: Graph, H: Graph, fs: Sequence[tuple[int, ...]], modes: Sequence[str], gamma_H: int, backend: str | None) -> _Fold:
    fold = _Fold(modes)
    lo, hi = elementary_bounds(G.n, G.m, gamma_H)
    for f in fs:
        value = domination_number(SierpinskiProduct(G, H, f), backend=backend)
        if not lo <= value <= hi:
            raise TheoremViolationError(
                f"gamma={value} outside elementary bounds [{lo}, {hi}] for f={list(f)}"
            )
        fold.add(value, tuple(f))
    return fold


def _evaluate_chunk(args) -> _Fold:
    return _evaluate(*args)


def _search(
    G: Graph,
    H: Graph,
    modes: Sequence[str],
    strategy: str = "auto",
    budget: int | None = None,
    workers: int = 1,
    backend: str | None = None,
    chunk_size: int = 2000,
) -> dict[str, SearchOutcome]:
    t0 = time.perf_counter()
    if strategy == "auto":
        strategy = choose_strategy(G, H)
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected auto or one of {STRATEGIES}")
    if strategy == "distance-sequence":
        _cycle_orders(G, H)
    if budget is None:
        budget = DEFAULT_BUDGET[strategy]
    gamma_H = domination_number(H, backend=backend)
    cands = _candidates(G, H, strategy)
    head = list(itertools.islice(cands, budget))
    if next(cands, None) is not None:
        lo, hi = elementary_bounds(G.n, G.m, gamma_H)
        partial = {
            mode: SearchOutcome(mode, lo if mode == "min" else hi, None, strategy, 0, exact=False)
            for mode in modes
        }
        raise BudgetExceededError(
            f"{strategy} search needs more than {budget} solver calls; only the elementary bounds [{lo}, {hi}] hold",
            partial=partial,
        )
    fold = _Fold(modes)
    if workers > 1 and len(head) > chunk_size:
        chunks = [head[i : i + chunk_size] for i in range(0, len(head), chunk_size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_evaluate_chunk, [(G, H, c, modes, gamma_H, backend) for c in chunks]):
                fold.merge(part)
    else:
        fold = _evaluate(G, H, head, modes, gamma_H, backend)
    elapsed = time.perf_counter() - t0
    out = {}
    for mode in modes:
        value, f = fold.best(mode)
        out[mode] = SearchOutcome(
            mode=mode,
            value=value,
            witness_f=FunctionAssignment(f),
            strategy=strategy,
            candidates_evaluated=fold.count,
            seconds=elapsed,
        )
    return out


def sierpinski_gamma(
    G: Graph,
    H: Graph,
    mode: str = "min",
    strategy: str = "auto",
    budget: int | None = None,
    *,
    workers: int = 1,
    backend: str | None = None,
) -> SearchOutcome:
    """gamma_S(G, H) for ``mode="min"``, Gamma_S(G, H) for ``mode="max"``.

    Raises BudgetExceededError before any solver call when the strategy
    needs more than ``budget`` of them; its ``partial`` holds the elementary
    bounds as non-exact outcomes without a witness.
    """
    if mode not in ("min", "max"):
        raise ValueError(f"mode must be 'min' or 'max', got {mode!r}")
    return _search(G, H, (mode,), strategy, budget, workers, backend)[mode]


def sierpinski_extrema(
    G: Graph, H: Graph, strategy: str = "auto", budget: int | None = None, *, workers: int = 1, backend: str | None = None
) -> tuple[SearchOutcome, SearchOutcome]:
    """``(gamma_S, Gamma_S)`` from a single enumeration pass."""
    res = _search(G, H, ("min", "max"), strategy, budget, workers, backend)
    return res["min"], res["max"]


def resolve_two_value(n: int, k: int, p: int, budget: int | None = None, *, strategy: str = "auto", backend: str | None = None) -> SearchOutcome:
    """gamma_S(C_n, C_{3k+p}) with the attained element of the admissible set.

    Raises TheoremViolationError if the value leaves the admissible set or,
    for ``n = 0 (mod 4)``, differs from the forced value.
    """
    if n < 3 or k < 1 or p not in (0, 1, 2):
        raise ValueError(f"need n >= 3, k >= 1, p in {{0,1,2}}; got n={n}, k={k}, p={p}")
    out = sierpinski_gamma(build_cycle(n), build_cycle(3 * k + p), "min", strategy, budget, backend=backend)
    allowed = lower_sierpinski_set(n, k, p)
    forced = lower_sierpinski_forced(n, k, p)
    if out.value not in allowed:
        raise TheoremViolationError(f"gamma_S(C_{n}, C_{3 * k + p}) = {out.value} not in {allowed}")
    if forced is not None and out.value != forced:
        raise TheoremViolationError(f"gamma_S(C_{n}, C_{3 * k + p}) = {out.value}, expected {forced}")
    if len(allowed) == 1:
        attained = "exact"
    else:
        attained = "lower" if out.value == allowed[0] else "upper"
    resolution = {"set": list(allowed), "attained": attained, "forced": forced is not None}
    return replace(out, two_value_resolution=resolution)
