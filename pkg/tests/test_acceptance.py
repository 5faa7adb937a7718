"""Acceptance criteria, one test per criterion.

Every test prints a single ``PASS criterion N: ...`` or ``FAIL criterion N: ...``
line to the terminal (capture is bypassed) before asserting.  Expected values
are written out here from the closed forms, or come from the slow reference
code in ``oracles.py``; they are not read back from the package.
"""

import itertools
import random
import time

import pytest

from oracles import closed_nbhds, cycle_product_gamma, min_dominating_size, product_edges, random_graph
from sierpdom.constructions import build_3k1_set, build_3k2_set, build_claim2_set, check_Hk, f_c18c7, f_constant
from sierpdom.graph import Graph, build_circulant, build_complete, build_cycle
from sierpdom.harness import verify
from sierpdom.product import SierpinskiProduct
from sierpdom.search import sierpinski_extrema, sierpinski_gamma
from sierpdom.solver import DominationInstance, gamma, solve


def cdiv(a, b):
    return -(-a // b)


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool, text: str) -> None:
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {text}", flush=True)
        assert ok, text

    return emit


def _dominates(nP, edges, S):
    nb = closed_nbhds(nP, edges)
    return all(nb[v] & S for v in range(1, nP + 1))


def test_criterion_01_c18c7_example(report):
    t0 = time.perf_counter()
    check = verify("c18c7-example")
    seconds = time.perf_counter() - t0
    row = check.rows[0]
    f = list(f_c18c7().values)
    oracle = cycle_product_gamma(18, 7, build_cycle(7).edges, f)
    ok = check.verdict == "pass" and row["value"] == 36 == oracle and row["detail"]["vertices"] == 126 and seconds < 120
    report(1, ok, f"gamma(C18 x_f C7) = {row['value']} (transfer oracle {oracle}, expected 36) in {seconds:.2f}s (limit 120s)")


def test_criterion_02_3k_dom(report):
    t0 = time.perf_counter()
    bad = []
    for n in range(3, 8):
        for k in (1, 2):
            lo, hi = sierpinski_extrema(build_cycle(n), build_cycle(3 * k), "distance-sequence")
            if not lo.value == hi.value == k * n:
                bad.append((n, k, lo.value, hi.value))
    seconds = time.perf_counter() - t0
    report(2, not bad and seconds < 600, f"min = max = kn on C_n x C_3k for n 3..7, k 1..2; mismatches {bad}; {seconds:.1f}s (limit 600s)")


def test_criterion_03_upper_formula(report):
    k = 1
    bad = []
    for n in range(3, 7):
        for p in (0, 1, 2):
            want = (k * n, k * n + cdiv(n, 3), (k + 1) * n)[p]
            got = sierpinski_gamma(build_cycle(n), build_cycle(3 * k + p), "max").value
            if got != want:
                bad.append((n, p, got, want))
    report(3, not bad, f"max over f equals kn / kn+ceil(n/3) / (k+1)n for n 3..6, k=1, p 0..2; mismatches {bad}")


def test_criterion_04_lower_membership(report):
    k = 1
    bad, log = [], []
    for n in range(3, 7):
        for p in (1, 2):
            base = k * n if p == 1 else k * n + n // 2
            allowed = (base, base + 1)
            got = sierpinski_gamma(build_cycle(n), build_cycle(3 * k + p), "min").value
            forced_ok = n % 4 != 0 or got == base
            if got not in allowed or not forced_ok:
                bad.append((n, p, got))
            log.append(f"n={n},p={p}:{got}({'lower' if got == base else 'upper'})")
    report(4, not bad, f"min over f lies in the 2-set, lower element when 4 | n; violations {bad}; resolutions {' '.join(log)}")


def test_criterion_05_elementary_sandwich(report):
    rng = random.Random(5)
    violations = 0
    checked = 0
    for _ in range(50):
        nG, nH = rng.randint(1, 5), rng.randint(1, 5)
        G = Graph(nG, random_graph(rng, nG, 0.5))
        H = Graph(nH, random_graph(rng, nH, 0.5))
        gH = min_dominating_size(nH, H.edges)
        for _ in range(20):
            f = [rng.randint(1, nH) for _ in range(nG)]
            value = gamma(SierpinskiProduct(G, H, f))
            checked += 1
            if not nG * gH - G.m <= value <= nG * gH:
                violations += 1
    harness = verify("elementary", {"pairs": 50, "fs": 20, "max_order": 5})
    ok = violations == 0 and checked == 1000 and harness.verdict == "pass"
    report(5, ok, f"{checked} products inside [n(G)gamma(H) - m(G), n(G)gamma(H)], {violations} violations; harness check {harness.verdict}")


def test_criterion_06_equ_upper(report):
    Hs = {"K3": build_complete(3), "K4": build_complete(4), "C4": build_cycle(4), "C5": build_cycle(5), "C7": build_cycle(7)}
    bad, rows = [], []
    for hname, H in Hs.items():
        gH = min_dominating_size(H.n, H.edges)
        exists = any(min_dominating_size(H.n, H.edges, pre={x}) == gH for x in H.vertices())
        restricted = {x: solve(DominationInstance(H, pre_dominated=frozenset({x}))).gamma for x in H.vertices()}
        if exists != any(v == gH for v in restricted.values()):
            bad.append((hname, "solver predicate"))
        for gname, G in (("C3", build_cycle(3)), ("C4", build_cycle(4))):
            upper = sierpinski_gamma(G, H, "max").value
            if exists != (upper == G.n * gH):
                bad.append((gname, hname))
        rows.append(f"{hname}:{'yes' if exists else 'no'}")
    report(6, not bad, f"exists x with gamma(H|x) = gamma(H) iff max = n(G)gamma(H); {' '.join(rows)}; mismatches {bad}")


def test_criterion_07_hk_suite(report):
    results = {}
    for k in range(1, 5):
        results[f"C{3 * k + 1},k={k}"] = check_Hk(build_cycle(3 * k + 1), k).member
    for k, p in itertools.product((1, 2), repeat=2):
        n = k * (2 * p + 1) + 1
        results[f"Circ({n},[1..{p}]),k={k}"] = check_Hk(build_circulant(n, range(1, p + 1)), k).member
    c8 = {k: check_Hk(build_cycle(8), k).member for k in (1, 2, 3)}
    ok = all(results.values()) and not any(c8.values())
    failed = [name for name, member in results.items() if not member]
    report(7, ok, f"{len(results)} members accepted (rejected: {failed}); C8 rejected for k 1..3: {not any(c8.values())}")


def test_criterion_08_construction_sizes(report):
    bad = []
    count = 0
    for n in range(3, 9):
        G = build_cycle(n)
        for k in (1, 2):
            H1 = build_cycle(3 * k + 1)
            cases = [
                ("claim2", build_claim2_set(G, H1, f_constant(G, H1, 1), k), k * n + cdiv(n, 3)),
                ("3k1", build_3k1_set(n, k), k * n + cdiv(n, 4) - n // 4),
                ("3k2", build_3k2_set(n, k), k * n + n // 2 + (0 if n % 4 == 0 else 1)),
            ]
            for family, plan, want in cases:
                P = plan.product
                nP, edges = product_edges(n, G.edges, P.H.n, P.H.edges, list(P.f.values))
                S = set(plan.flat)
                count += 1
                if plan.size != want or not _dominates(nP, edges, S):
                    bad.append((family, n, k, plan.size, want))
    report(8, not bad, f"{count} constructed sets dominate with sizes kn+ceil(n/3), kn+ceil(n/4)-floor(n/4), kn+floor(n/2)+[4 does not divide n]; mismatches {bad}")


def test_criterion_09_oracle_equivalence(report):
    rng = random.Random(9)
    t0 = time.perf_counter()
    mismatches = []
    for i in range(300):
        n = rng.randint(1, 14)
        G = Graph(n, random_graph(rng, n, rng.uniform(0.1, 0.6)))
        vs = list(G.vertices())
        constrained = i % 2 == 1
        deleted = set(rng.sample(vs, rng.randint(0, min(2, n - 1)))) if constrained else set()
        rest = [v for v in vs if v not in deleted]
        forced = set(rng.sample(rest, rng.randint(0, min(2, len(rest))))) if constrained else set()
        pre = set(rng.sample(vs, rng.randint(0, min(2, n)))) if constrained else set()
        cert = solve(DominationInstance(G, forced_in=frozenset(forced), pre_dominated=frozenset(pre), deleted=frozenset(deleted)))
        want = min_dominating_size(n, G.edges, forced=forced, pre=pre, deleted=deleted)
        if cert.gamma != want:
            mismatches.append((i, cert.gamma, want))
    seconds = time.perf_counter() - t0
    report(9, not mismatches and seconds < 300, f"300 random graphs (150 constrained), n <= 14: {len(mismatches)} mismatches; {seconds:.1f}s (limit 300s)")


def test_criterion_10_strategy_agreement(report):
    bad = []
    for n in range(3, 6):
        for m in range(3, 7):
            G, H = build_cycle(n), build_cycle(m)
            got = {s: tuple(o.value for o in sierpinski_extrema(G, H, s)) for s in ("exhaustive", "orbit-reduced", "distance-sequence")}
            if len(set(got.values())) != 1:
                bad.append((n, m, got))
    report(10, not bad, f"exhaustive, orbit-reduced and distance-sequence agree on C_n x C_m, n 3..5, m 3..6, both modes; mismatches {bad}")
