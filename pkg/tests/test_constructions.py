import pytest

from oracles import closed_nbhds, cycle_product_gamma, min_dominating_size
from sierpdom.constructions import (
    audit_3k2_layers,
    build_3k1_set,
    build_3k2_set,
    build_claim2_set,
    check_equ_upper,
    check_Hk,
    f_3k1,
    f_3k2,
    f_c18c7,
    f_constant,
)
from sierpdom.errors import PreconditionError
from sierpdom.graph import build_circulant, build_complete, build_cycle, build_path
from sierpdom.product import SierpinskiProduct
from sierpdom.solver import dominating_set, gamma, is_dominating
from sierpdom.theorems import claim2_size, hk_upper, pattern_3k1_size, pattern_3k2_size, upper_sierpinski


def _hk_by_brute_force(H, k):
    """Both properties straight from subset enumeration."""
    g = min_dominating_size(H.n, H.edges)
    a = g == k + 1 and all(min_dominating_size(H.n, H.edges, deleted={v}) == k for v in H.vertices())
    b = all(min_dominating_size(H.n, H.edges, forced={x, y}) == g for x in H.vertices() for y in H.vertices())
    return a and b


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_cycles_3k1_in_hk(k):
    assert check_Hk(build_cycle(3 * k + 1), k).member


@pytest.mark.parametrize("k,p", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_circulants_in_hk(k, p):
    H = build_circulant(k * (2 * p + 1) + 1, range(1, p + 1))
    rep = check_Hk(H, k)
    assert rep.member
    if H.n <= 11:
        assert _hk_by_brute_force(H, k)


def test_non_members():
    for k in (1, 2, 3):
        rep = check_Hk(build_cycle(8), k)
        assert not rep.member
    rep = check_Hk(build_cycle(8), 2)
    assert rep.gamma == 3 and set(rep.deletion_gammas.values()) == {3}
    for m in range(3, 12):
        if m % 3 != 1:
            for k in range(1, -(-m // 3) + 1):
                assert not check_Hk(build_cycle(m), k).member


def test_hk_matches_brute_force_on_small_graphs():
    for H in (build_cycle(4), build_cycle(7), build_path(4), build_complete(3), build_cycle(5)):
        k = gamma(H) - 1
        assert check_Hk(H, k).member == _hk_by_brute_force(H, k)


def test_explicit_functions():
    assert f_constant(build_cycle(4), build_cycle(7), 1).values == (1, 1, 1, 1)
    assert f_3k1(8).values == (1, 1, 3, 3, 1, 1, 3, 3)
    assert f_3k2(8).values == (1, 2, 3, 3, 1, 2, 3, 3)
    f = f_c18c7()
    assert len(f) == 18
    assert (f(8), f(14), f(16)) == (7, 1, 6)
    assert f(1) == f(4) == f(5) == f(18) == 4
    with pytest.raises(PreconditionError):
        f_3k1(2)


@pytest.mark.parametrize("n", range(3, 9))
@pytest.mark.parametrize("m", [4, 7])
def test_constant_f_on_hk(n, m):
    k = (m - 1) // 3
    G, H = build_cycle(n), build_cycle(m)
    assert gamma(SierpinskiProduct(G, H, f_constant(G, H, 1))) == hk_upper(n, k)


@pytest.mark.parametrize("n", range(3, 8))
def test_constant_f_on_3k2(n):
    G, H = build_cycle(n), build_cycle(5)
    assert gamma(SierpinskiProduct(G, H, f_constant(G, H, 2))) == upper_sierpinski(n, 1, 2)


def test_f_3k1_examples():
    H = build_cycle(4)
    assert gamma(SierpinskiProduct(build_cycle(4), H, f_3k1(4))) == 4
    assert gamma(SierpinskiProduct(build_cycle(5), H, f_3k1(5))) <= 6


def test_f_3k2_examples():
    H = build_cycle(5)
    assert gamma(SierpinskiProduct(build_cycle(4), H, f_3k2(4))) == 6
    # the pattern needs one vertex above kn + n/2 for n = 6
    assert gamma(SierpinskiProduct(build_cycle(6), H, f_3k2(6))) == 10
    assert cycle_product_gamma(6, 5, H.edges, list(f_3k2(6).values)) == 10


@pytest.mark.parametrize("n", range(3, 9))
@pytest.mark.parametrize("k", [1, 2])
def test_construction_sizes(n, k):
    H1 = build_cycle(3 * k + 1)
    plan = build_claim2_set(build_cycle(n), H1, f_constant(build_cycle(n), H1, 1), k)
    assert plan.size == claim2_size(n, k) and is_dominating(plan.product.graph, plan.flat)
    plan = build_3k1_set(n, k)
    assert plan.size == pattern_3k1_size(n, k) and is_dominating(plan.product.graph, plan.flat)
    plan = build_3k2_set(n, k)
    assert plan.size == pattern_3k2_size(n, k) and is_dominating(plan.product.graph, plan.flat)


def test_construction_examples():
    C4 = build_cycle(4)
    assert build_claim2_set(build_cycle(3), C4, [1, 1, 1]).size == 4
    plan = build_claim2_set(build_cycle(4), C4, [1, 1, 1, 1])
    assert plan.size == 6 and plan.layers[-1].tag == "D_i2" and len(plan.layers[-1].vertices) == 2
    assert build_claim2_set(build_cycle(5), build_cycle(7), [1] * 5).size == 12
    assert build_3k1_set(4, 1).size == 4
    plan = build_3k1_set(6, 1)
    assert plan.size == 7 and [(v.g, v.h) for v in plan.extra] == [(1, plan.product.connecting_vertices(1)[1].h)]
    plan = build_3k1_set(7, 2)
    assert plan.size == 15 and plan.extra[0].g == 7
    assert build_3k2_set(4, 1).size == 6
    assert build_3k2_set(5, 1).size == 8
    assert build_3k2_set(7, 1).size == 11


def test_claim2_tags_match_definitions():
    G, H = build_cycle(7), build_cycle(7)
    f = [1, 3, 5, 2, 6, 4, 7]
    plan = build_claim2_set(G, H, f, 2)
    nbrs = closed_nbhds(H.n, H.edges)
    for layer in plan.layers:
        y, x = plan.product.connecting_vertices(layer.index)
        S = {v.h for v in layer.vertices}
        if layer.tag == "D_i1":
            assert x.h not in S and all(nbrs[h] & S for h in H.vertices() if h != x.h) and len(S) == 2
        elif layer.tag == "D_i3":
            assert y.h not in S and all(nbrs[h] & S for h in H.vertices() if h != y.h) and len(S) == 2
        else:
            assert {x.h, y.h} <= S and len(S) == 3


def test_claim2_rejects_non_members():
    with pytest.raises(PreconditionError):
        build_claim2_set(build_cycle(4), build_cycle(8), [1] * 4, 2)


def test_plan_json():
    import json

    doc = json.loads(build_3k1_set(8, 2).to_json())
    assert doc["size"] == doc["expected_size"] == 16
    assert all(len(v) == 2 for layer in doc["layers"] for v in layer["vertices"])


@pytest.mark.parametrize("hspec", ["K3", "K4", "C4", "C5", "C7"])
@pytest.mark.parametrize("n", [3, 4])
def test_equ_upper_iff(hspec, n):
    H = {"K3": build_complete(3), "K4": build_complete(4), "C4": build_cycle(4), "C5": build_cycle(5), "C7": build_cycle(7)}[hspec]
    rep = check_equ_upper(build_cycle(n), H)
    assert rep.consistent
    expect_exists = {"K3": True, "K4": True, "C4": False, "C5": True, "C7": False}[hspec]
    assert rep.predicate is expect_exists


def test_equ_upper_c4_restricted_values():
    rep = check_equ_upper(build_cycle(3), build_cycle(4), cross_check=False)
    assert set(rep.restricted.values()) == {1} and rep.upper is None


def test_layer_audit_records_patterns():
    P = SierpinskiProduct(build_cycle(6), build_cycle(5), f_3k2(6))
    rows = audit_3k2_layers(P, dominating_set(P).witness)
    assert len(rows) == 6
    assert {r["pattern"] for r in rows} <= {"a", "b", "neither"}
    assert all(r["d"] == int(r["d"]) for r in rows)
