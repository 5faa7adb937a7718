import json
import random

import pytest

from oracles import product_edges, random_graph
from sierpdom.constructions import f_3k1, f_c18c7
from sierpdom.errors import FunctionError, UnsupportedStructureError
from sierpdom.graph import Graph, build_complete, build_cycle, build_path, delete_vertices
from sierpdom.product import FunctionAssignment, ProductVertex, SierpinskiProduct, connecting_vertices, layer_subgraph, product


def _random_instance(rng):
    nG, nH = rng.randint(1, 6), rng.randint(1, 6)
    G = Graph(nG, random_graph(rng, nG, 0.5))
    H = Graph(nH, random_graph(rng, nH, 0.5))
    return G, H


def test_k1_factor_gives_h():
    H = build_cycle(5)
    P = product(build_complete(1), H, [3])
    assert P.graph == H


def test_c18_c7_counts():
    P = product(build_cycle(18), build_cycle(7), f_c18c7())
    assert (P.n, P.m) == (126, 144)


def test_constant_c3_c3():
    P = product(build_cycle(3), build_cycle(3), [1, 1, 1])
    assert (P.n, P.m) == (9, 12)
    a, b, c = P.flat(1, 1), P.flat(2, 1), P.flat(3, 1)
    assert P.graph.has_edge(a, b) and P.graph.has_edge(b, c) and P.graph.has_edge(a, c)


def test_function_out_of_range():
    with pytest.raises(FunctionError):
        product(build_cycle(3), build_cycle(4), [1, 2, 5])
    with pytest.raises(FunctionError):
        product(build_cycle(3), build_cycle(4), [1, 2])


def test_flat_labels_row_major():
    P = product(build_cycle(3), build_path(4), [1, 2, 3])
    assert P.flat(2, 3) == 7
    assert P.coords(7) == ProductVertex(2, 3)
    assert str(P.coords(7)) == "(2,3)"
    assert list(P.layer(2)) == [5, 6, 7, 8]


def test_connecting_vertex_examples():
    P = product(build_cycle(4), build_cycle(4), f_3k1(4))
    assert connecting_vertices(P, 1) == (ProductVertex(1, 3), ProductVertex(1, 1))
    P = product(build_cycle(5), build_cycle(4), f_3k1(5))
    y, x = connecting_vertices(P, 1)
    assert y == x == ProductVertex(1, 1)
    P = product(build_cycle(6), build_cycle(5), [4] * 6)
    assert all(P.connecting_vertices(i) == (ProductVertex(i, 4), ProductVertex(i, 4)) for i in range(1, 7))
    with pytest.raises(UnsupportedStructureError):
        product(build_path(3), build_cycle(4), [1, 1, 1]).connecting_vertices(1)


def test_layer_subgraph_examples():
    P = product(build_cycle(3), build_path(4), [1, 4, 2])
    L = layer_subgraph(P, 2)
    assert L == build_path(4)
    assert L.origin == (5, 6, 7, 8)
    assert len(P.layers()) == 3


def test_random_invariants():
    rng = random.Random(3)
    for _ in range(40):
        G, H = _random_instance(rng)
        for _ in range(100 if G.n * H.n <= 12 else 10):
            f = [rng.randint(1, H.n) for _ in range(G.n)]
            P = SierpinskiProduct(G, H, f)
            assert P.n == G.n * H.n
            assert P.m == G.n * H.m + G.m
            assert P.graph.edges == tuple(product_edges(G.n, G.edges, H.n, H.edges, f)[1])
            type2 = [(u, v) for u, v in P.graph.edges if P.coords(u).g != P.coords(v).g]
            assert len(type2) == G.m
            layer_pairs = {frozenset((P.coords(u).g, P.coords(v).g)) for u, v in type2}
            assert len(layer_pairs) == len(type2)  # two layers share at most one edge
            inner = Graph(P.n, [e for e in P.graph.edges if e not in type2])
            comps = inner.components()
            assert len(comps) == G.n * len(H.components())
            assert all(len({P.coords(v).g for v in c}) == 1 for c in comps)
            for g in G.vertices():
                assert P.layer_subgraph(g) == H
                touching = sum(1 for u, v in type2 if g in (P.coords(u).g, P.coords(v).g))
                assert touching <= G.degree(g)


def test_connectors_consistent_with_edges():
    rng = random.Random(5)
    for n in range(3, 9):
        for m in range(3, 8):
            f = [rng.randint(1, m) for _ in range(n)]
            P = product(build_cycle(n), build_cycle(m), f)
            for i in range(1, n + 1):
                _, x = P.connecting_vertices(i)
                y_next, _ = P.connecting_vertices(i % n + 1)
                assert P.graph.has_edge(P.flat(x.g, x.h), P.flat(y_next.g, y_next.h))


def test_function_json_round_trip():
    f = FunctionAssignment([1, 2, 3, 3])
    assert f.to_json() == '{"n":4,"f":[1,2,3,3]}'
    assert FunctionAssignment.from_json(f.to_json()) == f
    with pytest.raises(FunctionError):
        FunctionAssignment.from_json('{"n": 2, "f": [1]}')
    with pytest.raises(FunctionError):
        FunctionAssignment.from_json("nope")


def test_export_dot_has_coordinates():
    P = product(build_cycle(3), build_cycle(3), [1, 2, 3])
    dot = P.export("dot")
    assert "// (2,3)" in dot
    assert json.loads(P.export("json"))["n"] == 9
