"""Compare the compiled and pure-Python branch-and-bound kernels.

Each instance is solved by both backends; the table reports the best of
``--repeat`` wall-clock times, the node count (identical for both kernels)
and the speed-up.  Run from the repository root:

    python benchmarks/bench_kernel.py --repeat 3
"""

import argparse
import json
import random
import sys
import time

from sierpdom import kernel
from sierpdom.constructions import f_3k1, f_3k2, f_c18c7, f_constant
from sierpdom.graph import Graph, build_cycle
from sierpdom.product import SierpinskiProduct
from sierpdom.search import sierpinski_gamma
from sierpdom.solver import dominating_set


def _random_graph(n, p, seed):
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p])


def instances():
    C7 = build_cycle(7)
    yield "C18 x_f C7 (explicit f)", SierpinskiProduct(build_cycle(18), C7, f_c18c7())
    yield "C9 x C7, constant f", SierpinskiProduct(build_cycle(9), C7, f_constant(build_cycle(9), C7, 1))
    yield "C12 x C5, 3k2 pattern", SierpinskiProduct(build_cycle(12), build_cycle(5), f_3k2(12))
    yield "C11 x C7, constant f", SierpinskiProduct(build_cycle(11), C7, f_constant(build_cycle(11), C7, 1))
    yield "C16 x C7, 3k1 pattern", SierpinskiProduct(build_cycle(16), C7, f_3k1(16))
    yield "G(40, 0.12) random", _random_graph(40, 0.12, 7)
    yield "G(60, 0.08) random", _random_graph(60, 0.08, 11)


def time_solve(obj, backend, repeat):
    best, cert = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        cert = dominating_set(obj, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, cert


def time_search(backend, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = sierpinski_gamma(build_cycle(6), build_cycle(5), "max", "exhaustive", backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="timing repetitions per backend (best is kept)")
    ap.add_argument("--json", action="store_true", help="print JSON rows instead of a table")
    args = ap.parse_args(argv)

    if "cython" not in kernel.BACKENDS:
        print("compiled kernel not built (or SIERPDOM_PURE=1); only the Python kernel is available", file=sys.stderr)
        return 1

    rows = []
    for name, obj in instances():
        tc, cc = time_solve(obj, "cython", args.repeat)
        tp, cp = time_solve(obj, "python", args.repeat)
        assert (cc.gamma, cc.nodes_explored) == (cp.gamma, cp.nodes_explored), name
        rows.append({"instance": name, "gamma": cc.gamma, "nodes": cc.nodes_explored, "cython_s": tc, "python_s": tp})
    tc, oc = time_search("cython", args.repeat)
    tp, op = time_search("python", args.repeat)
    assert oc.value == op.value
    rows.append({"instance": "search max C6 x C5, exhaustive", "gamma": oc.value, "nodes": oc.candidates_evaluated, "cython_s": tc, "python_s": tp})

    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    print(f"{'instance':34} {'gamma':>5} {'nodes':>8} {'cython s':>10} {'python s':>10} {'speed-up':>9}")
    for r in rows:
        print(f"{r['instance']:34} {r['gamma']:>5} {r['nodes']:>8} {r['cython_s']:>10.4f} {r['python_s']:>10.4f} {r['python_s'] / r['cython_s']:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
