"""Independent reference computations used by the tests.

Nothing here calls the package solver.  Each function is a direct, slow
implementation of a definition.
"""

from __future__ import annotations

import itertools
import math
import random

INF = math.inf


def closed_nbhds(n, edges):
    nb = {v: {v} for v in range(1, n + 1)}
    for u, v in edges:
        nb[u].add(v)
        nb[v].add(u)
    return nb


def min_dominating_size(n, edges, *, forced=(), pre=(), deleted=()):
    """Subset enumeration by increasing size; None if infeasible."""
    nb = closed_nbhds(n, edges)
    gone = set(deleted)
    forced = set(forced)
    if forced & gone:
        return None
    targets = [v for v in range(1, n + 1) if v not in gone and v not in set(pre)]
    pool = [v for v in range(1, n + 1) if v not in gone and v not in forced]
    for size in range(len(pool) + 1):
        for extra in itertools.combinations(pool, size):
            S = forced | set(extra)
            if all((nb[t] - gone) & S for t in targets):
                return len(S)
    return None


def product_edges(nG, g_edges, nH, h_edges, f):
    """Sierpinski product edges in row-major flat labels, straight from the definition."""
    flat = lambda g, h: (g - 1) * nH + h
    edges = set()
    for g in range(1, nG + 1):
        for a, b in h_edges:
            edges.add(tuple(sorted((flat(g, a), flat(g, b)))))
    for g, g2 in g_edges:
        edges.add(tuple(sorted((flat(g, f[g2 - 1]), flat(g2, f[g - 1])))))
    return nG * nH, sorted(edges)


def cycle_product_gamma(n, nH, h_edges, f):
    """gamma(C_n (x)_f H) by min-plus transfer around the cycle of layers.

    Layer i has connecting vertices y_i = f(i-1) and x_i = f(i+1); the only
    edge between layers i and i+1 is x_i -- y_{i+1}.  For each layer a table
    gives the fewest vertices dominating the layer given (y_i chosen, x_i
    chosen, y_i covered from layer i-1, x_i covered from layer i+1), found
    by scanning every subset of V(H).  The cycle is then closed by trying
    every state of layer 1.
    """
    nb = closed_nbhds(nH, h_edges)
    layers = []
    for i in range(n):
        y = f[(i - 1) % n]
        x = f[(i + 1) % n]
        table = {}
        for mask in range(1 << nH):
            S = {h for h in range(1, nH + 1) if mask >> (h - 1) & 1}
            a, b = int(y in S), int(x in S)
            for ey in (0, 1):
                for ex in (0, 1):
                    ok = True
                    for h in range(1, nH + 1):
                        if nb[h] & S:
                            continue
                        if (h == y and ey) or (h == x and ex):
                            continue
                        ok = False
                        break
                    if ok:
                        key = (a, b, ey, ex)
                        table[key] = min(table.get(key, INF), len(S))
        layers.append(table)
    states = [(a, b) for a in (0, 1) for b in (0, 1)]
    return min(_close(layers, n, s0, states) for s0 in states)


def _close(layers, n, s0, states):
    """Minimum total with layer 0 in state ``s0``; layer 0's cost needs layer 1's y bit."""
    best = INF
    for s1 in states:
        # forward over layers 1..n-1 with state (prev, cur); layer 0 charged at the end
        dp = {(s0, s1): 0}
        for i in range(1, n):
            ndp = {}
            for (sp, sc), cost in dp.items():
                nxt = [s0] if i == n - 1 else states
                for sn in nxt:
                    c = layers[i].get((sc[0], sc[1], sp[1], sn[0]), INF)
                    key = (sc, sn)
                    if cost + c < ndp.get(key, INF):
                        ndp[key] = cost + c
            dp = ndp
        for (s_last, _), cost in dp.items():
            c0 = layers[0].get((s0[0], s0[1], s_last[1], s1[0]), INF)
            best = min(best, cost + c0)
    return best


def cycle_distance(a, b, m):
    d = abs(a - b) % m
    return min(d, m - d)


def all_sequences_canonical(n, k):
    """Canonical cyclic classes of length-n words over 0..k-1 by brute force."""
    seen = set()
    for w in itertools.product(range(k), repeat=n):
        rots = [w[i:] + w[:i] for i in range(n)]
        r = w[::-1]
        rots += [r[i:] + r[:i] for i in range(n)]
        seen.add(min(rots))
    return sorted(seen)


def realizable_by_scan(n, m):
    """Canonical distance sequences realized by some f: C_n -> C_m (all m^n scanned)."""
    out = set()
    for f in itertools.product(range(m), repeat=n):
        seq = tuple(cycle_distance(f[(i - 1) % n], f[(i + 1) % n], m) for i in range(n))
        rots = [seq[i:] + seq[:i] for i in range(n)]
        r = seq[::-1]
        rots += [r[i:] + r[:i] for i in range(n)]
        out.add(min(rots))
    return out


def random_graph(rng: random.Random, n: int, p: float = 0.4):
    return [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
