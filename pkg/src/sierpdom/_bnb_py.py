"""Pure-Python set-cover branch and bound (fallback for the compiled kernel).

Vertex sets are Python ints used as bitsets, bit ``i`` = 0-based vertex ``i``.
The compiled module ``_bnb`` implements the identical search, so both
return the same optimum, witness and node count.
"""

from __future__ import annotations

INF = 255


def _block_value(table: list, loc: tuple[int, ...], x: int) -> int:
    """Fewest block vertices covering local set ``x`` (memoised in ``table``)."""
    if x == 0:
        return 0
    v = table[x]
    if v is not None:
        return v
    low = x & -x
    cand = loc[low.bit_length() - 1]
    best = INF
    while cand:
        lj = cand & -cand
        cand ^= lj
        r = _block_value(table, loc, x & ~loc[lj.bit_length() - 1])
        if r + 1 < best:
            best = r + 1
    table[x] = best
    return best


def solve_cover(
    nbr: list[int],
    need: int,
    avail: int,
    chosen: int,
    size: int,
    ub_size: int,
    ub_set: int,
    blocks: list[tuple[int, int, int, int, int]],
    locs: list[tuple[int, ...]],
) -> tuple[int, int, int]:
    """Minimum ``|S|`` with ``chosen <= S <= chosen | avail`` covering ``need``.

    ``nbr[i]`` is the closed neighbourhood of vertex ``i``.  ``(ub_size,
    ub_set)`` is a known feasible solution; only strictly smaller ones
    replace it.  ``blocks`` holds ``(offset, width, inner, table_id, part)``
    for contiguous vertex ranges, disjoint within each ``part``; ``inner``
    marks the vertices whose dominators all lie inside the range and
    ``locs[table_id]`` their local closed neighbourhoods.  The block bound
    is the largest per-part sum.  Returns ``(best_size, best_set, nodes)``.
    """
    tables = [[None] * (1 << len(loc)) for loc in locs]
    nparts = max((b[4] for b in blocks), default=-1) + 1
    best = ub_size
    best_set = ub_set
    nodes = 0

    def rec(U: int, avail: int, chosen: int, size: int) -> None:
        nonlocal best, best_set, nodes
        nodes += 1
        if not U:
            if size < best:
                best, best_set = size, chosen
            return
        if size + 1 >= best:
            return
        used = 0
        pack = 0
        best_cnt = 1 << 30
        bu = -1
        x = U
        while x:
            low = x & -x
            x ^= low
            i = low.bit_length() - 1
            cv = nbr[i] & avail
            if not cv:
                return
            cnt = cv.bit_count()
            if cnt < best_cnt:
                best_cnt, bu = cnt, i
            if not cv & used:
                used |= cv
                pack += 1
        lb = pack
        if blocks:
            sums = [0] * nparts
            for off, width, inner, tid, part in blocks:
                y = (U & inner) >> off
                if y:
                    sums[part] += _block_value(tables[tid], locs[tid], y)
            blb = max(sums)
            if blb > lb:
                lb = blb
        if size + lb >= best:
            return
        cands = nbr[bu] & avail
        av = avail
        while cands:
            low = cands & -cands
            cands ^= low
            v = low.bit_length() - 1
            rec(U & ~nbr[v], av, chosen | low, size + 1)
            av &= ~low
            if size + 1 >= best:
                return

    rec(need, avail, chosen, size)
    return best, best_set, nodes
