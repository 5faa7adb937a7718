# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled set-cover branch and bound; mirrors ``_bnb_py.solve_cover`` exactly.

Bitsets are fixed arrays of ``MAXW`` 64-bit words (up to 512 vertices).
"""

from libc.stdint cimport uint64_t, uint8_t
from libc.stdlib cimport malloc, free
from libc.string cimport memset, memcpy

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil

cdef enum:
    MAXW = 8
    MAXP = 4
    UNKNOWN = 254
    INF = 255

cdef struct Ctx:
    int W
    uint64_t* nbr
    int nblocks
    int* boff
    int* bwidth
    int* btid
    int* bpart
    int nparts
    uint64_t* binner
    uint8_t** tables
    uint64_t** locs
    int best
    uint64_t best_set[MAXW]
    long long nodes


cdef int block_value(Ctx* c, int tid, uint64_t x) nogil:
    if x == 0:
        return 0
    cdef uint8_t* T = c.tables[tid]
    cdef int v = T[x]
    if v != UNKNOWN:
        return v
    cdef uint64_t* loc = c.locs[tid]
    cdef uint64_t cand = loc[ctz64(x)]
    cdef int best = INF
    cdef int j, r
    while cand:
        j = ctz64(cand)
        cand &= cand - 1
        r = block_value(c, tid, x & ~loc[j])
        if r + 1 < best:
            best = r + 1
    T[x] = <uint8_t>best
    return best


cdef uint64_t block_bits(Ctx* c, uint64_t* U, int b) nogil:
    cdef int off = c.boff[b]
    cdef int width = c.bwidth[b]
    cdef int word = off >> 6
    cdef int sh = off & 63
    cdef uint64_t* inner = c.binner + b * c.W
    cdef uint64_t x = (U[word] & inner[word]) >> sh
    if sh + width > 64 and word + 1 < c.W:
        x |= (U[word + 1] & inner[word + 1]) << (64 - sh)
    return x & ((<uint64_t>1 << width) - 1)


cdef void rec(Ctx* c, uint64_t* U, uint64_t* avail, uint64_t* chosen, int size) nogil:
    cdef int W = c.W
    cdef int w, t, b, i, v, cnt, pack, lb, blb, best_cnt, bu
    cdef uint64_t x, cv, inter, y
    cdef uint64_t used[MAXW]
    cdef uint64_t av[MAXW]
    cdef uint64_t U2[MAXW]
    cdef uint64_t ch2[MAXW]
    cdef uint64_t* nb
    cdef int sums[MAXP]
    c.nodes += 1
    x = 0
    for w in range(W):
        x |= U[w]
    if x == 0:
        if size < c.best:
            c.best = size
            memcpy(c.best_set, chosen, W * sizeof(uint64_t))
        return
    if size + 1 >= c.best:
        return
    memset(used, 0, W * sizeof(uint64_t))
    pack = 0
    best_cnt = 1 << 30
    bu = -1
    for w in range(W):
        x = U[w]
        while x:
            i = w * 64 + ctz64(x)
            x &= x - 1
            nb = c.nbr + i * W
            cnt = 0
            inter = 0
            for t in range(W):
                cv = nb[t] & avail[t]
                cnt += popcount64(cv)
                inter |= cv & used[t]
            if cnt == 0:
                return
            if cnt < best_cnt:
                best_cnt = cnt
                bu = i
            if inter == 0:
                for t in range(W):
                    used[t] |= nb[t] & avail[t]
                pack += 1
    lb = pack
    if c.nblocks:
        for t in range(c.nparts):
            sums[t] = 0
        for b in range(c.nblocks):
            y = block_bits(c, U, b)
            if y:
                sums[c.bpart[b]] += block_value(c, c.btid[b], y)
        blb = 0
        for t in range(c.nparts):
            if sums[t] > blb:
                blb = sums[t]
        if blb > lb:
            lb = blb
    if size + lb >= c.best:
        return
    memcpy(av, avail, W * sizeof(uint64_t))
    nb = c.nbr + bu * W
    for t in range(W):
        x = nb[t] & avail[t]
        while x:
            v = t * 64 + ctz64(x)
            x &= x - 1
            for w in range(W):
                U2[w] = U[w] & ~c.nbr[v * W + w]
                ch2[w] = chosen[w]
            ch2[t] |= <uint64_t>1 << (v & 63)
            rec(c, U2, av, ch2, size + 1)
            av[t] &= ~(<uint64_t>1 << (v & 63))
            if size + 1 >= c.best:
                return


cdef void to_words(object value, uint64_t* out, int W):
    cdef int w
    for w in range(W):
        out[w] = <uint64_t>((value >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)


cdef object from_words(uint64_t* words, int W):
    cdef int w
    value = 0
    for w in range(W - 1, -1, -1):
        value = (value << 64) | words[w]
    return value


def solve_cover(list nbr, need, avail, chosen, int size, int ub_size, ub_set,
                list blocks, list locs):
    """See ``sierpdom._bnb_py.solve_cover``; same contract and results."""
    cdef int n = len(nbr)
    cdef int W = max(1, (n + 63) // 64)
    if W > MAXW:
        raise ValueError(f"compiled kernel supports at most {MAXW * 64} vertices")
    cdef Ctx c
    cdef int i, b, j, ntab = len(locs)
    cdef uint64_t U[MAXW]
    cdef uint64_t av[MAXW]
    cdef uint64_t ch[MAXW]
    c.W = W
    c.best = ub_size
    c.nodes = 0
    c.nblocks = len(blocks)
    c.nbr = <uint64_t*>malloc(n * W * sizeof(uint64_t))
    c.boff = <int*>malloc((c.nblocks + 1) * sizeof(int))
    c.bwidth = <int*>malloc((c.nblocks + 1) * sizeof(int))
    c.btid = <int*>malloc((c.nblocks + 1) * sizeof(int))
    c.bpart = <int*>malloc((c.nblocks + 1) * sizeof(int))
    c.nparts = 0
    c.binner = <uint64_t*>malloc((c.nblocks + 1) * W * sizeof(uint64_t))
    c.tables = <uint8_t**>malloc((ntab + 1) * sizeof(uint8_t*))
    c.locs = <uint64_t**>malloc((ntab + 1) * sizeof(uint64_t*))
    for j in range(ntab):
        c.tables[j] = NULL
        c.locs[j] = NULL
    try:
        for i in range(n):
            to_words(nbr[i], c.nbr + i * W, W)
        for b in range(c.nblocks):
            off, width, inner, tid, part = blocks[b]
            if width > 16:
                raise ValueError("block width above 16")
            if not 0 <= part < MAXP:
                raise ValueError(f"at most {MAXP} partitions")
            c.bpart[b] = part
            if part + 1 > c.nparts:
                c.nparts = part + 1
            c.boff[b] = off
            c.bwidth[b] = width
            c.btid[b] = tid
            to_words(inner, c.binner + b * W, W)
        for j in range(ntab):
            loc = locs[j]
            c.tables[j] = <uint8_t*>malloc(1 << len(loc))
            memset(c.tables[j], UNKNOWN, 1 << len(loc))
            c.locs[j] = <uint64_t*>malloc((len(loc) + 1) * sizeof(uint64_t))
            for i in range(len(loc)):
                c.locs[j][i] = loc[i]
        to_words(need, U, W)
        to_words(avail, av, W)
        to_words(chosen, ch, W)
        to_words(ub_set, c.best_set, W)
        with nogil:
            rec(&c, U, av, ch, size)
        return c.best, from_words(c.best_set, W), c.nodes
    finally:
        for j in range(ntab):
            free(c.tables[j])
            free(c.locs[j])
        free(c.tables)
        free(c.locs)
        free(c.nbr)
        free(c.boff)
        free(c.bwidth)
        free(c.btid)
        free(c.bpart)
        free(c.binner)
