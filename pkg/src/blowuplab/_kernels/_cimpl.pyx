# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels on 64-bit neighbourhood words (graphs with at most 64 vertices).

Mirrors ``_pyimpl`` decision for decision, so both backends return the same
first witness and the same enumeration results.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.math cimport fabs

cdef extern from *:
    int popcount "__builtin_popcountll"(unsigned long long) nogil
    int ctz "__builtin_ctzll"(unsigned long long) nogil

MAX_N = 64

cdef enum:
    MAXQ = 64

cdef enum:
    MODE_COUNT = 0
    MODE_MAX_EDGES = 1
    MODE_MAXIMAL = 2


cdef struct Search:
    uint64_t adj[64]
    int n
    int p
    int q
    int ks[MAXQ]
    int tail_need[MAXQ + 1]
    int centers[MAXQ]
    int clique_off[MAXQ]
    uint64_t *cliques


cdef inline uint64_t core(Search *s, uint64_t c, int r) nogil:
    cdef uint64_t keep, t, low
    if r <= 0:
        return c
    while True:
        keep = 0
        t = c
        while t:
            low = t & (~t + 1)
            t ^= low
            if popcount(s.adj[ctz(low)] & c) >= r:
                keep |= low
        if keep == c:
            return c
        c = keep


cdef bint has_clique(Search *s, uint64_t c, int r) nogil:
    cdef uint64_t low
    if r <= 0:
        return True
    while popcount(c) >= r:
        low = c & (~c + 1)
        c ^= low
        if has_clique(s, s.adj[ctz(low)] & c, r - 1):
            return True
    return False


cdef bint fits(Search *s, int left, uint64_t cand) nogil:
    cdef uint64_t low
    if left == 0:
        return True
    while popcount(cand) >= s.p * left:
        low = cand & (~cand + 1)
        cand ^= low
        if fits_grow(s, left, s.p - 1, s.adj[ctz(low)] & cand, low, cand):
            return True
    return False


cdef bint fits_grow(Search *s, int left, int r, uint64_t c, uint64_t cur, uint64_t rest) nogil:
    cdef uint64_t low
    if r == 0:
        return fits(s, left - 1, core(s, rest & ~cur, s.p - 1))
    while popcount(c) >= r:
        low = c & (~c + 1)
        c ^= low
        if fits_grow(s, left, r - 1, c & s.adj[ctz(low)], cur | low, rest):
            return True
    return False


cdef bint later_ok(Search *s, int i, uint64_t used) nogil:
    cdef int hosts[MAXQ]
    cdef int c, j, k, q = s.q, p = s.p
    cdef uint64_t base
    for j in range(q - i):
        hosts[j] = 0
    for c in range(s.n):
        if (used >> c) & 1:
            continue
        base = s.adj[c] & ~used
        if popcount(base) < p * s.ks[q - 1]:
            continue
        base = core(s, base, p - 1)
        j = i
        while j < q:
            k = s.ks[j]
            if popcount(base) >= p * k and fits(s, k, base):
                break
            while j < q and s.ks[j] == k:
                j += 1
        if j < q:
            hosts[j - i] += 1
            if hall(hosts, q - i):
                return True
    return False


cdef inline bint hall(int *hosts, int m) nogil:
    cdef int j, total = 0
    for j in range(m):
        total += hosts[j]
        if total < j + 1:
            return False
    return True


cdef bint place(Search *s, int i, uint64_t used) nogil:
    cdef int k, start, c, p = s.p
    cdef uint64_t cand
    if i == s.q:
        return True
    if s.n - popcount(used) < s.tail_need[i]:
        return False
    k = s.ks[i]
    start = s.centers[i - 1] + 1 if (i > 0 and s.ks[i - 1] == k) else 0
    for c in range(start, s.n):
        if (used >> c) & 1:
            continue
        cand = s.adj[c] & ~used
        if popcount(cand) < p * k:
            continue
        cand = core(s, cand, p - 1)
        if popcount(cand) < p * k:
            continue
        s.centers[i] = c
        if i + 1 < s.q and not later_ok(s, i + 1, used | ((<uint64_t>1) << c)):
            continue
        if pack(s, i, k, cand, used | ((<uint64_t>1) << c)):
            return True
    return False


cdef bint pack(Search *s, int i, int left, uint64_t cand, uint64_t used) nogil:
    cdef uint64_t low
    if left == 0:
        return place(s, i + 1, used)
    while popcount(cand) >= s.p * left:
        low = cand & (~cand + 1)
        cand ^= low
        if grow(s, i, left, s.p - 1, s.adj[ctz(low)] & cand, low, cand, used):
            return True
    return False


cdef bint grow(Search *s, int i, int left, int r, uint64_t c, uint64_t cur,
               uint64_t rest, uint64_t used) nogil:
    cdef uint64_t low, nxt
    if r == 0:
        s.cliques[s.clique_off[i] + s.ks[i] - left] = cur
        nxt = core(s, rest & ~cur, s.p - 1)
        return pack(s, i, left - 1, nxt, used | cur)
    while popcount(c) >= r:
        low = c & (~c + 1)
        c ^= low
        if grow(s, i, left, r - 1, c & s.adj[ctz(low)], cur | low, rest, used):
            return True
    return False


cdef int init_search(Search *s, object adj, int p, object ks) except -1:
    cdef int i, total = 0
    s.n = len(adj)
    if s.n > 64:
        raise ValueError("compiled kernel handles at most 64 vertices")
    s.q = len(ks)
    if s.q > MAXQ:
        raise ValueError("too many stars for compiled kernel")
    s.p = p
    for i in range(s.n):
        s.adj[i] = <uint64_t>adj[i]
    for i in range(s.q):
        s.ks[i] = ks[i]
        s.clique_off[i] = total
        total += ks[i]
        s.centers[i] = 0
    s.tail_need[s.q] = 0
    for i in range(s.q - 1, -1, -1):
        s.tail_need[i] = s.tail_need[i + 1] + 1 + p * s.ks[i]
    s.cliques = <uint64_t *> malloc((total + 1) * sizeof(uint64_t))
    if s.cliques == NULL:
        raise MemoryError()
    return 0


def find_witness(adj, int p, ks):
    cdef Search s
    cdef bint found
    cdef int i, j
    init_search(&s, adj, p, ks)
    try:
        if s.n < s.tail_need[0]:
            return None
        with nogil:
            found = place(&s, 0, 0)
        if not found:
            return None
        centers = [s.centers[i] for i in range(s.q)]
        cliques = [[int(s.cliques[s.clique_off[i] + j]) for j in range(s.ks[i])]
                   for i in range(s.q)]
        return centers, cliques
    finally:
        free(s.cliques)


cdef inline bint contains_with_edge(Search *s, int u, int v) nogil:
    if s.p >= 2 and not has_clique(s, s.adj[u] & s.adj[v], s.p - 1):
        return False
    return place(s, 0, 0)


cdef struct Walk:
    Search *s
    int m
    int mode
    int prefix_len
    uint64_t prefix_bits
    int pu[64]
    int pv[64]
    long long count
    int best


cdef int leaf(Walk *w, uint64_t emask, uint64_t vol, list masks, object visit) except -1:
    cdef Search *s = w.s
    cdef uint64_t t, low
    cdef int e, idx, u, v
    cdef bint hit
    if w.mode == MODE_COUNT:
        w.count += 1
        if visit is not None:
            visit(int(emask))
    elif w.mode == MODE_MAX_EDGES:
        e = popcount(emask)
        w.count += 1
        if e > w.best:
            w.best = e
            del masks[:]
            masks.append(int(emask))
        elif e == w.best:
            masks.append(int(emask))
    else:
        t = vol
        while t:
            low = t & (~t + 1)
            t ^= low
            idx = ctz(low)
            u = w.pu[idx]
            v = w.pv[idx]
            s.adj[u] |= (<uint64_t>1) << v
            s.adj[v] |= (<uint64_t>1) << u
            hit = contains_with_edge(s, u, v)
            s.adj[u] &= ~((<uint64_t>1) << v)
            s.adj[v] &= ~((<uint64_t>1) << u)
            if not hit:
                return 0
        w.count += 1
        masks.append(int(emask))
        if visit is not None:
            visit(int(emask))
    return 0


cdef int rec(Walk *w, int idx, uint64_t emask, int ecount, uint64_t vol,
             list masks, object visit) except -1:
    cdef Search *s = w.s
    cdef int u, v, want
    cdef uint64_t bit
    cdef bint ok
    if w.mode == MODE_MAX_EDGES and ecount + (w.m - idx) < w.best:
        return 0
    if idx == w.m:
        return leaf(w, emask, vol, masks, visit)
    u = w.pu[idx]
    v = w.pv[idx]
    bit = (<uint64_t>1) << idx
    want = -1
    if idx < w.prefix_len:
        want = <int>((w.prefix_bits >> idx) & 1)
    s.adj[u] |= (<uint64_t>1) << v
    s.adj[v] |= (<uint64_t>1) << u
    ok = not contains_with_edge(s, u, v)
    if ok and want != 0:
        rec(w, idx + 1, emask | bit, ecount + 1, vol, masks, visit)
    s.adj[u] &= ~((<uint64_t>1) << v)
    s.adj[v] &= ~((<uint64_t>1) << u)
    if want != 1:
        rec(w, idx + 1, emask, ecount, (vol | bit) if ok else vol, masks, visit)
    return 0


def enumerate_free(int n, int p, ks, int mode, int prefix_len=0, prefix_bits=0,
                   int hint=-1, visit=None):
    cdef Search s
    cdef Walk w
    cdef int i, j, idx = 0
    cdef list masks = []
    if n * (n - 1) // 2 > 64:
        raise ValueError("compiled enumeration handles at most 11 vertices")
    init_search(&s, [0] * n, p, ks)
    try:
        w.s = &s
        w.m = n * (n - 1) // 2
        w.mode = mode
        w.prefix_len = prefix_len
        w.prefix_bits = <uint64_t>prefix_bits
        w.count = 0
        w.best = hint
        for j in range(n):
            for i in range(j):
                w.pu[idx] = i
                w.pv[idx] = j
                idx += 1
        rec(&w, 0, 0, 0, 0, masks, visit)
        return w.count, w.best, masks
    finally:
        free(s.cliques)


def perron(nbrs, double tol, double res_tol, long max_iter):
    cdef int m = len(nbrs)
    cdef int v, j, total = 0
    cdef long it
    cdef double xx, xax, r = 0.0, prev = 0.0, res, d, top, acc
    cdef bint have_prev = False
    cdef bint done = False
    cdef int *ptr = <int *> malloc((m + 1) * sizeof(int))
    cdef int *idx
    cdef double *x = <double *> malloc(m * sizeof(double))
    cdef double *ax = <double *> malloc(m * sizeof(double))
    for v in range(m):
        total += len(nbrs[v])
    idx = <int *> malloc((total + 1) * sizeof(int))
    if ptr == NULL or idx == NULL or x == NULL or ax == NULL:
        free(ptr); free(idx); free(x); free(ax)
        raise MemoryError()
    try:
        total = 0
        for v in range(m):
            ptr[v] = total
            for u in nbrs[v]:
                idx[total] = u
                total += 1
            x[v] = 1.0
        ptr[m] = total
        with nogil:
            for it in range(1, max_iter + 1):
                xx = 0.0
                xax = 0.0
                for v in range(m):
                    acc = 0.0
                    for j in range(ptr[v], ptr[v + 1]):
                        acc += x[idx[j]]
                    ax[v] = acc
                    xx += x[v] * x[v]
                    xax += x[v] * acc
                r = xax / xx
                res = 0.0
                for v in range(m):
                    d = fabs(r * x[v] - ax[v])
                    if d > res:
                        res = d
                if have_prev and fabs(r - prev) < tol and res <= res_tol:
                    done = True
                    break
                have_prev = True
                prev = r
                top = 0.0
                for v in range(m):
                    ax[v] += x[v]
                    if ax[v] > top:
                        top = ax[v]
                for v in range(m):
                    x[v] = ax[v] / top
        return r, [x[v] for v in range(m)], (it if done else max_iter), done
    finally:
        free(ptr); free(idx); free(x); free(ax)
