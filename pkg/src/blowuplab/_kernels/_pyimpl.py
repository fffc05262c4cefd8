"""Pure-Python kernels. Reference semantics for the compiled backend.

Adjacency is a list of int bitmasks. Graphs of any order are supported.
"""

from __future__ import annotations

MODE_COUNT = 0
MODE_MAX_EDGES = 1
MODE_MAXIMAL = 2


def _core(adj, s, r):
    # largest subset of s in which every vertex has >= r neighbours
    if r <= 0:
        return s
    while True:
        keep = 0
        t = s
        while t:
            low = t & -t
            t ^= low
            if (adj[low.bit_length() - 1] & s).bit_count() >= r:
                keep |= low
        if keep == s:
            return s
        s = keep


def _has_clique(adj, s, r):
    if r <= 0:
        return True
    while s.bit_count() >= r:
        low = s & -s
        s ^= low
        if _has_clique(adj, adj[low.bit_length() - 1] & s, r - 1):
            return True
    return False


def _fits(adj, p, left, cand):
    # whether ``left`` disjoint p-cliques fit inside ``cand``
    if left == 0:
        return True
    while cand.bit_count() >= p * left:
        low = cand & -cand
        cand ^= low
        if _fits_grow(adj, p, left, p - 1, adj[low.bit_length() - 1] & cand, low, cand):
            return True
    return False


def _fits_grow(adj, p, left, r, s, cur, rest):
    if r == 0:
        return _fits(adj, p, left - 1, _core(adj, rest & ~cur, p - 1))
    while s.bit_count() >= r:
        low = s & -s
        s ^= low
        if _fits_grow(adj, p, left, r - 1, s & adj[low.bit_length() - 1], cur | low, rest):
            return True
    return False


class _WitnessSearch:
    __slots__ = ("adj", "n", "p", "ks", "q", "tail_need", "centers", "cliques")

    def __init__(self, adj, p, ks):
        self.adj = adj
        self.n = len(adj)
        self.p = p
        self.ks = ks
        self.q = len(ks)
        # vertices still needed by centers i..q-1
        self.tail_need = [0] * (self.q + 1)
        for i in range(self.q - 1, -1, -1):
            self.tail_need[i] = self.tail_need[i + 1] + 1 + p * ks[i]
        self.centers = [0] * self.q
        self.cliques = [[0] * k for k in ks]

    def later_ok(self, i, used):
        # Hall-type check: stars i.. each need a distinct unused centre able to
        # host their cliques on its own
        ks, p, adj = self.ks, self.p, self.adj
        q = self.q
        hosts = [0] * (q - i)
        for c in range(self.n):
            if used >> c & 1:
                continue
            base = adj[c] & ~used
            if base.bit_count() < p * ks[q - 1]:
                continue
            base = _core(adj, base, p - 1)
            j = i
            while j < q:
                k = ks[j]
                if base.bit_count() >= p * k and _fits(adj, p, k, base):
                    break
                while j < q and ks[j] == k:
                    j += 1
            # c can host every star from j on
            if j < q:
                hosts[j - i] += 1
                if self._hall(hosts):
                    return True
        return False

    @staticmethod
    def _hall(hosts):
        total = 0
        for j, h in enumerate(hosts):
            total += h
            if total < j + 1:
                return False
        return True

    def place(self, i, used):
        if i == self.q:
            return True
        n = self.n
        if n - used.bit_count() < self.tail_need[i]:
            return False
        k = self.ks[i]
        p = self.p
        start = self.centers[i - 1] + 1 if i > 0 and self.ks[i - 1] == k else 0
        adj = self.adj
        for c in range(start, n):
            if used >> c & 1:
                continue
            cand = adj[c] & ~used
            if cand.bit_count() < p * k:
                continue
            cand = _core(adj, cand, p - 1)
            if cand.bit_count() < p * k:
                continue
            self.centers[i] = c
            if i + 1 < self.q and not self.later_ok(i + 1, used | (1 << c)):
                continue
            if self.pack(i, k, cand, used | (1 << c)):
                return True
        return False

    def pack(self, i, left, cand, used):
        if left == 0:
            return self.place(i + 1, used)
        p = self.p
        adj = self.adj
        while cand.bit_count() >= p * left:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            if self.grow(i, left, p - 1, adj[v] & cand, low, cand, used):
                return True
        return False

    def grow(self, i, left, r, s, cur, rest, used):
        if r == 0:
            self.cliques[i][self.ks[i] - left] = cur
            nxt = _core(self.adj, rest & ~cur, self.p - 1)
            return self.pack(i, left - 1, nxt, used | cur)
        adj = self.adj
        while s.bit_count() >= r:
            low = s & -s
            s ^= low
            if self.grow(i, left, r - 1, s & adj[low.bit_length() - 1], cur | low, rest, used):
                return True
        return False


def find_witness(adj, p, ks):
    """First embedding of the blown-up star forest, or ``None``.

    Returns ``(centers, cliques)`` where ``cliques[i]`` lists ``ks[i]`` bitmasks
    of p-sets inside the neighbourhood of ``centers[i]``. ``ks`` must be
    non-increasing.
    """
    adj = list(adj)
    s = _WitnessSearch(adj, p, tuple(ks))
    if len(adj) < s.tail_need[0]:
        return None
    if not s.place(0, 0):
        return None
    return list(s.centers), [list(c) for c in s.cliques]


def _contains_with_edge(adj, p, ks, u, v):
    # adj already holds edge uv and was free without it
    if p >= 2 and not _has_clique(adj, adj[u] & adj[v], p - 1):
        return False
    return find_witness(adj, p, ks) is not None


def enumerate_free(n, p, ks, mode, prefix_len=0, prefix_bits=0, hint=-1, visit=None):
    """Depth-first walk over labelled graphs on ``n`` vertices that avoid the pattern.

    Edges are decided in graph6 column order ``(0,1),(0,2),(1,2),(0,3),...``;
    edge ``i`` of that order is bit ``i`` of a graph's edge mask. An inclusion
    that creates the pattern is cut (the whole subtree contains it). The first
    ``prefix_len`` decisions are fixed by ``prefix_bits`` (a shard).

    mode MODE_COUNT: visit every free graph. MODE_MAX_EDGES: branch-and-bound
    for the maximum edge count, keeping every labelled maximiser; graphs with
    fewer than ``hint`` edges are pruned. MODE_MAXIMAL: collect edge-maximal
    free graphs.

    Returns ``(count, best, masks)``.
    """
    ks = tuple(ks)
    pairs = [(i, j) for j in range(n) for i in range(j)]
    m = len(pairs)
    adj = [0] * n
    st = {"count": 0, "best": hint, "masks": []}

    def leaf(emask, vol):
        if mode == MODE_COUNT:
            st["count"] += 1
            if visit is not None:
                visit(emask)
        elif mode == MODE_MAX_EDGES:
            e = emask.bit_count()
            st["count"] += 1
            if e > st["best"]:
                st["best"] = e
                st["masks"] = [emask]
            elif e == st["best"]:
                st["masks"].append(emask)
        else:
            t = vol
            while t:
                low = t & -t
                t ^= low
                u, v = pairs[low.bit_length() - 1]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                hit = _contains_with_edge(adj, p, ks, u, v)
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
                if not hit:
                    return
            st["count"] += 1
            st["masks"].append(emask)
            if visit is not None:
                visit(emask)

    def rec(idx, emask, ecount, vol):
        if mode == MODE_MAX_EDGES and ecount + (m - idx) < st["best"]:
            return
        if idx == m:
            leaf(emask, vol)
            return
        u, v = pairs[idx]
        bit = 1 << idx
        forced = idx < prefix_len
        want = bool(prefix_bits >> idx & 1) if forced else None
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        ok = not _contains_with_edge(adj, p, ks, u, v)
        if ok and want is not False:
            rec(idx + 1, emask | bit, ecount + 1, vol)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        if want is not True:
            rec(idx + 1, emask, ecount, vol | bit if ok else vol)

    rec(0, 0, 0, 0)
    return st["count"], st["best"], st["masks"]


def perron(nbrs, tol, res_tol, max_iter):
    """Shifted power iteration ``x <- (A + I) x`` on one connected component.

    Starts from all ones, keeps ``max(x) = 1``. Stops once successive Rayleigh
    quotients differ by less than ``tol`` and the eigen-equation residual is at
    most ``res_tol``. Returns ``(rho, x, iterations, converged)``.
    """
    m = len(nbrs)
    x = [1.0] * m
    prev = None
    r = 0.0
    for it in range(1, max_iter + 1):
        ax = [0.0] * m
        for v in range(m):
            acc = 0.0
            for u in nbrs[v]:
                acc += x[u]
            ax[v] = acc
        xx = 0.0
        xax = 0.0
        for v in range(m):
            xx += x[v] * x[v]
            xax += x[v] * ax[v]
        r = xax / xx
        res = 0.0
        for v in range(m):
            d = abs(r * x[v] - ax[v])
            if d > res:
                res = d
        if prev is not None and abs(r - prev) < tol and res <= res_tol:
            return r, x, it, True
        prev = r
        top = 0.0
        for v in range(m):
            ax[v] += x[v]
            if ax[v] > top:
                top = ax[v]
        x = [t / top for t in ax]
    return r, x, max_iter, False
