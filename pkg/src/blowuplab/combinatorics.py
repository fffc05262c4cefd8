"""Closed-form counts and exact small-graph invariants."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .errors import BudgetExceededError, GraphValidationError
from .graph import Graph, VertexSet, components, iter_bits

MATCHING_DP_LIMIT = 22
EXHAUSTIVE_PARTITION_LIMIT = 12


def f_formula(nu: int, delta: int) -> int:
    """Maximum edges of a graph with matching number <= nu and max degree <= delta.

    Chvátal-Hanson: ``delta*nu + floor(delta/2) * floor(nu / ceil(delta/2))``.
    Zero when either cap is zero.
    """
    if nu < 0 or delta < 0:
        raise ValueError("nu and delta must be non-negative")
    if nu == 0 or delta == 0:
        return 0
    return delta * nu + (delta // 2) * (nu // ((delta + 1) // 2))


def turan_part_sizes(r: int, n: int) -> list[int]:
    if r < 1:
        raise ValueError("r must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    base, extra = divmod(n, r)
    return [base + 1] * extra + [base] * (r - extra)


def turan_edges(r: int, n: int) -> int:
    return comb(n, 2) - sum(comb(s, 2) for s in turan_part_sizes(r, n))


def h_edges(n: int, p: int, q: int) -> int:
    """Edge count of ``K_{q-1} join T_p(n-q+1)``."""
    if p < 1 or q < 1 or n < q - 1:
        raise ValueError(f"invalid arguments n={n}, p={p}, q={q}")
    rest = n - q + 1
    return comb(q - 1, 2) + (q - 1) * rest + turan_edges(p, rest)


def ex_formula(n: int, spec) -> int:
    """``h(n,p,q) + f(k_q-1, k_q-1)``.

    Equals ex(n, F) only for n large enough; brute-force runs at small n
    record whether it matches rather than assume it.
    """
    return h_edges(n, spec.p, spec.q) + f_formula(spec.kq - 1, spec.kq - 1)


# -- matching number ---------------------------------------------------------


def _component_matching(adj: Sequence[int], mask: int) -> int:
    memo: dict[int, int] = {}

    def best(m: int) -> int:
        if m.bit_count() < 2:
            return 0
        hit = memo.get(m)
        if hit is not None:
            return hit
        low = m & -m
        rest = m ^ low
        cap = m.bit_count() // 2
        r = best(rest)
        for u in iter_bits(adj[low.bit_length() - 1] & rest):
            if r == cap:
                break
            r = max(r, 1 + best(rest & ~(1 << u)))
        memo[m] = r
        return r

    return best(mask)


def matching_number(g: Graph) -> int:
    """Exact matching number by bitmask DP, one connected component at a time.

    Isolated vertices are dropped first; each component must have at most
    ``MATCHING_DP_LIMIT`` vertices.
    """
    total = 0
    for comp in components(g):
        if len(comp) < 2:
            continue
        if len(comp) > MATCHING_DP_LIMIT:
            raise BudgetExceededError(
                f"component with {len(comp)} vertices exceeds matching DP limit {MATCHING_DP_LIMIT}"
            )
        total += _component_matching(g.adj, comp.mask)
    return total


def f_bruteforce(nu: int, delta: int, max_vertices: int) -> int:
    """Largest edge count over graphs on ``max_vertices`` vertices meeting both caps.

    Depth-first search over edge sets; a branch dies as soon as an added edge
    breaks the degree or matching cap, or when it cannot beat the incumbent.
    """
    if not (0 <= nu <= 3 and 0 <= delta <= 3 and 0 <= max_vertices <= 9):
        raise BudgetExceededError("f_bruteforce supports nu, delta <= 3 and at most 9 vertices")
    n = max_vertices
    pairs = [(i, j) for j in range(n) for i in range(j)]
    m = len(pairs)
    adj = [0] * n
    deg = [0] * n
    best = 0

    def rec(idx: int, ecount: int, cur_ub: int) -> None:
        nonlocal best
        if ecount > best:
            best = ecount
        if idx == m:
            return
        slack = sum(delta - d for d in deg) // 2
        if ecount + min(m - idx, slack) <= best:
            return
        u, v = pairs[idx]
        if deg[u] < delta and deg[v] < delta:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            deg[u] += 1
            deg[v] += 1
            # nu_ub is an upper bound on the matching number; exact only when needed
            new_ub = cur_ub + 1
            if new_ub > nu:
                new_ub = matching_number(Graph(n, tuple(adj)))
            if new_ub <= nu:
                rec(idx + 1, ecount + 1, new_ub)
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            deg[u] -= 1
            deg[v] -= 1
        rec(idx + 1, ecount, cur_ub)

    rec(0, 0, 0)
    return best


# -- partitions ---------------------------------------------------------------


@dataclass(frozen=True)
class PartitionLabeling:
    """Class index per vertex. ``certified`` is False for heuristic optima."""

    assignment: tuple[int, ...]
    p: int
    certified: bool = True

    def __post_init__(self) -> None:
        if self.p < 1:
            raise ValueError("class count must be >= 1")
        if any(not 0 <= c < self.p for c in self.assignment):
            raise ValueError("class index out of range")

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[Iterable[int]]) -> "PartitionLabeling":
        assignment = [-1] * n
        for i, members in enumerate(classes):
            for v in members:
                if assignment[v] != -1:
                    raise ValueError(f"vertex {v} in two classes")
                assignment[v] = i
        if -1 in assignment:
            raise ValueError("classes do not cover every vertex")
        return cls(tuple(assignment), len(classes))

    def classes(self) -> list[VertexSet]:
        masks = [0] * self.p
        for v, c in enumerate(self.assignment):
            masks[c] |= 1 << v
        return [VertexSet(m) for m in masks]

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes()]


def _check_labeling(g: Graph, labeling: PartitionLabeling) -> None:
    if len(labeling.assignment) != g.n:
        raise GraphValidationError("labeling does not cover the vertex set")


def crossing_edges(g: Graph, labeling: PartitionLabeling) -> int:
    _check_labeling(g, labeling)
    a = labeling.assignment
    return sum(1 for u, v in g.edges() if a[u] != a[v])


def chen_gap(g: Graph, labeling: PartitionLabeling) -> int:
    """Internal edges minus missing crossing pairs.

    ``sum_i e(G[V_i]) - (sum_{i<j} |V_i||V_j| - |E_cr|)``.
    """
    _check_labeling(g, labeling)
    cross = crossing_edges(g, labeling)
    internal = g.num_edges - cross
    sizes = labeling.sizes()
    cross_pairs = (sum(sizes) ** 2 - sum(s * s for s in sizes)) // 2
    return internal - (cross_pairs - cross)


@dataclass(frozen=True)
class ChenDiagnostic:
    gap: int
    bound: int
    hypotheses_hold: bool
    class_matching: tuple[int, ...]
    class_max_degree: tuple[int, ...]
    max_vertex_load: int

    @property
    def within_bound(self) -> bool:
        return self.gap <= self.bound


def chen_diagnostic(g: Graph, labeling: PartitionLabeling, k: int) -> ChenDiagnostic:
    """The gap together with the per-class matching/degree caps it depends on.

    The gap is bounded by ``f(k-1, k-1)`` only when, for every class ``i`` and
    ``v`` in it: the other classes carry total matching number <= k-1, class
    ``i`` has max degree <= k-1, and ``d_{V_i}(v)`` plus the matching numbers of
    ``N(v)`` inside the other classes is <= k-1.
    """
    from .graph import induced_subgraph

    _check_labeling(g, labeling)
    classes = labeling.classes()
    nus = [matching_number(induced_subgraph(g, c)) for c in classes]
    maxdeg = [max(((g.adj[v] & c.mask).bit_count() for v in c), default=0) for c in classes]
    total_nu = sum(nus)
    ok = all(total_nu - nus[i] <= k - 1 and maxdeg[i] <= k - 1 for i in range(len(classes)))
    worst = 0
    for i, c in enumerate(classes):
        for v in c:
            load = (g.adj[v] & c.mask).bit_count()
            for j, other in enumerate(classes):
                if j != i:
                    load += matching_number(induced_subgraph(g, VertexSet(g.adj[v] & other.mask)))
            worst = max(worst, load)
    ok = ok and worst <= k - 1
    return ChenDiagnostic(
        gap=chen_gap(g, labeling),
        bound=f_formula(max(k - 1, 0), max(k - 1, 0)),
        hypotheses_hold=ok,
        class_matching=tuple(nus),
        class_max_degree=tuple(maxdeg),
        max_vertex_load=worst,
    )


def _exhaustive_max_cut(g: Graph, p: int) -> PartitionLabeling:
    n = g.n
    lower = [g.adj[v] & ((1 << v) - 1) for v in range(n)]
    # edges with the larger endpoint >= v, not yet counted when v is assigned
    pending = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        pending[v] = pending[v + 1] + lower[v].bit_count()
    assign = [0] * n
    best_val = -1
    best: list[int] = []
    class_masks = [0] * p

    def rec(v: int, used: int, val: int) -> None:
        nonlocal best_val, best
        if val + pending[v] <= best_val:
            return
        if v == n:
            best_val = val
            best = assign[:]
            return
        for c in range(min(used + 1, p)):
            gain = lower[v].bit_count() - (lower[v] & class_masks[c]).bit_count()
            assign[v] = c
            class_masks[c] |= 1 << v
            rec(v + 1, max(used, c + 1), val + gain)
            class_masks[c] &= ~(1 << v)

    rec(0, 0, 0)
    return PartitionLabeling(tuple(best), p, certified=True)


def _local_search_max_cut(g: Graph, p: int) -> PartitionLabeling:
    n = g.n
    assign = [v % p for v in range(n)]
    improved = True
    while improved:
        improved = False
        for v in range(n):
            counts = [0] * p
            for u in iter_bits(g.adj[v]):
                counts[assign[u]] += 1
            # moving v to class c makes its edges into every other class crossing
            target = min(range(p), key=lambda c: (counts[c], c))
            if counts[target] < counts[assign[v]]:
                assign[v] = target
                improved = True
    return PartitionLabeling(tuple(assign), p, certified=False)


def max_crossing_partition(g: Graph, p: int, allow_heuristic: bool = False) -> PartitionLabeling:
    """Partition into ``p`` classes with the most crossing edges.

    Exhaustive (over restricted-growth labelings, which contain the
    lexicographically least optimum) up to ``EXHAUSTIVE_PARTITION_LIMIT``
    vertices. Larger graphs need ``allow_heuristic`` and get a local-search
    optimum marked ``certified=False``.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    if g.n <= EXHAUSTIVE_PARTITION_LIMIT:
        return _exhaustive_max_cut(g, p)
    if not allow_heuristic:
        raise BudgetExceededError(
            f"exhaustive partition search limited to {EXHAUSTIVE_PARTITION_LIMIT} vertices"
        )
    return _local_search_max_cut(g, p)


# -- set inequality -------------------------------------------------------------


def intersection_bound(sets: Sequence[Iterable[int]]) -> tuple[int, int]:
    """Both sides of ``|V_1 ∩ ... ∩ V_n| >= sum |V_i| - (n-1)|V_1 ∪ ... ∪ V_n|``."""
    vs = [VertexSet.of(s) for s in sets]
    if not vs:
        return 0, 0
    inter = vs[0].mask
    union = 0
    for s in vs:
        inter &= s.mask
        union |= s.mask
    lhs = inter.bit_count()
    rhs = sum(len(s) for s in vs) - (len(vs) - 1) * union.bit_count()
    return lhs, rhs


def intersection_bound_holds(sets: Sequence[Iterable[int]]) -> bool:
    lhs, rhs = intersection_bound(sets)
    return lhs >= rhs

