"""Builders for the named graph families, each with a deterministic labelling."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .combinatorics import (
    PartitionLabeling,
    f_formula,
    h_edges,
    matching_number,
    turan_part_sizes,
)
from .errors import InfeasibleConstructionError, VerificationError
from .graph import Graph, disjoint_union, join, make_graph, max_degree


@dataclass(frozen=True)
class StarForestSpec:
    """Forbidden pattern: edge blow-up with cliques ``K_{p+1}`` of the star forest ``ks``.

    ``ks`` is normalised to non-increasing order.
    """

    p: int
    ks: tuple[int, ...]

    def __post_init__(self) -> None:
        ks = tuple(sorted((int(k) for k in self.ks), reverse=True))
        if self.p < 1:
            raise ValueError("p must be >= 1")
        if not ks:
            raise ValueError("ks must be non-empty")
        if ks[-1] < 1:
            raise ValueError("every k_i must be >= 1")
        object.__setattr__(self, "ks", ks)

    @property
    def q(self) -> int:
        return len(self.ks)

    @property
    def kq(self) -> int:
        return self.ks[-1]

    @property
    def pattern_order(self) -> int:
        return self.q + self.p * sum(self.ks)

    def __str__(self) -> str:
        return f"p={self.p} ks={','.join(map(str, self.ks))}"


def star(k: int) -> Graph:
    """``K_{1,k}`` with centre 0."""
    if k < 1:
        raise ValueError("star needs k >= 1")
    return make_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def star_forest(spec: StarForestSpec | Sequence[int]) -> Graph:
    ks = spec.ks if isinstance(spec, StarForestSpec) else tuple(sorted(spec, reverse=True))
    if not ks:
        raise ValueError("ks must be non-empty")
    g = Graph.empty(0)
    for k in ks:
        g = disjoint_union(g, star(k))
    return g


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if any(s < 0 for s in parts):
        raise ValueError("part sizes must be >= 0")
    n = sum(parts)
    full = (1 << n) - 1
    adj = []
    start = 0
    for s in parts:
        own = ((1 << s) - 1) << start
        adj.extend([full & ~own] * s)
        start += s
    return Graph(n, tuple(adj))


def turan(r: int, n: int) -> Graph:
    """``T_r(n)``; larger parts come first."""
    return complete_multipartite(turan_part_sizes(r, n))


def edge_blowup(g: Graph, p: int) -> Graph:
    """Replace each edge by a ``K_{p+1}``; fresh vertices are appended per edge in edge order."""
    if p < 1:
        raise ValueError("p must be >= 1")
    edges = g.edges()
    n = g.n + (p - 1) * len(edges)
    adj = list(g.adj) + [0] * (n - g.n)
    nxt = g.n
    for u, v in edges:
        members = [u, v] + list(range(nxt, nxt + p - 1))
        nxt += p - 1
        mask = 0
        for w in members:
            mask |= 1 << w
        for w in members:
            adj[w] |= mask & ~(1 << w)
    return Graph(n, tuple(adj))


def _special_odd_component(r: int) -> Graph:
    # K_{2r+3} minus a near-perfect matching and one edge at the uncovered vertex
    order = 2 * r + 3
    removed = {(2 * i, 2 * i + 1) for i in range(r + 1)}
    removed.add((0, order - 1))
    edges = [(u, v) for v in range(order) for u in range(v) if (u, v) not in removed]
    return make_graph(order, edges)


def chvatal_hanson_graph(nu: int, delta: int) -> Graph:
    """One graph with matching number <= nu, max degree <= delta and f(nu, delta) edges.

    Even ``delta = 2r``: ``nu // r`` copies of ``K_{2r+1}`` plus ``nu % r`` stars
    ``S_{2r}``. Odd ``delta = 2r+1``: ``nu // (r+1)`` copies of ``K_{2r+3}`` minus
    ``r+2`` edges (one vertex loses two), plus the remaining matching budget as
    stars ``S_{2r+1}``; ``delta = 1`` is just ``nu`` disjoint edges. The result is re-checked before it is returned.
    """
    if nu < 0 or delta < 0:
        raise ValueError("nu and delta must be non-negative")
    if nu == 0 or delta == 0:
        return Graph.empty(0)
    parts: list[Graph] = []
    if delta % 2 == 0:
        r = delta // 2
        parts += [Graph.complete(2 * r + 1)] * (nu // r)
        parts += [star(2 * r)] * (nu % r)
    elif delta == 1:
        parts += [star(1)] * nu
    else:
        r = delta // 2
        copies = nu // (r + 1)
        parts += [_special_odd_component(r)] * copies
        parts += [star(2 * r + 1)] * (nu - (r + 1) * copies)
    g = Graph.empty(0)
    for part in parts:
        g = disjoint_union(g, part)
    if (
        g.num_edges != f_formula(nu, delta)
        or max_degree(g) > delta
        or matching_number(g) > nu
    ):
        raise VerificationError(f"Chvátal-Hanson construction failed for nu={nu}, delta={delta}")
    return g


@dataclass(frozen=True)
class FamilyLayout:
    """Where the pieces of an extremal-family member sit in its labelling."""

    clique: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    embedded: tuple[int, ...]

    def turan_partition(self) -> PartitionLabeling:
        """Partition of the Turán part (join clique removed), relabelled from 0."""
        off = len(self.clique)
        return PartitionLabeling.from_classes(
            sum(len(c) for c in self.classes),
            [[v - off for v in c] for c in self.classes],
        )


def family_layout(n: int, spec: StarForestSpec) -> FamilyLayout:
    q, p = spec.q, spec.p
    rest = n - q + 1
    if rest < p:
        raise InfeasibleConstructionError(f"n={n} too small: need n - q + 1 >= p for {spec}")
    sizes = turan_part_sizes(p, rest)
    host = chvatal_hanson_graph(spec.kq - 1, spec.kq - 1)
    if host.n > sizes[0]:
        raise InfeasibleConstructionError(
            f"n={n} too small: largest Turán class {sizes[0]} cannot hold {host.n} vertices"
        )
    off = q - 1
    classes = []
    for s in sizes:
        classes.append(tuple(range(off, off + s)))
        off += s
    return FamilyLayout(
        clique=tuple(range(q - 1)),
        classes=tuple(classes),
        embedded=classes[0][: host.n],
    )


def extremal_family_member(n: int, spec: StarForestSpec) -> Graph:
    """``K_{q-1} join T_p(n-q+1)`` with a Chvátal-Hanson graph on ``k_q - 1`` in its largest class.

    The embedded graph occupies the lowest labels of class 0 (the largest).
    Edge count is checked against ``h(n,p,q) + f(k_q-1, k_q-1)``.
    """
    layout = family_layout(n, spec)
    base = join(Graph.complete(spec.q - 1), turan(spec.p, n - spec.q + 1))
    host = chvatal_hanson_graph(spec.kq - 1, spec.kq - 1)
    adj = list(base.adj)
    for u, v in host.edges():
        a, b = layout.embedded[u], layout.embedded[v]
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    g = Graph(n, tuple(adj))
    expected = h_edges(n, spec.p, spec.q) + f_formula(spec.kq - 1, spec.kq - 1)
    if g.num_edges != expected:
        raise VerificationError(f"extremal member has {g.num_edges} edges, expected {expected}")
    return g
