"""Immutable simple graphs on vertices ``0..n-1`` backed by neighbourhood bitsets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateEdgeError,
    EndpointOutOfRangeError,
    GraphValidationError,
    SelfLoopError,
)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A set of vertices stored as an integer bitmask."""

    mask: int = 0

    @classmethod
    def of(cls, members: Iterable[int] | "VertexSet") -> "VertexSet":
        if isinstance(members, VertexSet):
            return members
        mask = 0
        for v in members:
            if v < 0:
                raise GraphValidationError(f"negative vertex {v}")
            mask |= 1 << v
        return cls(mask)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & ~other.mask)

    def sorted(self) -> list[int]:
        return list(iter_bits(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.sorted()})"


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask, so edge tests and
    neighbourhood intersections are word operations. Instances are values:
    every operation returns a new graph.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphValidationError("adjacency length does not match n")

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        """Trusted constructor: caller guarantees a symmetric, loop-free bitset table."""
        return cls(len(adj), tuple(adj))

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, a in enumerate(self.adj):
            for v in iter_bits(a >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        _check_vertex(self, v)
        return list(iter_bits(self.adj[v]))

    def vertex_set(self) -> VertexSet:
        return VertexSet((1 << self.n) - 1)

    def add_edge(self, u: int, v: int) -> "Graph":
        _check_pair(self.n, u, v)
        if self.adj[u] >> v & 1:
            raise DuplicateEdgeError(f"edge ({u},{v}) already present")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphValidationError(f"edge ({u},{v}) not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphValidationError("relabel needs a permutation of 0..n-1")
        adj = [0] * self.n
        for v, a in enumerate(self.adj):
            m = 0
            for u in iter_bits(a):
                m |= 1 << perm[u]
            adj[perm[v]] = m
        return Graph(self.n, tuple(adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.num_edges})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise EndpointOutOfRangeError(f"vertex {v} out of range for n={g.n}")


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise EndpointOutOfRangeError(f"edge ({u},{v}) out of range for n={n}")
    if u == v:
        raise SelfLoopError(f"self-loop at {u}")


def make_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, rejecting out-of-range endpoints, loops and repeated edges."""
    if n < 0:
        raise GraphValidationError("n must be non-negative")
    adj = [0] * n
    for u, v in edge_list:
        _check_pair(n, u, v)
        if adj[u] >> v & 1:
            raise DuplicateEdgeError(f"duplicate edge ({min(u, v)},{max(u, v)})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.n
    return Graph(g.n + h.n, g.adj + tuple(a << off for a in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    off = g.n
    g_all = (1 << g.n) - 1
    h_all = ((1 << h.n) - 1) << off
    return Graph(
        g.n + h.n,
        tuple(a | h_all for a in g.adj) + tuple((a << off) | g_all for a in h.adj),
    )


def induced_subgraph(g: Graph, s: Iterable[int] | VertexSet) -> Graph:
    vs = VertexSet.of(s)
    if vs.mask >> g.n:
        raise EndpointOutOfRangeError(f"vertex set {vs} exceeds n={g.n}")
    members = vs.sorted()
    pos = {v: i for i, v in enumerate(members)}
    adj = []
    for v in members:
        m = 0
        for u in iter_bits(g.adj[v] & vs.mask):
            m |= 1 << pos[u]
        adj.append(m)
    return Graph(len(members), tuple(adj))


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.adj[v].bit_count()


def degrees(g: Graph) -> list[int]:
    return [a.bit_count() for a in g.adj]


def max_degree(g: Graph) -> int:
    return max(degrees(g), default=0)


def min_degree(g: Graph) -> int:
    return min(degrees(g), default=0)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ a ^ (1 << v) for v, a in enumerate(g.adj)))


def components(g: Graph) -> list[VertexSet]:
    """Connected components, ordered by their smallest vertex."""
    left = (1 << g.n) - 1
    out = []
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(VertexSet(comp))
        left &= ~comp
    return out
