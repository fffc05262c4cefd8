"""Containment of blown-up star forests, with certified witnesses."""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .constructions import StarForestSpec, edge_blowup, star_forest
from .errors import BudgetExceededError, VerificationError
from .graph import Graph, iter_bits

GENERIC_PATTERN_LIMIT = 12


@dataclass(frozen=True)
class Witness:
    """``centers[i]`` plus ``cliques[i]``: ``ks[i]`` disjoint p-sets in its neighbourhood."""

    centers: tuple[int, ...]
    cliques: tuple[tuple[tuple[int, ...], ...], ...]

    def vertices(self) -> list[int]:
        out = list(self.centers)
        for group in self.cliques:
            for clique in group:
                out.extend(clique)
        return out

    def to_dict(self) -> dict:
        return {
            "centers": list(self.centers),
            "cliques": [[list(c) for c in group] for group in self.cliques],
        }


def check_witness(g: Graph, spec: StarForestSpec, w: Witness) -> list[str]:
    """Problems with ``w`` as an embedding into ``g``; empty when it is valid."""
    problems = []
    if len(w.centers) != spec.q or len(w.cliques) != spec.q:
        problems.append("wrong number of stars")
        return problems
    verts = w.vertices()
    if len(verts) != len(set(verts)):
        problems.append("vertices are not pairwise distinct")
    if any(not 0 <= v < g.n for v in verts):
        problems.append("vertex out of range")
        return problems
    for i, (c, group) in enumerate(zip(w.centers, w.cliques)):
        if len(group) != spec.ks[i]:
            problems.append(f"star {i} has {len(group)} cliques, expected {spec.ks[i]}")
        for clique in group:
            if len(clique) != spec.p:
                problems.append(f"star {i} has a clique of size {len(clique)}")
            members = (c,) + tuple(clique)
            for a in range(len(members)):
                for b in range(a + 1, len(members)):
                    if not g.has_edge(members[a], members[b]):
                        problems.append(f"missing edge {members[a]}-{members[b]} in star {i}")
    return problems


def find_blowup_star_forest(g: Graph, spec: StarForestSpec) -> Witness | None:
    """First embedding of the pattern in ``g`` under lowest-vertex-first order.

    Centres are placed for the largest ``k_i`` first (equal ``k_i`` take
    increasing labels); around each centre ``k_i`` disjoint p-cliques are
    packed inside the still-unused neighbourhood.
    """
    found = _kernels.find_witness(g.adj, spec.p, spec.ks)
    if found is None:
        return None
    centers, cliques = found
    return Witness(
        centers=tuple(centers),
        cliques=tuple(tuple(tuple(iter_bits(m)) for m in group) for group in cliques),
    )


def is_free(g: Graph, spec: StarForestSpec) -> bool:
    w = find_blowup_star_forest(g, spec)
    if w is None:
        return True
    problems = check_witness(g, spec, w)
    if problems:
        raise VerificationError("invalid witness: " + "; ".join(problems))
    return False


def _pattern_order(pattern: Graph) -> list[int]:
    # each next vertex has the most already-placed neighbours, then highest degree
    left = set(range(pattern.n))
    order: list[int] = []
    placed = 0
    deg = [a.bit_count() for a in pattern.adj]
    while left:
        v = max(left, key=lambda x: ((pattern.adj[x] & placed).bit_count(), deg[x], -x))
        order.append(v)
        placed |= 1 << v
        left.remove(v)
    return order


def generic_contains(host: Graph, pattern: Graph) -> bool:
    """Whether ``pattern`` is a (not necessarily induced) subgraph of ``host``.

    Plain backtracking over vertex maps with degree and adjacency pruning;
    knows nothing about the structure of blown-up star forests.
    """
    if pattern.n > GENERIC_PATTERN_LIMIT:
        raise BudgetExceededError(f"pattern larger than {GENERIC_PATTERN_LIMIT} vertices")
    if pattern.n == 0:
        return True
    if pattern.n > host.n or pattern.num_edges > host.num_edges:
        return False
    order = _pattern_order(pattern)
    pdeg = [a.bit_count() for a in pattern.adj]
    hdeg = [a.bit_count() for a in host.adj]
    all_host = (1 << host.n) - 1
    image = [-1] * pattern.n

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        w = order[i]
        cand = all_host & ~used
        for u in iter_bits(pattern.adj[w]):
            if image[u] >= 0:
                cand &= host.adj[image[u]]
        for h in iter_bits(cand):
            if hdeg[h] < pdeg[w]:
                continue
            image[w] = h
            if extend(i + 1, used | (1 << h)):
                return True
        image[w] = -1
        return False

    return extend(0, 0)


def pattern_graph(spec: StarForestSpec) -> Graph:
    return edge_blowup(star_forest(spec), spec.p)
