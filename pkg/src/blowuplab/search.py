"""Exhaustive desk-scale searches for ex(n,F), Ex(n,F) and Ex_sp(n,F)."""

from __future__ import annotations

import random
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from . import _kernels
from .combinatorics import chen_diagnostic, ex_formula, max_crossing_partition
from .constructions import StarForestSpec, extremal_family_member
from .errors import BudgetExceededError, InfeasibleConstructionError
from .freeness import is_free
from .graph import Graph, iter_bits
from .spectral import DEFAULT_TIE_TOL, DEFAULT_TOL, SpectralResult, spectral_radius, turan_density_offset

ENUMERATION_HARD_LIMIT = 9
CANONICAL_LIMIT = 10


@dataclass(frozen=True)
class SearchConfig:
    """Budget knobs for the exhaustive searches."""

    max_n: int = ENUMERATION_HARD_LIMIT
    shard_bits: int = 0
    workers: int = 1
    tie_tol: float = DEFAULT_TIE_TOL
    tol: float = DEFAULT_TOL


# -- canonical forms ---------------------------------------------------------


def _refined_classes(g: Graph) -> list[list[int]]:
    # colour refinement seeded by degree; colours named by sorted signatures
    colour = [a.bit_count() for a in g.adj]
    while True:
        sigs = [
            (colour[v], tuple(sorted(colour[u] for u in iter_bits(g.adj[v]))))
            for v in range(g.n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colour)):
            colour = new
            break
        colour = new
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colour):
        classes.setdefault(c, []).append(v)
    return [classes[c] for c in sorted(classes)]


def _canonical_perm(g: Graph) -> tuple[list[int], tuple[int, ...]]:
    if g.n > CANONICAL_LIMIT:
        raise BudgetExceededError(f"canonical form limited to {CANONICAL_LIMIT} vertices")
    n = g.n
    slot_class: list[list[int]] = []
    for cls in _refined_classes(g):
        slot_class.extend([cls] * len(cls))
    order: list[int] = []
    cols: list[int] = []
    best: list[tuple[int, ...] | list[int] | None] = [None, None]

    def rec(t: int, used: int) -> None:
        if t == n:
            if best[0] is None or tuple(cols) < best[0]:
                best[0] = tuple(cols)
                best[1] = order[:]
            return
        for v in slot_class[t]:
            if used >> v & 1:
                continue
            col = 0
            for u in order:
                col = (col << 1) | (g.adj[v] >> u & 1)
            if best[0] is not None:
                prefix = tuple(cols) + (col,)
                if prefix > best[0][: t + 1]:
                    continue
            order.append(v)
            cols.append(col)
            rec(t + 1, used | (1 << v))
            order.pop()
            cols.pop()

    rec(0, 0)
    return best[1], best[0]


def canonical_form(g: Graph) -> str:
    """Least column-order adjacency bitstring over labelings that respect the refined degree partition."""
    _, cols = _canonical_perm(g)
    return "".join(format(c, f"0{t}b") if t else "" for t, c in enumerate(cols))


def canonical_graph(g: Graph) -> Graph:
    order, _ = _canonical_perm(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(a.bit_count() for a in g.adj) != sorted(a.bit_count() for a in h.adj):
        return False
    return canonical_form(g) == canonical_form(h)


def canonical_set(graphs: Iterable[Graph]) -> list[Graph]:
    """Canonical representatives, one per isomorphism class, sorted by canonical form."""
    seen: dict[str, Graph] = {}
    for g in graphs:
        key = f"{g.n}:{canonical_form(g)}"
        if key not in seen:
            seen[key] = canonical_graph(g)
    return [seen[k] for k in sorted(seen)]


# -- enumeration -------------------------------------------------------------


@lru_cache(maxsize=None)
def edge_order(n: int) -> tuple[tuple[int, int], ...]:
    """Edge slots in graph6 column order; slot ``i`` is bit ``i`` of an edge mask."""
    return tuple((i, j) for j in range(n) for i in range(j))


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = edge_order(n)
    adj = [0] * n
    for idx in iter_bits(mask):
        u, v = pairs[idx]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _check_budget(n: int, cfg: SearchConfig) -> None:
    limit = min(cfg.max_n, ENUMERATION_HARD_LIMIT)
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > limit:
        raise BudgetExceededError(f"exhaustive enumeration limited to n <= {limit}")
    if n == 9:
        warnings.warn("n = 9 labelled enumeration may take a long time", RuntimeWarning, stacklevel=3)


def _shard_job(args):
    n, p, ks, mode, prefix_len, prefix, hint = args
    return _kernels.enumerate_free(n, p, ks, mode, prefix_len, prefix, hint, None)


def _run(n: int, spec: StarForestSpec, mode: int, cfg: SearchConfig, hint: int = -1, visit=None):
    """Run one enumeration mode over every shard and merge (max, union)."""
    m = n * (n - 1) // 2
    bits = max(0, min(cfg.shard_bits, m))
    jobs = [(n, spec.p, spec.ks, mode, bits, prefix, hint) for prefix in range(1 << bits)]
    if cfg.workers > 1 and visit is None and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_shard_job, jobs))
    else:
        results = []
        best = hint
        for job in jobs:
            # shards run in sequence share the incumbent bound
            job = job[:-1] + (best,)
            r = _kernels.enumerate_free(*job, visit)
            best = max(best, r[1])
            results.append(r)
    count = sum(r[0] for r in results)
    best = max((r[1] for r in results), default=hint)
    masks: list[int] = []
    for r in results:
        if mode != _kernels.MODE_MAX_EDGES or r[1] == best:
            masks.extend(r[2])
    return count, best, masks


def enumerate_free(
    n: int,
    spec: StarForestSpec,
    visit: Callable[[Graph], object] | None = None,
    config: SearchConfig = SearchConfig(),
) -> int:
    """Visit every labelled F-free graph on ``n`` vertices once; return how many there are."""
    _check_budget(n, config)
    cb = None if visit is None else (lambda mask: visit(graph_from_mask(n, mask)))
    count, _, _ = _run(n, spec, _kernels.MODE_COUNT, config, visit=cb)
    return count


def _construction_hint(n: int, spec: StarForestSpec) -> int:
    try:
        g = extremal_family_member(n, spec)
    except InfeasibleConstructionError:
        return -1
    return g.num_edges if is_free(g, spec) else -1


def labelled_extremal_masks(n: int, spec: StarForestSpec, config: SearchConfig = SearchConfig()) -> tuple[int, list[int]]:
    _check_budget(n, config)
    _, best, masks = _run(n, spec, _kernels.MODE_MAX_EDGES, config, hint=_construction_hint(n, spec))
    return best, masks


def turan_number_bruteforce(
    n: int, spec: StarForestSpec, config: SearchConfig = SearchConfig()
) -> tuple[int, list[Graph]]:
    """Exact ex(n, F) and its extremal graphs up to isomorphism."""
    best, masks = labelled_extremal_masks(n, spec, config)
    return best, canonical_set(graph_from_mask(n, m) for m in masks)


@dataclass
class SpectralSearch:
    rho: float
    graphs: list[Graph]
    result: SpectralResult
    candidates: int


def _spectral_search(n: int, spec: StarForestSpec, config: SearchConfig, prune: bool = True) -> SpectralSearch:
    _check_budget(n, config)
    if n == 0:
        raise ValueError("spectral search needs n >= 1")
    scored: list[tuple[float, int, SpectralResult]] = []

    def score(mask: int) -> None:
        res = spectral_radius(graph_from_mask(n, mask), config.tol)
        scored.append((res.rho, mask, res))

    mode = _kernels.MODE_MAXIMAL if prune else _kernels.MODE_COUNT
    count, _, _ = _run(n, spec, mode, config, visit=score)
    top = max(s[0] for s in scored)
    winners = [s for s in scored if s[0] >= top - config.tie_tol]
    best = max(winners, key=lambda s: s[0])
    graphs = canonical_set(graph_from_mask(n, s[1]) for s in winners)
    return SpectralSearch(rho=top, graphs=graphs, result=best[2], candidates=count)


def spectral_extremal_bruteforce(
    n: int, spec: StarForestSpec, config: SearchConfig = SearchConfig(), prune: bool = True
) -> tuple[float, list[Graph]]:
    """Largest spectral radius over F-free graphs and its maximisers up to isomorphism.

    With ``prune`` only edge-maximal free graphs are scored; adding an edge
    never lowers the Perron root, so the maximum is attained among them.
    """
    s = _spectral_search(n, spec, config, prune)
    return s.rho, s.graphs


# -- verification pipeline ---------------------------------------------------


@dataclass
class VerificationReport:
    n: int
    spec: StarForestSpec
    ex_brute: int
    ex_formula_value: int
    extremal_graphs: list[Graph]
    rho_max: float
    spectral_extremal_graphs: list[Graph]
    containment_holds: bool
    formula_matches: bool
    diagnostics: dict = field(default_factory=dict)
    runtime_ms: float = 0.0


def verify_theorem(n: int, spec: StarForestSpec, config: SearchConfig = SearchConfig()) -> VerificationReport:
    """Brute-force ex and Ex_sp at ``n`` and record whether Ex_sp ⊆ Ex.

    Small-n deviations from the large-n statements are reported, never raised.
    """
    t0 = time.perf_counter()
    ex, extremal = turan_number_bruteforce(n, spec, config)
    t1 = time.perf_counter()
    sp = _spectral_search(n, spec, config)
    t2 = time.perf_counter()

    ex_keys = {canonical_form(g) for g in extremal}
    containment = all(canonical_form(g) in ex_keys for g in sp.graphs)
    formula = ex_formula(n, spec)

    diag: dict = {
        "rho_minus_turan_density": turan_density_offset(sp.rho, n, spec.p),
        "rho_residual": sp.result.residual,
        "rho_certified_lower": sp.result.certified_lower,
        "spectral_candidates": sp.candidates,
        "runtime_ms_ex": (t1 - t0) * 1000.0,
        "runtime_ms_spectral": (t2 - t1) * 1000.0,
    }
    try:
        member = extremal_family_member(n, spec)
        diag["construction_edges"] = member.num_edges
        diag["construction_free"] = is_free(member, spec)
        diag["construction_rho"] = spectral_radius(member, config.tol).rho
    except InfeasibleConstructionError:
        diag["construction_edges"] = None
        diag["construction_free"] = None
        diag["construction_rho"] = None
    chen = []
    for g in extremal:
        lab = max_crossing_partition(g, spec.p)
        d = chen_diagnostic(g, lab, spec.kq)
        chen.append({"gap": d.gap, "bound": d.bound, "hypotheses_hold": d.hypotheses_hold})
    diag["chen_gaps"] = chen
    diag["part_balances"] = [sorted(max_crossing_partition(g, spec.p).sizes(), reverse=True) for g in sp.graphs]

    return VerificationReport(
        n=n,
        spec=spec,
        ex_brute=ex,
        ex_formula_value=formula,
        extremal_graphs=extremal,
        rho_max=sp.rho,
        spectral_extremal_graphs=sp.graphs,
        containment_holds=containment,
        formula_matches=ex == formula,
        diagnostics=diag,
        runtime_ms=(time.perf_counter() - t0) * 1000.0,
    )


# -- hill climbing -------------------------------------------------------------


def _random_maximal_free(n: int, spec: StarForestSpec, rng: random.Random) -> Graph:
    pairs = list(edge_order(n))
    rng.shuffle(pairs)
    g = Graph.empty(n)
    for u, v in pairs:
        h = g.add_edge(u, v)
        if is_free(h, spec):
            g = h
    return g


def hill_climb(
    n: int,
    spec: StarForestSpec,
    steps: int = 1000,
    seed: int = 0,
    tie_tol: float = DEFAULT_TIE_TOL,
    tol: float = DEFAULT_TOL,
) -> tuple[Graph, float]:
    """Local search for large spectral radius among F-free graphs (no optimality claim).

    Starts from the extremal construction when it fits (else a random maximal
    free graph). Each step proposes a random non-edge: it is added when the
    graph stays free, otherwise swapped against a random edge and kept only
    if the spectral radius rises by more than ``tie_tol``.
    """
    rng = random.Random(seed)
    try:
        g = extremal_family_member(n, spec)
        if not is_free(g, spec):
            g = _random_maximal_free(n, spec, rng)
    except InfeasibleConstructionError:
        g = _random_maximal_free(n, spec, rng)
    rho = spectral_radius(g, tol).rho
    for _ in range(steps):
        non_edges = [(u, v) for (u, v) in edge_order(n) if not g.has_edge(u, v)]
        if not non_edges:
            break
        u, v = rng.choice(non_edges)
        h = g.add_edge(u, v)
        if is_free(h, spec):
            g, rho = h, spectral_radius(h, tol).rho
            continue
        edges = g.edges()
        if not edges:
            continue
        a, b = rng.choice(edges)
        h = g.remove_edge(a, b).add_edge(u, v)
        if is_free(h, spec):
            r = spectral_radius(h, tol).rho
            if r > rho + tie_tol:
                g, rho = h, r
    return g, rho


def mask_of(g: Graph) -> int:
    """Edge mask of ``g`` in the enumeration's slot order."""
    index = {e: i for i, e in enumerate(edge_order(g.n))}
    m = 0
    for e in g.edges():
        m |= 1 << index[e]
    return m


__all__ = [
    "SearchConfig",
    "VerificationReport",
    "canonical_form",
    "canonical_graph",
    "canonical_set",
    "edge_order",
    "enumerate_free",
    "graph_from_mask",
    "hill_climb",
    "isomorphic",
    "mask_of",
    "spectral_extremal_bruteforce",
    "turan_number_bruteforce",
    "verify_theorem",
]

