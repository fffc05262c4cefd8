"""Perron roots of adjacency matrices and of equitable-partition quotients."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import sqrt
from typing import Sequence

from . import _kernels
from .errors import ConvergenceError
from .graph import Graph, components, iter_bits, max_degree

DEFAULT_TOL = 1e-12
DEFAULT_TIE_TOL = 1e-9
MAX_ITER = 10**6
# residual demanded per vertex before the iteration may stop
RESIDUAL_PER_VERTEX = 1e-10


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    vector: tuple[float, ...]
    residual: float
    certified_lower: float
    converged: bool = True
    iterations: int = 0


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def rayleigh(g: Graph, vector: Sequence[float]) -> float:
    """``2 * sum_{uv in E} x_u x_v / sum x_v^2``; a lower bound on the spectral radius."""
    if len(vector) != g.n:
        raise ValueError("vector length must equal n")
    if any(x < 0 for x in vector):
        raise ValueError("vector must be non-negative")
    norm = sum(x * x for x in vector)
    if norm == 0:
        raise ValueError("zero vector")
    num = 0.0
    for u, v in g.edges():
        num += vector[u] * vector[v]
    return 2.0 * num / norm


def eigen_residual(g: Graph, result: SpectralResult | float, vector: Sequence[float] | None = None) -> float:
    """``max_v |rho x_v - sum_{u ~ v} x_u|`` for a result, or for an explicit ``(rho, vector)``."""
    if isinstance(result, SpectralResult):
        rho, vec = result.rho, result.vector
    else:
        if vector is None:
            raise ValueError("pass a SpectralResult or rho together with a vector")
        rho, vec = float(result), vector
    if len(vec) != g.n:
        raise ValueError("vector length must equal n")
    if not any(vec):
        raise ValueError("zero vector")
    worst = 0.0
    for v in range(g.n):
        s = 0.0
        for u in iter_bits(g.adj[v]):
            s += vec[u]
        worst = max(worst, abs(rho * vec[v] - s))
    return worst


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> SpectralResult:
    """Perron root by power iteration, one connected component at a time.

    Each component starts from the all-ones vector and iterates ``A + I`` (the
    shift keeps bipartite components from oscillating). The returned vector is
    the winning component's Perron vector scaled to max entry 1, zero
    elsewhere; ``certified_lower`` is its Rayleigh quotient.
    """
    if g.n < 1:
        raise ValueError("spectral radius needs at least one vertex")
    if tol <= 0:
        raise ValueError("tol must be positive")
    best_rho = -1.0
    best_vec: list[float] = []
    best_members: list[int] = []
    converged = True
    iterations = 0
    for comp in components(g):
        members = comp.sorted()
        if len(members) == 1:
            rho, vec, it, ok = 0.0, [1.0], 0, True
        else:
            pos = {v: i for i, v in enumerate(members)}
            nbrs = [[pos[u] for u in iter_bits(g.adj[v])] for v in members]
            rho, vec, it, ok = _kernels.perron(nbrs, tol, RESIDUAL_PER_VERTEX * len(members), max_iter)
        iterations = max(iterations, it)
        converged = converged and ok
        if rho > best_rho:
            best_rho, best_vec, best_members = rho, vec, members
    vector = [0.0] * g.n
    for v, x in zip(best_members, best_vec):
        vector[v] = x
    result = SpectralResult(
        rho=best_rho,
        vector=tuple(vector),
        residual=eigen_residual(g, best_rho, vector),
        certified_lower=rayleigh(g, vector),
        converged=converged,
        iterations=iterations,
    )
    if __debug__ and converged:
        slack = 1e-9 * max(1.0, best_rho)
        assert 2 * g.num_edges / g.n <= best_rho + slack, "rho below average degree"
        assert best_rho <= max_degree(g) + slack, "rho above max degree"
    return result


def _dense_perron(mat: Sequence[Sequence[float]], tol: float, max_iter: int = MAX_ITER) -> tuple[float, list[float]]:
    # shifted power iteration on a small symmetric non-negative matrix
    m = len(mat)
    x = [1.0] * m
    prev = None
    for _ in range(max_iter):
        ax = [sum(mat[i][j] * x[j] for j in range(m)) for i in range(m)]
        r = sum(a * b for a, b in zip(x, ax)) / sum(a * a for a in x)
        res = max(abs(r * x[i] - ax[i]) for i in range(m))
        if prev is not None and abs(r - prev) < tol and res <= RESIDUAL_PER_VERTEX * m:
            return r, x
        prev = r
        y = [a + b for a, b in zip(ax, x)]
        top = max(y)
        x = [t / top for t in y]
    raise ConvergenceError("quotient power iteration did not converge")


def quotient_perron(q_minus_1: int, parts: Sequence[int], tol: float = DEFAULT_TOL) -> tuple[float, list[float]]:
    """Perron root and class-constant eigenvector of ``K_{q-1} join K_p(parts)``.

    Works on the quotient of the equitable partition (one class per part plus
    the join clique), symmetrised by the class sizes. The returned entries are
    one per non-empty part, then the clique entry if present, scaled so the
    largest is 1.
    """
    if not parts:
        raise ValueError("parts must be non-empty")
    if q_minus_1 < 0 or any(s < 0 for s in parts):
        raise ValueError("sizes must be non-negative")
    sizes = [s for s in parts if s > 0]
    has_clique = q_minus_1 > 0
    if has_clique:
        sizes.append(q_minus_1)
    k = len(sizes)
    if k == 0:
        raise ValueError("graph has no vertices")
    mat = [[0.0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i != j:
                mat[i][j] = sqrt(sizes[i] * sizes[j])
    if has_clique:
        mat[k - 1][k - 1] = float(q_minus_1 - 1)
    if k == 1 and not has_clique:
        return 0.0, [1.0]
    rho, z = _dense_perron(mat, tol)
    y = [z[i] / sqrt(sizes[i]) for i in range(k)]
    top = max(y)
    return rho, [t / top for t in y]


def quotient_rho(q_minus_1: int, parts: Sequence[int], tol: float = DEFAULT_TOL) -> float:
    return quotient_perron(q_minus_1, parts, tol)[0]


def compare_rho(
    g: Graph, h: Graph, tie_tol: float = DEFAULT_TIE_TOL, tol: float = DEFAULT_TOL
) -> Ordering:
    """Order two graphs by spectral radius; differences below ``tie_tol`` are EQUAL.

    A near-tie is still ordered when one side's Rayleigh lower bound clears the
    other's estimate plus residual by more than rounding noise.
    """
    if tie_tol <= 0:
        raise ValueError("tie_tol must be positive")
    a = spectral_radius(g, tol)
    b = spectral_radius(h, tol)
    if not (a.converged and b.converged):
        raise ConvergenceError("spectral radius did not converge")
    if a.rho - b.rho >= tie_tol:
        return Ordering.GREATER
    if b.rho - a.rho >= tie_tol:
        return Ordering.LESS
    noise = 1e-12 * max(1.0, a.rho, b.rho)
    if a.certified_lower > b.rho + b.residual + noise:
        return Ordering.GREATER
    if b.certified_lower > a.rho + a.residual + noise:
        return Ordering.LESS
    return Ordering.EQUAL


def turan_density_offset(rho: float, n: int, p: int) -> float:
    """``rho - (p-1)/p * n``; stays bounded for the spectral extremal graphs."""
    return rho - (p - 1) / p * n
