"""Hot-loop kernels with a compiled backend and a pure-Python fallback.

The compiled extension (``_cimpl``) is used when it was built and the graph
fits in 64-bit words; otherwise the pure-Python module takes over. Call
:func:`use_backend` to force one (tests and benchmarks do this).
"""

from __future__ import annotations

from . import _pyimpl

try:
    from . import _cimpl
except ImportError:  # extension not built
    _cimpl = None

MODE_COUNT = _pyimpl.MODE_COUNT
MODE_MAX_EDGES = _pyimpl.MODE_MAX_EDGES
MODE_MAXIMAL = _pyimpl.MODE_MAXIMAL

COMPILED_AVAILABLE = _cimpl is not None
_active = "cython" if COMPILED_AVAILABLE else "python"


def backend() -> str:
    return _active


def available_backends() -> list[str]:
    return ["cython", "python"] if COMPILED_AVAILABLE else ["python"]


def use_backend(name: str) -> str:
    """Select ``"cython"`` or ``"python"``; returns the previous choice."""
    global _active
    if name not in ("cython", "python"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "cython" and not COMPILED_AVAILABLE:
        raise RuntimeError("compiled kernels are not built; run `pip install -e .`")
    prev, _active = _active, name
    return prev


def _impl(n: int):
    if _active == "cython" and n <= 64:
        return _cimpl
    return _pyimpl


def find_witness(adj, p, ks):
    return _impl(len(adj)).find_witness(adj, p, ks)


def enumerate_free(n, p, ks, mode, prefix_len=0, prefix_bits=0, hint=-1, visit=None):
    impl = _impl(n) if n * (n - 1) // 2 <= 64 else _pyimpl
    return impl.enumerate_free(n, p, ks, mode, prefix_len, prefix_bits, hint, visit)


def perron(nbrs, tol, res_tol, max_iter):
    impl = _cimpl if _active == "cython" else _pyimpl
    return impl.perron(nbrs, tol, res_tol, max_iter)
