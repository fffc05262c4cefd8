from __future__ import annotations

import random

import pytest

from blowuplab import _kernels
from blowuplab._kernels import _pyimpl

from helpers import random_graph


def test_backend_switching():
    names = _kernels.available_backends()
    assert "python" in names
    prev = _kernels.use_backend("python")
    try:
        assert _kernels.backend() == "python"
    finally:
        _kernels.use_backend(prev)
    with pytest.raises(ValueError):
        _kernels.use_backend("fortran")


def _random_case(rng):
    n = rng.randint(1, 14)
    g = random_graph(rng, n, rng.uniform(0.2, 0.95))
    p = rng.randint(1, 3)
    ks = sorted((rng.randint(1, 3) for _ in range(rng.randint(1, 3))), reverse=True)
    return list(g.adj), p, ks


@pytest.mark.skipif(not _kernels.COMPILED_AVAILABLE, reason="compiled kernel not built")
def test_witness_search_backends_agree():
    from blowuplab._kernels import _cimpl

    rng = random.Random(31)
    for _ in range(1500):
        adj, p, ks = _random_case(rng)
        assert _cimpl.find_witness(adj, p, ks) == _pyimpl.find_witness(adj, p, ks)


@pytest.mark.skipif(not _kernels.COMPILED_AVAILABLE, reason="compiled kernel not built")
@pytest.mark.parametrize("mode", [_pyimpl.MODE_COUNT, _pyimpl.MODE_MAX_EDGES, _pyimpl.MODE_MAXIMAL])
@pytest.mark.parametrize("n,p,ks", [(5, 2, (1,)), (6, 2, (2,)), (6, 2, (1, 1)), (5, 3, (1,)), (6, 1, (2,))])
def test_enumeration_backends_agree(mode, n, p, ks):
    from blowuplab._kernels import _cimpl

    a = _cimpl.enumerate_free(n, p, ks, mode)
    b = _pyimpl.enumerate_free(n, p, ks, mode)
    assert a[0] == b[0] and a[1] == b[1]
    assert sorted(a[2]) == sorted(b[2])


@pytest.mark.skipif(not _kernels.COMPILED_AVAILABLE, reason="compiled kernel not built")
def test_perron_backends_agree():
    from blowuplab._kernels import _cimpl

    rng = random.Random(37)
    for _ in range(50):
        n = rng.randint(2, 12)
        nbrs = [[] for _ in range(n)]
        for v in range(1, n):
            u = rng.randrange(v)
            nbrs[u].append(v)
            nbrs[v].append(u)
        a = _cimpl.perron(nbrs, 1e-12, 1e-9, 10**6)
        b = _pyimpl.perron(nbrs, 1e-12, 1e-9, 10**6)
        assert a[0] == pytest.approx(b[0], abs=1e-12)
        assert a[2] == b[2] and a[3] and b[3]


def test_sharded_enumeration_sums_to_whole(backend):
    whole = _kernels.enumerate_free(5, 2, (1,), _pyimpl.MODE_COUNT)[0]
    parts = sum(_kernels.enumerate_free(5, 2, (1,), _pyimpl.MODE_COUNT, 3, b)[0] for b in range(8))
    assert whole == parts


def test_large_graph_falls_back_to_python(backend):
    adj = [0] * 70
    adj[0], adj[1] = 2, 1
    assert _kernels.find_witness(adj, 1, (1,)) == ([0], [[2]])
