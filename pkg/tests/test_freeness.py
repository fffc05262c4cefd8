from __future__ import annotations

import random

import pytest

from blowuplab import (
    BudgetExceededError,
    Graph,
    StarForestSpec,
    Witness,
    check_witness,
    complete_multipartite,
    edge_blowup,
    extremal_family_member,
    find_blowup_star_forest,
    generic_contains,
    is_free,
    make_graph,
    pattern_graph,
    star_forest,
    turan,
)
from blowuplab.freeness import GENERIC_PATTERN_LIMIT

from helpers import random_graph

SMALL_SPECS = [
    StarForestSpec(p, ks)
    for p in (2, 3)
    for ks in [(1,), (2,), (3,), (1, 1), (2, 1), (1, 1, 1)]
]


def test_bowtie_in_k5(backend):
    w = find_blowup_star_forest(Graph.complete(5), StarForestSpec(2, (2,)))
    assert w == Witness(centers=(0,), cliques=(((1, 2), (3, 4)),))
    assert check_witness(Graph.complete(5), StarForestSpec(2, (2,)), w) == []


def test_no_triangle_in_k33(backend):
    assert find_blowup_star_forest(complete_multipartite([3, 3]), StarForestSpec(2, (1,))) is None


def test_member_12_is_free(backend):
    spec = StarForestSpec(2, (2, 2))
    assert find_blowup_star_forest(extremal_family_member(12, spec), spec) is None


def test_triangle_after_adding_edge(backend):
    g = turan(2, 7).add_edge(0, 1)
    w = find_blowup_star_forest(g, StarForestSpec(2, (1,)))
    assert w is not None and 0 in w.vertices() and 1 in w.vertices()


@pytest.mark.parametrize("n", range(1, 12))
def test_is_free_examples(n):
    assert is_free(turan(2, n), StarForestSpec(2, (1,)))


@pytest.mark.parametrize("p", range(1, 6))
def test_clique_is_not_free(p):
    assert not is_free(Graph.complete(p + 1), StarForestSpec(p, (1,)))


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=str)
def test_pattern_contains_itself(spec):
    assert not is_free(pattern_graph(spec), spec)
    assert pattern_graph(spec) == edge_blowup(star_forest(spec), spec.p)


def test_witness_ordering_prefers_larger_stars():
    spec = StarForestSpec(2, (1, 2))
    w = find_blowup_star_forest(Graph.complete(8), spec)
    assert [len(g) for g in w.cliques] == [2, 1]
    assert w.centers == (0, 5)
    assert w.to_dict() == {"centers": [0, 5], "cliques": [[[1, 2], [3, 4]], [[6, 7]]]}


def test_equal_stars_take_increasing_centres():
    spec = StarForestSpec(2, (1, 1))
    for _ in range(20):
        g = random_graph(random.Random(_), 9, 0.8)
        w = find_blowup_star_forest(g, spec)
        if w is not None:
            assert w.centers[0] < w.centers[1]


def test_check_witness_reports_problems():
    spec = StarForestSpec(2, (1,))
    g = make_graph(3, [(0, 1), (1, 2)])
    assert check_witness(g, spec, Witness((0,), (((1, 2),),)))
    assert check_witness(g, spec, Witness((0, 1), ((), ())))
    assert check_witness(g, spec, Witness((0,), (((0, 1),),)))
    assert check_witness(g, spec, Witness((5,), (((1, 2),),)))


def test_generic_contains_examples():
    assert generic_contains(Graph.complete(5), Graph.complete(3))
    c6 = make_graph(6, [(i, (i + 1) % 6) for i in range(6)])
    assert not generic_contains(c6, Graph.complete(3))
    assert generic_contains(c6, Graph.empty(0))
    assert not generic_contains(Graph.complete(3), Graph.complete(4))
    with pytest.raises(BudgetExceededError):
        generic_contains(Graph.complete(14), Graph.complete(GENERIC_PATTERN_LIMIT + 1))


def test_oracle_equivalence_sample(backend):
    rng = random.Random(23)
    for _ in range(200):
        n = rng.randint(1, 9)
        host = random_graph(rng, n, rng.uniform(0.1, 0.9))
        spec = rng.choice([s for s in SMALL_SPECS if s.pattern_order <= 9])
        w = find_blowup_star_forest(host, spec)
        assert (w is not None) == generic_contains(host, pattern_graph(spec))
        if w is not None:
            assert check_witness(host, spec, w) == []


def test_monotone_under_edge_addition():
    rng = random.Random(29)
    spec = StarForestSpec(2, (2,))
    for _ in range(200):
        g = random_graph(rng, 8, 0.6)
        if is_free(g, spec):
            continue
        missing = [(u, v) for v in range(g.n) for u in range(v) if not g.has_edge(u, v)]
        if missing:
            assert not is_free(g.add_edge(*rng.choice(missing)), spec)


def test_large_host_uses_fallback():
    # over 64 vertices the compiled kernel cannot hold a neighbourhood word
    spec = StarForestSpec(2, (2,))
    g = turan(2, 70)
    assert is_free(g, spec)
    assert not is_free(g.add_edge(0, 1).add_edge(0, 2), spec)
