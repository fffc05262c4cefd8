from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blowuplab import (
    Graph,
    InfeasibleConstructionError,
    StarForestSpec,
    chen_gap,
    chvatal_hanson_graph,
    complete_multipartite,
    components,
    degree,
    edge_blowup,
    extremal_family_member,
    f_formula,
    family_layout,
    induced_subgraph,
    is_free,
    make_graph,
    matching_number,
    max_degree,
    star,
    star_forest,
    turan,
)
from blowuplab.combinatorics import turan_part_sizes


def test_spec_normalises_and_validates():
    spec = StarForestSpec(2, (1, 3, 2))
    assert spec.ks == (3, 2, 1)
    assert (spec.q, spec.kq, spec.pattern_order) == (3, 1, 3 + 2 * 6)
    for bad in [(0, (1,)), (2, ()), (2, (1, 0))]:
        with pytest.raises(ValueError):
            StarForestSpec(*bad)


def test_star_examples():
    assert star(1) == Graph.complete(2)
    s = star(3)
    assert (s.n, s.num_edges, degree(s, 0)) == (4, 3, 3)
    with pytest.raises(ValueError):
        star(0)


def test_star_forest_examples():
    p2 = star_forest([2])
    assert (p2.n, p2.num_edges) == (3, 2)
    g = star_forest(StarForestSpec(2, (2, 1)))
    assert (g.n, g.num_edges, len(components(g))) == (5, 3, 2)
    g = star_forest([1, 2, 3])
    assert (g.n, g.num_edges) == (9, 6)
    assert degree(g, 0) == 3


def test_turan_examples():
    g = turan(2, 7)
    assert g == complete_multipartite([4, 3])
    assert g.num_edges == 12
    assert turan(3, 9).num_edges == 27
    assert turan(5, 4) == Graph.complete(4)


@pytest.mark.parametrize("r,n", [(r, n) for r in range(1, 6) for n in range(0, 13)])
def test_turan_balanced_and_clique_free(r, n):
    sizes = turan_part_sizes(r, n)
    assert max(sizes) - min(sizes) <= 1 and sum(sizes) == n
    if n > r:
        assert is_free(turan(r, n), StarForestSpec(r, (1,)))


def test_edge_blowup_examples():
    assert edge_blowup(Graph.complete(2), 3) == Graph.complete(4)
    bowtie = edge_blowup(star(2), 2)
    assert (bowtie.n, bowtie.num_edges, degree(bowtie, 0)) == (5, 6, 4)
    s33 = edge_blowup(star(3), 2)
    assert (s33.n, s33.num_edges) == (7, 9)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 7), st.data(), st.integers(1, 4))
def test_edge_blowup_counts(n, data, p):
    pairs = [(i, j) for j in range(n) for i in range(j)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = make_graph(n, edges)
    b = edge_blowup(g, p)
    assert b.n == g.n + (p - 1) * g.num_edges
    assert b.num_edges == g.num_edges * (p + 1) * p // 2
    assert edge_blowup(g, 1) == g


def test_chvatal_hanson_examples():
    assert chvatal_hanson_graph(1, 1) == Graph.complete(2)
    g22 = chvatal_hanson_graph(2, 2)
    assert g22.num_edges == 6 and [len(c) for c in components(g22)] == [3, 3]
    g33 = chvatal_hanson_graph(3, 3)
    assert g33.num_edges == 10
    sizes = [len(c) for c in components(g33)]
    assert sizes == [5, 4]
    assert induced_subgraph(g33, components(g33)[0]).num_edges == 7
    assert chvatal_hanson_graph(0, 0) == Graph.empty(0)


@pytest.mark.parametrize("nu", range(0, 6))
@pytest.mark.parametrize("delta", range(0, 6))
def test_chvatal_hanson_caps(nu, delta):
    g = chvatal_hanson_graph(nu, delta)
    assert matching_number(g) <= nu
    assert max_degree(g) <= delta
    assert g.num_edges == f_formula(nu, delta)


def test_extremal_member_examples():
    g = extremal_family_member(12, StarForestSpec(2, (2, 2)))
    assert g.num_edges == 42
    assert degree(g, 0) == 11
    t = extremal_family_member(7, StarForestSpec(2, (1,)))
    assert t == turan(2, 7)
    g = extremal_family_member(10, StarForestSpec(2, (2,)))
    assert g.num_edges == 26
    # the extra edge sits on the two lowest labels of the largest class
    assert g.has_edge(0, 1) and g.remove_edge(0, 1) == turan(2, 10)


def test_family_layout_and_natural_partition():
    spec = StarForestSpec(2, (2,))
    layout = family_layout(10, spec)
    assert layout.clique == ()
    assert layout.embedded == (0, 1)
    g = extremal_family_member(10, spec)
    assert chen_gap(g, layout.turan_partition()) == 1
    spec = StarForestSpec(3, (3, 2))
    layout = family_layout(12, spec)
    assert layout.clique == (0,)
    assert [len(c) for c in layout.classes] == [4, 4, 3]


def test_infeasible_member():
    with pytest.raises(InfeasibleConstructionError):
        extremal_family_member(3, StarForestSpec(2, (3, 3, 3)))
    with pytest.raises(InfeasibleConstructionError):
        # E_{2,2} needs 6 vertices inside one class
        extremal_family_member(8, StarForestSpec(2, (3,)))
