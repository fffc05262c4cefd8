from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blowuplab import (
    BudgetExceededError,
    Graph,
    PartitionLabeling,
    StarForestSpec,
    chen_diagnostic,
    chen_gap,
    crossing_edges,
    disjoint_union,
    ex_formula,
    extremal_family_member,
    f_bruteforce,
    f_formula,
    h_edges,
    intersection_bound,
    intersection_bound_holds,
    make_graph,
    matching_number,
    max_crossing_partition,
    turan,
    turan_edges,
)
from blowuplab.combinatorics import EXHAUSTIVE_PARTITION_LIMIT

from helpers import random_graph


def exhaustive_matching(g: Graph) -> int:
    # largest pairwise-disjoint edge subset, by plain subset search
    edges = g.edges()
    for size in range(len(edges), 0, -1):
        for sub in itertools.combinations(edges, size):
            seen = set()
            ok = True
            for u, v in sub:
                if u in seen or v in seen:
                    ok = False
                    break
                seen.update((u, v))
            if ok:
                return size
    return 0


def exhaustive_max_cut(g: Graph, p: int) -> int:
    return max(
        crossing_edges(g, PartitionLabeling(a, p))
        for a in itertools.product(range(p), repeat=g.n)
    )


def test_f_formula_values():
    assert f_formula(1, 1) == 1
    assert f_formula(2, 2) == 6
    assert f_formula(3, 3) == 10
    assert f_formula(0, 0) == 0
    assert f_formula(0, 5) == 0 and f_formula(5, 0) == 0
    with pytest.raises(ValueError):
        f_formula(-1, 1)


@pytest.mark.parametrize("nu,delta", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_f_formula_matches_oracle(nu, delta):
    assert f_bruteforce(nu, delta, 7) == f_formula(nu, delta)


def test_f_bruteforce_examples_and_budget():
    assert f_bruteforce(1, 1, 4) == 1
    assert f_bruteforce(1, 2, 5) == 3
    assert f_bruteforce(2, 2, 7) == 6
    with pytest.raises(BudgetExceededError):
        f_bruteforce(4, 1, 5)


def test_f_formula_upper_bound():
    for nu in range(51):
        for delta in range(51):
            assert f_formula(nu, delta) <= delta * nu + nu


def test_h_and_ex_formula():
    assert h_edges(12, 2, 2) == 41
    assert ex_formula(10, StarForestSpec(2, (2,))) == 26
    assert ex_formula(7, StarForestSpec(2, (1,))) == 12
    assert ex_formula(12, StarForestSpec(2, (2, 2))) == 42
    assert turan_edges(2, 7) == 12
    with pytest.raises(ValueError):
        h_edges(1, 2, 3)


def test_matching_examples():
    assert matching_number(Graph.empty(0)) == 0
    assert matching_number(Graph.complete(5)) == 2
    assert matching_number(turan(2, 7)) == 3
    k2 = Graph.complete(2)
    big = Graph.empty(0)
    for _ in range(20):
        big = disjoint_union(big, k2)
    # 40 vertices, but every component is tiny
    assert matching_number(big) == 20


def test_matching_against_exhaustive_on_small_graphs():
    # every labelled graph on <= 5 vertices, plus random 6-vertex graphs
    for n in range(0, 6):
        pairs = [(i, j) for j in range(n) for i in range(j)]
        for mask in range(1 << len(pairs)):
            g = make_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
            assert matching_number(g) == exhaustive_matching(g)
    rng = random.Random(3)
    for _ in range(300):
        g = random_graph(rng, 6)
        assert matching_number(g) == exhaustive_matching(g)


def test_crossing_and_gap_examples():
    t = turan(2, 6)
    lab = PartitionLabeling.from_classes(6, [[0, 1, 2], [3, 4, 5]])
    assert crossing_edges(t, lab) == 9
    assert chen_gap(t, lab) == 0
    k3 = Graph.complete(3)
    lab = PartitionLabeling((0, 0, 0), 2)
    assert crossing_edges(k3, lab) == 0
    assert chen_gap(k3, lab) == 3


def test_partition_labeling_validation():
    with pytest.raises(ValueError):
        PartitionLabeling((0, 2), 2)
    with pytest.raises(ValueError):
        PartitionLabeling.from_classes(3, [[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        PartitionLabeling.from_classes(3, [[0, 1]])


def test_chen_diagnostic_on_member():
    g = extremal_family_member(10, StarForestSpec(2, (2,)))
    lab = PartitionLabeling.from_classes(10, [range(5), range(5, 10)])
    d = chen_diagnostic(g, lab, 2)
    assert d.gap == 1 and d.bound == 1 and d.within_bound
    assert d.hypotheses_hold
    assert d.class_matching == (1, 0)


def test_max_crossing_examples():
    c5 = make_graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert crossing_edges(c5, max_crossing_partition(c5, 2)) == 4
    t = turan(2, 6)
    assert crossing_edges(t, max_crossing_partition(t, 2)) == 9
    assert crossing_edges(Graph.complete(3), max_crossing_partition(Graph.complete(3), 2)) == 2


def test_max_crossing_is_lexicographically_least_optimum():
    lab = max_crossing_partition(turan(2, 6), 2)
    assert lab.assignment == (0, 0, 0, 1, 1, 1)
    assert lab.certified


def test_max_crossing_against_exhaustive():
    rng = random.Random(5)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 7))
        p = rng.randint(1, 3)
        assert crossing_edges(g, max_crossing_partition(g, p)) == exhaustive_max_cut(g, p)


def test_max_crossing_budget():
    g = turan(2, EXHAUSTIVE_PARTITION_LIMIT + 1)
    with pytest.raises(BudgetExceededError):
        max_crossing_partition(g, 2)
    lab = max_crossing_partition(g, 2, allow_heuristic=True)
    assert not lab.certified
    assert crossing_edges(g, lab) <= g.num_edges


def test_intersection_bound_examples():
    assert intersection_bound([{1, 2}, {2, 3}]) == (1, 1)
    s = {1, 4, 6}
    assert intersection_bound([s, s]) == (3, 3)
    assert intersection_bound([{1}, {2}]) == (0, 0)
    assert intersection_bound([]) == (0, 0)


def test_intersection_bound_random_families():
    rng = random.Random(11)
    for _ in range(10_000):
        family = [{x for x in range(16) if rng.random() < 0.6} for _ in range(rng.randint(1, 6))]
        assert intersection_bound_holds(family)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.frozensets(st.integers(0, 15)), min_size=1, max_size=6))
def test_intersection_bound_property(family):
    assert intersection_bound_holds(family)
