import itertools
import math

import networkx as nx
import pytest

from arcbrick.arcs import ArcError, enumerate_arcs, hom_arcs, is_weak_pair_arcs
from arcbrick.diagrams import (
    ArcDiagram,
    contains_k33,
    diagram,
    diagram_graph_check,
    enumerate_noncrossing,
    enumerate_weak,
    is_clockwise_ordered,
    is_noncrossing,
    is_strand_diagram,
    iter_weak,
    iter_weak_sets,
    longest_weak_length,
    max_weak_example,
    non_extendable_lengths,
    order_weakly,
)

from conftest import A

FIG_WEAK_EX = (A(0, "o", 3), A(0, "oo", 3), A(1, "u", 3), A(1, "", 3))


def test_fig_weak_example():
    d = diagram(FIG_WEAK_EX)
    assert is_clockwise_ordered(d)
    rep = diagram_graph_check(d)
    assert rep.simple and rep.bipartite and rep.edge_count == 4 and rep.ok


def test_repeated_arc_not_clockwise_ordered():
    assert not is_clockwise_ordered([A(0, "o", 2), A(0, "o", 2)])


def test_noncrossing_allows_contested():
    assert is_noncrossing([A(0, "", 2), A(1, "", 2)])
    assert not is_noncrossing([A(0, "uoou", 6), A(1, "uoou", 6)])


def test_single_arc_graph():
    assert diagram_graph_check([A(0, "u", 3)]).ok


def test_empty_diagram_needs_n():
    with pytest.raises(ArcError):
        diagram([])
    assert len(diagram([], 3)) == 0


def test_k33_detection():
    k33 = [(a, b) for a in range(3) for b in range(3, 6)]
    assert contains_k33(k33)
    assert not contains_k33(k33[:-1])


@pytest.mark.parametrize("n", range(2, 9))
def test_max_weak_example(n):
    d = max_weak_example(n)
    assert len(d) == 2 * n - 2
    assert is_clockwise_ordered(d)
    edges = {(g.left, g.right) for g in d}
    g = nx.Graph(edges)
    lefts = {a for a, _ in edges}
    rights = {b for _, b in edges}
    assert len(lefts) == n - 1 and rights == {n - 1, n}
    assert nx.is_isomorphic(g, nx.complete_bipartite_graph(n - 1, 2))
    assert diagram_graph_check(d).ok


def test_max_weak_example_n5_is_figure():
    d = max_weak_example(5)
    assert {(g.left, g.right) for g in d} == {(a, b) for a in range(4) for b in (4, 5)}
    with pytest.raises(ArcError):
        max_weak_example(1)


@pytest.mark.parametrize("n", range(1, 5))
def test_longest_weak_exhaustive(n):
    length, wit = longest_weak_length(n, use_bound=False)
    assert length == max(1, 2 * n - 2)
    assert is_clockwise_ordered(wit) and len(wit) == length


def test_longest_weak_n2_witness():
    length, wit = longest_weak_length(2)
    assert length == 2


def _brute_weak(n, k):
    arcs = enumerate_arcs(n)
    return [seq for seq in itertools.permutations(arcs, k)
            if all(is_weak_pair_arcs(seq[p], seq[q]) for p in range(k) for q in range(p + 1, k))]


def test_enumerate_weak_n2():
    assert len(enumerate_weak(2, 2)) == len(_brute_weak(2, 2)) == 4


@pytest.mark.parametrize("k", range(0, 5))
def test_enumerate_weak_matches_permutation_brute_force(k):
    got = sorted(d.arcs for d in enumerate_weak(3, k))
    assert got == sorted(_brute_weak(3, k))


@pytest.mark.parametrize("n", range(1, 5))
def test_enumerate_weak_length_one(n):
    assert [d.arcs[0] for d in enumerate_weak(n, 1)] == enumerate_arcs(n)


def test_weak_sets_are_exactly_realizable_sets():
    arcs = enumerate_arcs(3)
    realizable = set()
    for k in range(0, 5):
        for seq in _brute_weak(3, k):
            realizable.add(frozenset(seq))
    got = {frozenset(s) for s in iter_weak_sets(3)}
    assert got == realizable
    for s in got:
        if s:
            assert is_clockwise_ordered(order_weakly(list(s)))


def test_order_weakly_rejects():
    assert order_weakly([A(0, "", 2), A(1, "", 2)]) is None
    assert order_weakly([]) is None


@pytest.mark.parametrize("n", range(1, 6))
def test_noncrossing_counts(n):
    assert len(enumerate_noncrossing(n)) == math.factorial(n + 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_noncrossing_brute_force(n):
    arcs = enumerate_arcs(n)
    brute = []
    for r in range(len(arcs) + 1):
        for c in itertools.combinations(arcs, r):
            if all(not hom_arcs(a, b) and not hom_arcs(b, a) for a, b in itertools.combinations(c, 2)):
                brute.append(c)
    assert sorted(enumerate_noncrossing(n)) == sorted(brute)
    assert len(brute) == [2, 6, 24][n - 1]


@pytest.mark.parametrize("n", range(2, 5))
def test_graphs_of_all_weak_diagrams(n):
    for d in iter_weak(n):
        rep = diagram_graph_check(d)
        assert rep.ok, d
        assert rep.edge_count <= max(1, 2 * n - 2)
        g = nx.Graph([(x.left, x.right) for x in d])
        if g.number_of_edges():
            assert nx.check_planarity(g)[0] and nx.is_bipartite(g)


def test_strand_diagram_examples():
    later, earlier = A(1, "", 2), A(0, "", 2)
    assert is_strand_diagram([later, earlier], "o")
    assert not is_strand_diagram([earlier, later], "o")
    assert is_strand_diagram([earlier, later], "u")
    crossing = [A(0, "uu", 4), A(1, "uu", 4)]
    assert not is_strand_diagram(crossing, "uuu")
    assert not is_strand_diagram([A(0, "o", 2)], "u")
    assert is_strand_diagram([], "u")


def test_diagram_str_and_indexing():
    d = ArcDiagram(FIG_WEAK_EX, 3)
    assert str(d) == "(0:o, 0:oo, 1:u, 1:)"
    assert d[0] == FIG_WEAK_EX[0] and list(d) == list(FIG_WEAK_EX)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_non_extendable_lengths_brute_force(n):
    arcs = enumerate_arcs(n)
    weak = [list(d) for d in iter_weak(n) if len(d)]
    want = set()
    for seq in weak:
        grown = (seq[:p] + [g] + seq[p:] for g in arcs if g not in seq for p in range(len(seq) + 1))
        if not any(is_clockwise_ordered(s) for s in grown):
            want.add(len(seq))
    got = non_extendable_lengths(n)
    assert got == sorted(want)
    assert got[-1] == max(1, 2 * n - 2)
