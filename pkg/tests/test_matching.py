import pytest
from hypothesis import given, strategies as st

from konigmatch import (
    AlternatingPath,
    Matching,
    augment,
    build_graph,
    find_augmenting_path,
    greedy_maximal_matching,
    is_disjoint_cycle_union,
    is_maximal,
    maximum_matching,
    symmetric_difference,
)
from konigmatch.errors import (
    ForeignMatching,
    InvalidMatching,
    SaturatedStart,
)

from conftest import matching_by_labels


@st.composite
def graphs(draw):
    nl = draw(st.integers(1, 4))
    nr = draw(st.integers(1, 4))
    possible = [(i, j) for i in range(nl) for j in range(nr)]
    edges = draw(st.sets(st.sampled_from(possible), min_size=1))
    return build_graph(nl, nr, sorted(edges))


def test_matching_rejects_non_edges(p4):
    with pytest.raises(InvalidMatching):
        Matching(p4, [(0, 3)])  # 1-4 is not an edge
    with pytest.raises(InvalidMatching):
        Matching(p4, [(0, 99)])


def test_matching_rejects_shared_endpoints(p4):
    with pytest.raises(InvalidMatching):
        Matching(p4, [(0, 2), (1, 2)])


def test_matching_queries(p4):
    m = matching_by_labels(p4, [("2", "3")])
    assert len(m) == 1
    assert m.saturates(p4.vertex_by_label("2"))
    assert not m.saturates(p4.vertex_by_label("1"))
    assert m.partner(p4.vertex_by_label("2")) == p4.vertex_by_label("3")
    assert m.partner(p4.vertex_by_label("1")) is None
    assert m.unsaturated(p4.vertices) == [0, 3]
    assert (2, 1) in m        # endpoint order is normalized
    assert (0, 2) not in m


def test_alternating_path_validation(p4):
    m = matching_by_labels(p4, [("2", "3")])
    path = AlternatingPath((0, 2, 1, 3), m)
    assert path.augmenting
    assert path.edges == {(0, 2), (1, 2), (1, 3)}
    assert not AlternatingPath((0, 2), m).augmenting  # 2 is saturated
    with pytest.raises(InvalidMatching):
        AlternatingPath((0,), m)
    with pytest.raises(InvalidMatching):
        AlternatingPath((0, 3), m)  # not an edge
    empty = Matching(p4, ())
    with pytest.raises(InvalidMatching):
        AlternatingPath((0, 2, 1), empty)  # two non-matching edges in a row


def test_greedy_maximal_follows_the_order(p4):
    m = greedy_maximal_matching(p4, [(1, 2), (0, 2), (1, 3)])
    assert m.edges == {(1, 2)}
    assert is_maximal(p4, m)
    m2 = greedy_maximal_matching(p4, [(0, 2), (1, 2), (1, 3)])
    assert m2.edges == {(0, 2), (1, 3)}


def test_greedy_maximal_requires_a_permutation(p4):
    with pytest.raises(InvalidMatching):
        greedy_maximal_matching(p4, [(0, 2)])
    with pytest.raises(InvalidMatching):
        greedy_maximal_matching(p4, [(0, 2), (0, 2), (1, 2), (1, 3)])


def test_find_augmenting_path_on_the_path_graph(p4):
    m = matching_by_labels(p4, [("2", "3")])
    path = find_augmenting_path(p4, m, 0)
    assert path.vertices == (0, 2, 1, 3)
    bigger = augment(m, path)
    assert len(bigger) == 2
    assert all(bigger.saturates(v) for v in p4.vertices)
    with pytest.raises(SaturatedStart):
        find_augmenting_path(p4, m, p4.vertex_by_label("2"))


def test_augment_rejects_non_augmenting(p4):
    m = matching_by_labels(p4, [("2", "3")])
    with pytest.raises(InvalidMatching):
        augment(m, AlternatingPath((0, 2), m))


def test_maximum_matching_on_fork(fork):
    m = maximum_matching(fork)
    assert len(m) == 2
    seeded = maximum_matching(fork, matching_by_labels(fork, [("b1", "c1")]))
    assert len(seeded) == 2


def test_symmetric_difference_requires_same_graph(p4, fork):
    m1 = matching_by_labels(p4, [("2", "3")])
    m2 = matching_by_labels(fork, [("b1", "c1")])
    with pytest.raises(ForeignMatching):
        symmetric_difference(m1, m2)
    assert symmetric_difference(m1, Matching(p4, ())) == m1.edges


def test_disjoint_cycle_union(c4, p4):
    assert is_disjoint_cycle_union(c4, c4.edges)
    assert not is_disjoint_cycle_union(p4, p4.edges)
    assert is_disjoint_cycle_union(p4, [])  # vacuous


@given(graphs())
def test_maximum_matching_is_maximal_and_stable(g):
    m = maximum_matching(g)
    assert is_maximal(g, m)
    for u in m.unsaturated(g.left):
        assert find_augmenting_path(g, m, u) is None


@given(graphs(), st.randoms(use_true_random=False))
def test_greedy_never_beats_maximum(g, rng):
    order = sorted(g.edges)
    rng.shuffle(order)
    greedy = greedy_maximal_matching(g, order)
    assert is_maximal(g, greedy)
    assert len(greedy) <= len(maximum_matching(g))
    # a maximal matching is at least half the maximum
    assert 2 * len(greedy) >= len(maximum_matching(g))
