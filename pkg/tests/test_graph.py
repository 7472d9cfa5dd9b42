import pytest
from hypothesis import given, settings, strategies as st

from lambda_ecs import Cut, DomainError, Graph, crossing_edges, cut_size, submodularity_check
from lambda_ecs.graph import crosses

from conftest import cycle, delta, sides


@st.composite
def small_graphs(draw, max_n=6, max_m=12, directed=None):
    n = draw(st.integers(2, max_n))
    if directed is None:
        directed = draw(st.booleans())
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(pair, min_size=1, max_size=max_m))
    return Graph(n, edges, directed)


def test_rejects_bad_edges():
    with pytest.raises(DomainError):
        Graph(3, [(0, 0)])
    with pytest.raises(DomainError):
        Graph(3, [(0, 3)])
    with pytest.raises(DomainError):
        Graph(3, [(0, 1)], weights=[1.0, 2.0])
    with pytest.raises(DomainError):
        Graph(3, [(0, 1)], weights=[-1.0])


def test_cut_validation():
    with pytest.raises(DomainError):
        Cut(0, 3)
    with pytest.raises(DomainError):
        Cut(0b111, 3)
    c = Cut.of([0, 2], 4)
    assert c.vertices == {0, 2}
    assert 2 in c and 1 not in c
    assert c.complement().vertices == {1, 3}
    assert Cut.of([0], 4) < c and not c < c and c <= c


def test_cycle_cuts():
    g = cycle(5)
    assert cut_size(g, Cut.of([0], 5)) == 2
    assert cut_size(g, Cut.of([0, 1], 5), removed={0}) == 2
    assert crossing_edges(g, Cut.of([0, 1], 5)) == {1, 4}


def test_directed_counts_leaving_edges():
    g = Graph(3, [(0, 1), (1, 0), (1, 2)], True)
    assert cut_size(g, Cut.of([0], 3)) == 1
    assert cut_size(g, Cut.of([1], 3)) == 2


def test_without_keeps_id_map():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)], weights=[1, 2, 3])
    h, keep = g.without({1})
    assert keep == [0, 2]
    assert h.edges == ((0, 1), (2, 3)) and h.weights == (1.0, 3.0)


@settings(max_examples=60, deadline=None)
@given(small_graphs(), st.data())
def test_mask_additivity(g, data):
    mask = data.draw(st.sets(st.integers(0, g.m - 1)))
    for x in sides(g.n, g.directed):
        masked_crossing = sum(1 for e in mask if crosses(g, e, x))
        assert cut_size(g, x, mask) + masked_crossing == cut_size(g, x)
        assert cut_size(g, x) == delta(g, x)


@settings(max_examples=60, deadline=None)
@given(small_graphs(), st.data())
def test_crossing_stable_under_mask(g, data):
    mask = data.draw(st.sets(st.integers(0, g.m - 1)))
    for x in sides(g.n, g.directed):
        assert crossing_edges(g, x, mask) == crossing_edges(g, x) - mask


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=6))
def test_submodularity_exhaustive(g):
    full = (1 << g.n) - 1
    for x in range(1, full):
        for y in range(1, full):
            if x & y and (x | y) != full:
                assert submodularity_check(g, x, y)


def test_submodularity_rejects_degenerate():
    g = cycle(4)
    with pytest.raises(DomainError):
        submodularity_check(g, 0b0011, 0b1100)
