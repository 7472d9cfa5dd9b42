import pytest
from hypothesis import given, settings, strategies as st

from lambda_ecs import PreconditionError, classify_edges, gen_ham_union, is_lambda_connected, newly_undeletable
from lambda_ecs.classify import deletable_edges
from lambda_ecs.graph import crosses

from conftest import brute_ok, cycle, delta, sides


@st.composite
def connected_instances(draw):
    directed = draw(st.booleans())
    n = draw(st.integers(4, 7))
    lam = draw(st.integers(1, 3 if directed else 3))
    seed = draw(st.integers(0, 10**6))
    extra = draw(st.integers(0, 5))
    try:
        g = gen_ham_union(n, lam, extra, seed, directed)
    except Exception:
        return None
    return g, lam


@settings(max_examples=60, deadline=None)
@given(connected_instances())
def test_classification_sound_and_matches_tight_cuts(inst):
    if inst is None:
        return
    g, lam = inst
    c = classify_edges(g, lam)
    assert c.deletable | c.undeletable == set(range(g.m))
    assert not c.deletable & c.undeletable
    tight = [x for x in sides(g.n, g.directed) if delta(g, x) == lam]
    for e in range(g.m):
        assert (e in c.deletable) == brute_ok(g, lam, [e])
        # undeletable exactly when e crosses some lambda-cut
        assert (e in c.undeletable) == any(crosses(g, e, x) for x in tight)


@settings(max_examples=40, deadline=None)
@given(connected_instances())
def test_D_inside_deletable(inst):
    if inst is None:
        return
    g, lam = inst
    dels = deletable_edges(g, lam)
    for e in dels[:3]:
        D = newly_undeletable(g, lam, e)
        assert D <= set(dels)
        for f in D:
            assert not is_lambda_connected(g, lam, {e, f})


def test_cycle_all_deletable_at_one():
    g = cycle(5)
    assert classify_edges(g, 1).deletable == set(range(5))
    assert classify_edges(g, 2).deletable == set()
    assert newly_undeletable(g, 1, 0) == {1, 2, 3, 4}


def test_restrict_and_errors():
    g = cycle(5)
    c = classify_edges(g, 1, restrict=[1, 2])
    assert c.deletable == {1, 2} and c.restricted_to == {1, 2}
    with pytest.raises(PreconditionError):
        classify_edges(g, 3)
    with pytest.raises(PreconditionError):
        newly_undeletable(g, 1, 0, removed={1})
