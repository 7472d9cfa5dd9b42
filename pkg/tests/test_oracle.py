import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lambda_ecs import DomainError, GenerationError, Graph, gen_ham_union, is_lambda_connected, oracle_max_deletion
from lambda_ecs.oracle import brute_connectivity, oracle_max_weight, transitive_closure

from conftest import brute_lambda, brute_max_deletion, cycle
from test_graph import small_graphs


@st.composite
def tiny_instances(draw):
    directed = draw(st.booleans())
    lam = draw(st.integers(1, 2))
    try:
        g = gen_ham_union(draw(st.integers(4, 7)), lam, draw(st.integers(0, 5)), draw(st.integers(0, 10**6)), directed)
    except GenerationError:
        return None
    return g, lam


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_n=6, max_m=12))
def test_connectivity_matches_plain_count(g):
    assert brute_connectivity(g) == brute_lambda(g)


@settings(max_examples=50, deadline=None)
@given(tiny_instances())
def test_pruned_equals_unpruned_and_plain(inst):
    if inst is None:
        return
    g, lam = inst
    a = oracle_max_deletion(g, lam, 3)
    b = oracle_max_deletion(g, lam, 3, prune=False)
    assert a == b
    assert a[0] == brute_max_deletion(g, lam, 3)
    if a[0] > 0:
        assert is_lambda_connected(g, lam, a[1])
        # lexicographically first witness of that size
        first = next(c for c in itertools.combinations(range(g.m), a[0]) if is_lambda_connected(g, lam, c))
        assert a[1] == first


@settings(max_examples=40, deadline=None)
@given(tiny_instances(), st.integers(0, 2**31))
def test_weight_oracle_matches_enumeration(inst, seed):
    if inst is None:
        return
    g, lam = inst
    w = np.random.default_rng(seed).integers(0, 10, size=g.m).tolist()
    best, wit = oracle_max_weight(g, lam, 2, weights=w)
    plain = max(
        sum(w[e] for e in c)
        for r in range(3)
        for c in itertools.combinations(range(g.m), r)
        if is_lambda_connected(g, lam, c)
    )
    assert best == plain
    assert is_lambda_connected(g, lam, wit)


def test_disconnected_and_guard():
    assert oracle_max_deletion(cycle(5), 3, 2) == (-1, None)
    assert oracle_max_deletion(cycle(5), 2, 2) == (0, ())
    big = cycle(13)
    with pytest.raises(DomainError):
        oracle_max_deletion(big, 1, 1)
    assert oracle_max_deletion(big, 1, 2, force=True)[0] == 1


def test_forbidden_edges():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert oracle_max_deletion(g, 1, 3)[0] == 2
    assert oracle_max_deletion(g, 1, 3, forbidden=[4, 0, 1])[0] == 1


def test_closure():
    g = Graph(3, [(0, 1), (1, 2)], True)
    r = transitive_closure(g)
    assert r[0, 2] and not r[2, 0]
    assert not transitive_closure(g, [1])[0, 2]
