import pytest

from lambda_ecs import (
    Cut,
    Graph,
    InsufficientWitnessesError,
    PreconditionError,
    build_chain,
    gen_ham_union,
    newly_undeletable,
    uncross_pair,
    witness_edges,
)
from lambda_ecs.chain import chain_violations
from lambda_ecs.classify import deletable_edges
from lambda_ecs.graph import crosses, cut_size

from conftest import cycle, delta


def chain_cases(limit, max_n=7):
    """(g, lam, e*, D, ell) with |D(e*)| >= ell * lam, from cycles and ham unions."""
    out = []
    for n in range(4, 9):
        out.append((cycle(n), 1, 0))
        both = [(i, (i + 1) % n) for i in range(n)] + [((i + 1) % n, i) for i in range(n)]
        out.append((Graph(n, both, True), 1, 0))
    seed = 0
    while len(out) < limit * 3 and seed < 4000:
        directed = seed % 2 == 0
        lam = 1 + seed % 3
        n = 4 + seed % (max_n - 3)
        seed += 1
        try:
            g = gen_ham_union(n, lam, seed % 3, seed, directed)
        except Exception:
            continue
        for e in deletable_edges(g, lam)[:2]:
            out.append((g, lam, e))
    cases = []
    for g, lam, e in out:
        D = newly_undeletable(g, lam, e)
        ell = len(D) // lam
        if ell >= 1:
            cases.append((g, lam, e, D, min(ell, 6)))
        if len(cases) >= limit:
            break
    return cases


def test_cycle_chain():
    g = cycle(6)
    ws = witness_edges(g, 1, 0, 5)
    assert (ws.u_star, ws.v_star) == (0, 1)
    assert ws.edges == (5, 4, 3, 2, 1)
    chain = build_chain(g, 1, ws)
    assert [len(c) for c in chain.cuts] == [1, 2, 3, 4, 5]
    assert chain_violations(g, 1, chain) == []


def test_insufficient_witnesses():
    g = cycle(5)
    with pytest.raises(InsufficientWitnessesError):
        witness_edges(g, 1, 0, 5)


@pytest.mark.parametrize("case", range(40))
def test_chain_invariants_and_special_edges(case, _cases=chain_cases(40)):
    g, lam, e, D, ell = _cases[case]
    ws = witness_edges(g, lam, e, ell, D=D)
    assert set(ws.edges) <= D and len(ws.edges) == ell
    chain = build_chain(g, lam, ws)
    assert chain_violations(g, lam, chain) == []
    u, v = ws.u_star, ws.v_star
    full = (1 << g.n) - 1
    for x in range(1, full):
        if x >> u & 1 and not x >> v & 1 and delta(g, x, {e}) == lam:
            assert sum(crosses(g, w, x) for w in ws.edges) <= 1


def test_uncross_pair_crossing():
    # G* is the 6-cycle 0-1-3-5-4-2-0; edge 0 is e* = (0, 5)
    g = Graph(6, [(0, 5), (0, 1), (1, 3), (3, 5), (5, 4), (4, 2), (2, 0)])
    x, y = Cut.of([0, 1], 6), Cut.of([0, 2], 6)
    hi, lo = uncross_pair(g, 2, x, y, 2, 5, {0}, (0, 5))
    assert hi == x | y and lo == x & y
    assert lo < hi and lo <= y and x <= hi
    for c in (hi, lo):
        assert cut_size(g, c, {0}) == 2
    # nested input comes back unchanged
    small = Cut.of([0], 6)
    assert uncross_pair(g, 2, small, hi, 6, 2, {0}, (0, 5)) == (hi, small)


def test_uncross_pair_rejects_non_tight():
    g = cycle(6)
    with pytest.raises(PreconditionError):
        uncross_pair(g, 1, Cut.of([0, 5], 6), Cut.of([0, 2], 6), 4, 5, {0}, (0, 1))
