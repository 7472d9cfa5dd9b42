"""Maximum-weight deletion sets of at most k edges.

Some optimal solution is empty or meets the heaviest few deletable edges W,
so the search branches on which member of W is taken first (earlier members
of W are then forbidden) and recurses with one edge less. For odd lambda,
W is first cleaned by irrelevant-edge marking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Sequence

from .classify import deletable_edges
from .exceptions import DomainError, InternalInconsistencyError, PreconditionError
from .flow import is_lambda_connected
from .graph import EMPTY, Graph
from .odd import odd_bound, solve_odd_step
from .outcomes import BoundCertificate, DeletionSet, NewIrrelevant


@dataclass(frozen=True)
class WeightedSolution:
    edges: frozenset[int]
    weight: float
    verified: bool

    @property
    def size(self) -> int:
        return len(self.edges)


def candidate_limit(g: Graph, lam: int, k: int) -> int:
    """Size of W: lam*k^2 for digraphs, 2*lam*k^2 for even lambda, and for odd lambda
    the larger of 7*lam*k^3 and the odd certificate bound."""
    if g.directed:
        return lam * k * k
    if lam % 2 == 0:
        return 2 * lam * k * k
    return max(7 * lam * k**3, odd_bound(lam, k))


def _order(weights: Sequence[float], edges) -> list[int]:
    return sorted(edges, key=lambda e: (-weights[e], e))


def heaviest_candidates(
    g: Graph,
    lam: int,
    R: Collection[int],
    limit: int,
    weights: Sequence[float] | None = None,
    removed: Collection[int] = EMPTY,
) -> list[int]:
    """The ``limit`` heaviest deletable edges outside ``R``, heaviest first (ties: lowest id)."""
    weights = _weights(g, weights)
    pool = [e for e in deletable_edges(g, lam, removed) if e not in R]
    return _order(weights, pool)[:limit]


def _weights(g: Graph, weights: Sequence[float] | None) -> Sequence[float]:
    if weights is None:
        if g.weights is None:
            raise PreconditionError("graph carries no weights and none were given")
        return g.weights
    if len(weights) != g.m or any(not w >= 0 for w in weights):
        raise DomainError("weights must be one non-negative number per edge")
    return weights


def _odd_clean(g: Graph, lam: int, kk: int, removed: frozenset[int], R: set[int], weights, limit: int) -> None:
    """Grow R by marking until W is short or holds a kk-edge deletion set."""
    h, keep = g.without(removed)
    back = {e: i for i, e in enumerate(keep)}
    hw = [weights[e] for e in keep]
    for _ in range(g.m + 1):
        W = heaviest_candidates(g, lam, R, limit, weights, removed)
        if len(W) < limit:
            return
        out = solve_odd_step(h, lam, kk, {back[e] for e in R if e in back}, [back[e] for e in W], hw, check=False)
        if isinstance(out, DeletionSet):
            return
        if isinstance(out, BoundCertificate):
            raise InternalInconsistencyError(f"certificate with {len(W)} >= {limit} candidates")
        assert isinstance(out, NewIrrelevant)
        R.add(keep[out.edge])
    raise InternalInconsistencyError("marking loop did not terminate")


def solve_weighted(
    g: Graph, lam: int, k: int, weights: Sequence[float] | None = None
) -> WeightedSolution:
    """Heaviest set of at most ``k`` edges whose removal keeps ``g`` lambda-connected."""
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    weights = _weights(g, weights)
    if not is_lambda_connected(g, lam):
        raise PreconditionError(f"input graph is not {lam}-edge-connected")
    odd = not g.directed and lam % 2 == 1
    best: list = [0.0, frozenset()]

    def node(removed: frozenset[int], kk: int, forbidden: frozenset[int], acc: float) -> None:
        if acc > best[0]:
            best[0], best[1] = acc, removed
        if kk == 0:
            return
        limit = candidate_limit(g, lam, kk)
        R = set(forbidden)
        if odd:
            _odd_clean(g, lam, kk, removed, R, weights, limit)
        W = heaviest_candidates(g, lam, R, limit, weights, removed)
        floor = weights[W[-1]] if len(W) == limit else 0.0
        for t, e in enumerate(W):
            rest = [weights[f] for f in W[t + 1 : t + kk]]
            ub = acc + weights[e] + sum(rest) + floor * (kk - 1 - len(rest))
            if ub <= best[0]:
                break
            node(removed | {e}, kk - 1, frozenset(R) | set(W[:t]), acc + weights[e])

    node(frozenset(), k, frozenset(), 0.0)
    edges = best[1]
    ok = is_lambda_connected(g, lam, edges)
    if not ok:
        raise InternalInconsistencyError(f"weighted solution {sorted(edges)} is not a deletion set")
    return WeightedSolution(edges, float(sum(weights[e] for e in edges)), ok)
