"""Greedy maximal deletion and witness extraction for directed graphs.

The even-lambda undirected solver reuses everything here; the two cases differ
only in the extraction threshold, the witness count and which witnesses are
kept.
"""

from __future__ import annotations

from typing import Callable, Collection, Iterable, Sequence

from .chain import witness_edges
from .classify import deletable_edges, is_deletable, newly_undeletable
from .exceptions import DomainError, InternalInconsistencyError, PreconditionError
from .flow import is_lambda_connected
from .graph import EMPTY, Graph
from .outcomes import BoundCertificate, DeletionSet


def _allowed(g: Graph, forbidden: Collection[int], restrict: Iterable[int] | None) -> list[int]:
    keep = None if restrict is None else set(restrict)
    return [e for e in range(g.m) if e not in forbidden and (keep is None or e in keep)]


def greedy_maximal(
    g: Graph,
    lam: int,
    removed: Collection[int] = EMPTY,
    forbidden: Collection[int] = EMPTY,
    stop_at: int | None = None,
    restrict: Iterable[int] | None = None,
) -> tuple[list[int], list[frozenset[int]]]:
    """Scan edges by id and delete each one that keeps the running graph lambda-connected.

    Only edges outside ``forbidden`` (and inside ``restrict`` when given) are
    considered, for deletion and for the newly-undeletable sets alike. Stops
    once ``stop_at`` edges are taken; otherwise the second result lists, for
    step ``i``, the edges deletable before ``F[i]`` went and undeletable after.
    """
    removed = frozenset(removed)
    allowed = [e for e in _allowed(g, forbidden, restrict) if e not in removed]
    F: list[int] = []
    for e in allowed:
        if is_deletable(g, e, lam, removed | set(F)):
            F.append(e)
            if stop_at is not None and len(F) >= stop_at:
                return F, []
    steps = []
    for i, f in enumerate(F):
        before = removed | set(F[:i])
        steps.append(newly_undeletable(g, lam, f, before, restrict=allowed))
    return F, steps


def _verify(g: Graph, lam: int, edges: Iterable[int], removed: Collection[int] = EMPTY) -> bool:
    return is_lambda_connected(g, lam, frozenset(removed) | set(edges))


def _extract(
    g: Graph,
    lam: int,
    k: int,
    e_star: int,
    D: Collection[int],
    removed: Collection[int],
    ell: int,
    pick: Callable[[Sequence[int]], Sequence[int]],
) -> DeletionSet:
    if k == 0:
        return DeletionSet(frozenset(), lam, True, "extraction")
    ws = witness_edges(g, lam, e_star, ell, removed, D=D)
    chosen = frozenset(pick(ws.edges))
    # checking inside g - removed is the stronger claim; g itself follows
    if not _verify(g, lam, chosen, removed):
        raise InternalInconsistencyError(f"extracted witnesses {sorted(chosen)} do not form a deletion set")
    return DeletionSet(chosen, lam, True, "extraction")


def extract_from_big_D(
    g: Graph, lam: int, k: int, e_star: int, D: Collection[int], removed: Collection[int] = EMPTY
) -> DeletionSet:
    """k witnesses of a large D(e*) in a digraph; they always form a deletion set."""
    if len(D) < k * lam:
        raise PreconditionError(f"|D| = {len(D)} is below k * lambda = {k * lam}")
    return _extract(g, lam, k, e_star, D, removed, k, lambda z: z)


def solve_by_extraction(
    g: Graph,
    lam: int,
    k: int,
    mult: int,
    pick: Callable[[Sequence[int]], Sequence[int]],
    restrict: Iterable[int] | None = None,
) -> DeletionSet | BoundCertificate:
    """Shared body of the directed and even solvers.

    ``mult`` scales both the extraction threshold (``mult * k * lam``) and the
    witness count (``mult * k``); the bound is ``mult * lam * k**2``.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if not is_lambda_connected(g, lam):
        raise PreconditionError(f"input graph is not {lam}-edge-connected")
    F, steps = greedy_maximal(g, lam, stop_at=k, restrict=restrict)
    if len(F) >= k:
        return DeletionSet(frozenset(F[:k]), lam, _verify(g, lam, F[:k]), "greedy")
    for i, D in enumerate(steps):
        if len(D) >= mult * k * lam:
            return _extract(g, lam, k, F[i], D, F[:i], mult * k, pick)
    bound = mult * lam * k * k
    candidates = frozenset(deletable_edges(g, lam, restrict=restrict))
    if len(candidates) > bound:
        raise InternalInconsistencyError(f"{len(candidates)} deletable edges exceed the bound {bound}")
    return BoundCertificate(candidates, bound, tuple(F), tuple(len(D) for D in steps))


def solve_directed(g: Graph, lam: int, k: int, restrict: Iterable[int] | None = None) -> DeletionSet | BoundCertificate:
    if not g.directed:
        raise DomainError("solve_directed needs a directed graph")
    return solve_by_extraction(g, lam, k, 1, lambda z: z, restrict)
