"""Brute-force ground truth that shares no code with the flow-based solvers.

Every cut of the graph is materialized as a column of a crossing matrix, so
connectivity after removing a set S is ``min(base - cross[S].sum(0)) >= lam``.
Only meant for small graphs.
"""

from __future__ import annotations

from typing import Collection, Sequence

import numpy as np

from .exceptions import DomainError
from .graph import Graph

MAX_N = 12
MAX_M = 40


def _guard(g: Graph, force: bool) -> None:
    if not force and (g.n > MAX_N or g.m > MAX_M):
        raise DomainError(f"oracle limited to n <= {MAX_N}, m <= {MAX_M} (got n={g.n}, m={g.m}); pass force=True")


def cut_sides(n: int, directed: bool) -> np.ndarray:
    """All cut sides as bitsets: every non-empty proper subset when directed,
    otherwise only the subsets containing vertex 0 (one per undirected cut)."""
    full = (1 << n) - 1
    if directed:
        return np.arange(1, full, dtype=np.int64)
    return np.arange(1, full, 2, dtype=np.int64)


def crossing_matrix(g: Graph, sides: np.ndarray | None = None) -> np.ndarray:
    """Boolean ``(m, cuts)`` matrix: does edge e cross cut c."""
    if sides is None:
        sides = cut_sides(g.n, g.directed)
    out = np.zeros((g.m, len(sides)), dtype=bool)
    for e, (u, v) in enumerate(g.edges):
        tu = (sides >> u) & 1
        tv = (sides >> v) & 1
        out[e] = (tu == 1) & (tv == 0) if g.directed else tu != tv
    return out


def cut_profile(g: Graph, removed: Collection[int] = ()) -> tuple[np.ndarray, np.ndarray]:
    """(sides, sizes) of every cut of ``g - removed``."""
    sides = cut_sides(g.n, g.directed)
    cross = crossing_matrix(g, sides)
    keep = np.ones(g.m, dtype=bool)
    keep[list(removed)] = False
    return sides, cross[keep].sum(axis=0)


def brute_connectivity(g: Graph, removed: Collection[int] = ()) -> int:
    if g.n < 2:
        raise DomainError("connectivity needs at least two vertices")
    return int(cut_profile(g, removed)[1].min())


def _setup(g: Graph, forbidden: Collection[int]):
    cross = crossing_matrix(g).astype(np.int16)
    base = cross.sum(axis=0)
    allowed = np.array([e for e in range(g.m) if e not in set(forbidden)], dtype=np.int64)
    return cross, base, allowed


def oracle_max_deletion(
    g: Graph,
    lam: int,
    k_max: int,
    forbidden: Collection[int] = (),
    prune: bool = True,
    force: bool = False,
) -> tuple[int, tuple[int, ...] | None]:
    """Largest ``s <= k_max`` such that some s-subset of the allowed edges is a deletion set.

    The witness is the lexicographically first such subset. Returns
    ``(-1, None)`` when the graph itself is not lambda-connected. With
    ``prune=False`` supersets of failing sets are still explored.
    """
    _guard(g, force)
    if g.n < 2:
        raise DomainError("oracle needs at least two vertices")
    cross, base, allowed = _setup(g, forbidden)
    if base.min() < lam:
        return -1, None
    best = [0, ()]

    def rec(start: int, chosen: tuple[int, ...], vec: np.ndarray) -> bool:
        # True once a valid k_max-set is known; unpruned chains can be invalid
        if len(chosen) == k_max:
            return best[0] == k_max
        rest = allowed[start:]
        if not len(rest):
            return False
        child = vec[None, :] - cross[rest]
        valid = child.min(axis=1) >= lam
        for pos in range(len(rest)):
            good = bool(valid[pos])
            if not good and prune:
                continue
            nxt = chosen + (int(rest[pos]),)
            if good and len(nxt) > best[0]:
                best[0], best[1] = len(nxt), nxt
                if len(nxt) == k_max:
                    return True
            if rec(start + pos + 1, nxt, child[pos]):
                return True
        return False

    rec(0, (), base)
    return best[0], best[1]


def oracle_max_weight(
    g: Graph,
    lam: int,
    k: int,
    weights: Sequence[float] | None = None,
    forbidden: Collection[int] = (),
    force: bool = False,
) -> tuple[float, tuple[int, ...] | None]:
    """Heaviest deletion set of at most ``k`` allowed edges (ties: lexicographically first)."""
    _guard(g, force)
    if weights is None:
        if g.weights is None:
            raise DomainError("no weights given")
        weights = g.weights
    w = np.asarray(weights, dtype=float)
    cross, base, allowed = _setup(g, forbidden)
    if base.min() < lam:
        return float("-inf"), None
    best = [0.0, ()]

    def rec(start: int, chosen: tuple[int, ...], vec: np.ndarray, acc: float) -> None:
        if len(chosen) == k:
            return
        rest = allowed[start:]
        if not len(rest):
            return
        child = vec[None, :] - cross[rest]
        valid = child.min(axis=1) >= lam
        for pos in np.flatnonzero(valid):
            e = int(rest[pos])
            total = acc + w[e]
            nxt = chosen + (e,)
            if total > best[0]:
                best[0], best[1] = total, nxt
            rec(start + int(pos) + 1, nxt, child[pos], total)

    rec(0, (), base, 0.0)
    return float(best[0]), tuple(sorted(best[1]))


def transitive_closure(g: Graph, removed: Collection[int] = ()) -> np.ndarray:
    """Boolean reachability matrix (reflexive), by Warshall's algorithm."""
    reach = np.eye(g.n, dtype=bool)
    gone = set(removed)
    for e, (u, v) in enumerate(g.edges):
        if e not in gone:
            reach[u, v] = True
            if not g.directed:
                reach[v, u] = True
    for mid in range(g.n):
        reach |= reach[:, mid : mid + 1] & reach[mid : mid + 1, :]
    return reach


def oracle_reachability_equivalent(g: Graph, removed: Collection[int]) -> bool:
    return bool(np.array_equal(transitive_closure(g), transitive_closure(g, removed)))


def oracle_max_equivalent_deletion(g: Graph, k_max: int, force: bool = False) -> tuple[int, tuple[int, ...] | None]:
    """Largest ``s <= k_max`` arcs removable without changing reachability (subset-closed, so pruned)."""
    _guard(g, force)
    target = transitive_closure(g)
    best = [0, ()]

    def rec(start: int, chosen: tuple[int, ...]) -> bool:
        if len(chosen) == k_max:
            return True
        for e in range(start, g.m):
            nxt = chosen + (e,)
            if not np.array_equal(transitive_closure(g, nxt), target):
                continue
            if len(nxt) > best[0]:
                best[0], best[1] = len(nxt), nxt
                if len(nxt) == k_max:
                    return True
            if rec(e + 1, nxt):
                return True
        return False

    rec(0, ())
    return best[0], best[1]
