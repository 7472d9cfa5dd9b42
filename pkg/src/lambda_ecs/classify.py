"""Deletable / undeletable edge classification and the newly-undeletable set D(e*)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Iterable

from .exceptions import PreconditionError
from .flow import is_lambda_connected, pair_connected
from .graph import EMPTY, Graph


@dataclass(frozen=True)
class Classification:
    deletable: frozenset[int]
    undeletable: frozenset[int]
    restricted_to: frozenset[int] | None = None


def is_deletable(g: Graph, e: int, lam: int, removed: Collection[int] = EMPTY) -> bool:
    """Whether ``g - removed - e`` stays ``lam``-connected, assuming ``g - removed`` is.

    Removing ``e`` only lowers cuts that ``e`` crosses, and every such cut
    separates its endpoints in the crossing direction, so a single
    endpoint-pair flow decides it.
    """
    u, v = g.edges[e]
    return pair_connected(g, u, v, lam, frozenset(removed) | {e})


def _require_connected(g: Graph, lam: int, removed: Collection[int]) -> None:
    if not is_lambda_connected(g, lam, removed):
        raise PreconditionError(f"graph (minus {len(removed)} masked edges) is not {lam}-edge-connected")


def _scope(g: Graph, removed: Collection[int], restrict: Iterable[int] | None) -> list[int]:
    if restrict is None:
        return list(g.edge_ids(removed))
    return sorted(e for e in set(restrict) if e not in removed)


def classify_edges(
    g: Graph,
    lam: int,
    removed: Collection[int] = EMPTY,
    restrict: Iterable[int] | None = None,
    check: bool = True,
) -> Classification:
    removed = frozenset(removed)
    if check:
        _require_connected(g, lam, removed)
    scope = _scope(g, removed, restrict)
    deletable = frozenset(e for e in scope if is_deletable(g, e, lam, removed))
    return Classification(
        deletable,
        frozenset(scope) - deletable,
        None if restrict is None else frozenset(restrict),
    )


def deletable_edges(g: Graph, lam: int, removed: Collection[int] = EMPTY, restrict: Iterable[int] | None = None) -> list[int]:
    """Sorted deletable edges of a graph already known to be ``lam``-connected."""
    removed = frozenset(removed)
    return [e for e in _scope(g, removed, restrict) if is_deletable(g, e, lam, removed)]


def newly_undeletable(
    g: Graph,
    lam: int,
    e_star: int,
    removed: Collection[int] = EMPTY,
    restrict: Iterable[int] | None = None,
    deletable: Iterable[int] | None = None,
) -> frozenset[int]:
    """D(e*): edges deletable in ``g - removed`` that become undeletable once ``e_star`` is gone.

    ``deletable`` may pass a precomputed deletable set of ``g - removed``.
    """
    removed = frozenset(removed)
    if e_star in removed or not is_deletable(g, e_star, lam, removed):
        raise PreconditionError(f"edge {e_star} is not deletable")
    if deletable is None:
        deletable = deletable_edges(g, lam, removed, restrict)
    elif restrict is not None:
        keep = set(restrict)
        deletable = [e for e in deletable if e in keep]
    after = removed | {e_star}
    return frozenset(e for e in deletable if e != e_star and not is_deletable(g, e, lam, after))
