"""Unit-capacity max-flow on masked multigraphs.

Every edge has capacity one. Undirected edges are a pair of opposite arcs with
a shared unit, so a returned path never uses an edge in both directions.
Several sources (sinks) behave like one super-source (super-sink): they are
seeded into the BFS together and no augmenting path passes through them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Collection, Iterable

from .exceptions import DomainError
from .graph import EMPTY, Cut, Graph


@dataclass(frozen=True)
class PathSystem:
    """Edge-disjoint source-to-sink paths, each a tuple of edge ids in walk order."""

    paths: tuple[tuple[int, ...], ...]

    @property
    def value(self) -> int:
        return len(self.paths)

    def edge_set(self) -> frozenset[int]:
        return frozenset(e for p in self.paths for e in p)


def _as_bits(vertices: Iterable[int], n: int, what: str) -> int:
    bits = 0
    for v in vertices:
        if not 0 <= v < n:
            raise DomainError(f"{what} vertex {v} outside 0..{n - 1}")
        bits |= 1 << v
    if not bits:
        raise DomainError(f"{what} set is empty")
    return bits


def _residual(g: Graph, removed: Collection[int]) -> list[int]:
    res = list(g.arc_table[2])
    for e in removed:
        res[2 * e] = res[2 * e + 1] = 0
    return res


def _augment(g: Graph, res: list[int], src: int, snk: int, cap_limit: int | None) -> int:
    """Push shortest augmenting paths until none is left or ``cap_limit`` is reached."""
    head, adj, _ = g.arc_table
    n = g.n
    starts = [v for v in range(n) if src >> v & 1]
    value = 0
    while cap_limit is None or value < cap_limit:
        parent = [-1] * n
        seen = src
        queue = deque(starts)
        hit = -1
        while queue and hit < 0:
            x = queue.popleft()
            for a in adj[x]:
                if res[a]:
                    y = head[a]
                    if not seen >> y & 1:
                        seen |= 1 << y
                        parent[y] = a
                        if snk >> y & 1:
                            hit = y
                            break
                        queue.append(y)
        if hit < 0:
            break
        y = hit
        while not src >> y & 1:
            a = parent[y]
            res[a] -= 1
            res[a ^ 1] += 1
            y = head[a ^ 1]
        value += 1
    return value


def _reach(g: Graph, res: list[int], src: int) -> int:
    head, adj, _ = g.arc_table
    seen = src
    queue = deque(v for v in range(g.n) if src >> v & 1)
    while queue:
        x = queue.popleft()
        for a in adj[x]:
            if res[a] and not seen >> head[a] & 1:
                seen |= 1 << head[a]
                queue.append(head[a])
    return seen


def _co_reach(g: Graph, res: list[int], snk: int) -> int:
    """Vertices that can still reach a sink in the residual network."""
    head, adj, _ = g.arc_table
    seen = snk
    queue = deque(v for v in range(g.n) if snk >> v & 1)
    while queue:
        y = queue.popleft()
        for a in adj[y]:
            # arc a leaves y; its twin a^1 enters y from head[a]
            if res[a ^ 1] and not seen >> head[a] & 1:
                seen |= 1 << head[a]
                queue.append(head[a])
    return seen


def _strip_paths(g: Graph, res: list[int], src: int, snk: int) -> tuple[tuple[int, ...], ...]:
    out: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        if g.directed:
            f = res[2 * e + 1]  # the reverse residual equals the flow
        else:
            f = (res[2 * e + 1] - res[2 * e]) // 2
        if f > 0:
            out[u].append((e, v))
        elif f < 0:
            out[v].append((e, u))
    for lst in out:
        lst.sort(reverse=True)  # pop() yields the lowest edge id
    paths = []
    for s in range(g.n):
        if not src >> s & 1:
            continue
        while out[s]:
            walk: list[tuple[int, int]] = []  # (edge, vertex reached)
            pos = {s: 0}
            x = s
            while not snk >> x & 1:
                e, y = out[x].pop()
                walk.append((e, y))
                if y in pos:
                    # drop the flow cycle closed by this step
                    cut = pos[y]
                    for _, z in walk[cut:-1]:
                        del pos[z]
                    del walk[cut:]
                x = y
                pos.setdefault(x, len(walk))
            paths.append(tuple(e for e, _ in walk))
    return tuple(paths)


def _prepare(g: Graph, sources, sinks) -> tuple[int, int]:
    src = _as_bits(sources, g.n, "source")
    snk = _as_bits(sinks, g.n, "sink")
    if src & snk:
        raise DomainError("source and sink sets overlap")
    return src, snk


def max_flow(
    g: Graph,
    sources: Iterable[int],
    sinks: Iterable[int],
    removed: Collection[int] = EMPTY,
    cap_limit: int | None = None,
) -> tuple[int, PathSystem]:
    """Maximum number of edge-disjoint paths from ``sources`` to ``sinks`` in ``g - removed``.

    With ``cap_limit`` the search stops once that many paths are found.
    """
    src, snk = _prepare(g, sources, sinks)
    res = _residual(g, removed)
    value = _augment(g, res, src, snk, cap_limit)
    paths = _strip_paths(g, res, src, snk)
    if len(paths) != value:
        raise AssertionError(f"path stripping recovered {len(paths)} paths for flow value {value}")
    return value, PathSystem(paths)


def flow_value(
    g: Graph, sources: Iterable[int], sinks: Iterable[int], removed: Collection[int] = EMPTY, cap_limit: int | None = None
) -> int:
    """Like :func:`max_flow` but skips path extraction."""
    src, snk = _prepare(g, sources, sinks)
    return _augment(g, _residual(g, removed), src, snk, cap_limit)


def min_cut_side(
    g: Graph,
    sources: Iterable[int],
    sinks: Iterable[int],
    removed: Collection[int] = EMPTY,
    minimal: bool = True,
) -> Cut:
    """Side ``X`` of a minimum cut with sources inside and sinks outside.

    ``minimal=True`` gives the unique inclusion-minimal side (residual
    reachability from the sources); otherwise the inclusion-maximal one.
    """
    src, snk = _prepare(g, sources, sinks)
    res = _residual(g, removed)
    _augment(g, res, src, snk, None)
    if minimal:
        side = _reach(g, res, src)
    else:
        side = ((1 << g.n) - 1) & ~_co_reach(g, res, snk)
    return Cut(side, g.n)


def min_cut(
    g: Graph, sources: Iterable[int], sinks: Iterable[int], removed: Collection[int] = EMPTY
) -> tuple[int, int]:
    """(value, minimal side bitset) in one flow computation."""
    src, snk = _prepare(g, sources, sinks)
    res = _residual(g, removed)
    value = _augment(g, res, src, snk, None)
    return value, _reach(g, res, src)


def edge_connectivity(g: Graph, removed: Collection[int] = EMPTY) -> int:
    if g.n < 2:
        raise DomainError("edge connectivity needs at least two vertices")
    best = None
    for t in range(1, g.n):
        vals = [flow_value(g, [0], [t], removed, best)]
        if g.directed:
            vals.append(flow_value(g, [t], [0], removed, best))
        low = min(vals)
        best = low if best is None else min(best, low)
        if best == 0:
            break
    return best


def is_lambda_connected(g: Graph, lam: int, removed: Collection[int] = EMPTY) -> bool:
    """Whether ``g - removed`` has ``lam`` edge-disjoint paths between every ordered pair."""
    if lam < 1:
        raise DomainError(f"lambda must be >= 1, got {lam}")
    if g.n < 2:
        raise DomainError("connectivity needs at least two vertices")
    for t in range(1, g.n):
        if flow_value(g, [0], [t], removed, lam) < lam:
            return False
        if g.directed and flow_value(g, [t], [0], removed, lam) < lam:
            return False
    return True


def pair_connected(g: Graph, s: int, t: int, lam: int, removed: Collection[int] = EMPTY) -> bool:
    """At least ``lam`` edge-disjoint ``s``-to-``t`` paths in ``g - removed``."""
    return flow_value(g, [s], [t], removed, lam) >= lam
