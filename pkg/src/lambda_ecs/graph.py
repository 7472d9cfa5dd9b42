"""Multigraph with stable edge identities, vertex-bitset cuts and cut evaluation.

Vertices are ``0..n-1``. An edge id is the position of the edge in
``Graph.edges``; removing edges never renumbers anything, callers pass the
set of removed ids (a *mask*) to every operation instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Collection, Iterable, Iterator, Sequence

from .exceptions import DomainError

EMPTY: frozenset[int] = frozenset()


@dataclass(frozen=True)
class Graph:
    """Directed or undirected multigraph. Parallel edges are distinct edges."""

    n: int
    edges: tuple[tuple[int, int], ...]
    directed: bool = False
    weights: tuple[float, ...] | None = None

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 1:
            raise DomainError(f"graph needs at least one vertex, got n={self.n}")
        for idx, (u, v) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DomainError(f"edge {idx} ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise DomainError(f"edge {idx} is a self-loop on vertex {u}")
        if self.weights is not None:
            weights = tuple(float(w) for w in self.weights)
            if len(weights) != len(edges):
                raise DomainError(f"{len(weights)} weights given for {len(edges)} edges")
            for idx, w in enumerate(weights):
                if not w >= 0:
                    raise DomainError(f"edge {idx} has weight {w}; weights must be >= 0")
            object.__setattr__(self, "weights", weights)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def weighted(self) -> bool:
        return self.weights is not None

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    def weight(self, e: int) -> float:
        return 1.0 if self.weights is None else self.weights[e]

    def total_weight(self, es: Iterable[int]) -> float:
        return sum(self.weight(e) for e in es)

    def edge_ids(self, removed: Collection[int] = EMPTY) -> Iterator[int]:
        return (e for e in range(self.m) if e not in removed)

    def vertex_bits(self, es: Iterable[int]) -> int:
        """Bitset of all endpoints of the given edges."""
        bits = 0
        for e in es:
            u, v = self.edges[e]
            bits |= (1 << u) | (1 << v)
        return bits

    def with_weights(self, weights: Sequence[float] | None) -> Graph:
        return Graph(self.n, self.edges, self.directed, None if weights is None else tuple(weights))

    def without(self, removed: Collection[int]) -> tuple[Graph, list[int]]:
        """Materialize ``G - removed`` as a new graph with compacted edge ids.

        Returns the new graph and, for each new edge id, the original id.
        """
        keep = [e for e in range(self.m) if e not in removed]
        weights = None if self.weights is None else [self.weights[e] for e in keep]
        return Graph(self.n, [self.edges[e] for e in keep], self.directed, weights), keep

    def induced(self, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
        """Subgraph induced by ``vertices`` (relabelled in the given order).

        Returns the subgraph and, for each of its edge ids, the original id.
        """
        index = {v: i for i, v in enumerate(vertices)}
        kept, pairs = [], []
        for e, (u, v) in enumerate(self.edges):
            if u in index and v in index:
                kept.append(e)
                pairs.append((index[u], index[v]))
        weights = None if self.weights is None else [self.weights[e] for e in kept]
        return Graph(len(vertices), pairs, self.directed, weights), kept

    @cached_property
    def arc_table(self) -> tuple[list[int], list[list[int]], list[int]]:
        """Residual-network skeleton shared by the flow routines.

        Edge ``e`` owns arcs ``2e`` (tail to head) and ``2e+1`` (head to tail).
        The reverse arc has capacity 1 for undirected edges and 0 for directed
        ones, which gives shared capacity with cancellation in the undirected case.
        """
        head = [0] * (2 * self.m)
        cap = [0] * (2 * self.m)
        adj: list[list[int]] = [[] for _ in range(self.n)]
        back = 0 if self.directed else 1
        for e, (u, v) in enumerate(self.edges):
            head[2 * e], head[2 * e + 1] = v, u
            cap[2 * e], cap[2 * e + 1] = 1, back
            adj[u].append(2 * e)
            adj[v].append(2 * e + 1)
        return head, adj, cap


@dataclass(frozen=True)
class Cut:
    """Vertex set ``X`` (stored as a bitset) standing for the cut ``(X, V - X)``."""

    side: int
    n: int

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.side <= 0 or self.side & ~full:
            raise DomainError(f"cut side {self.side:#b} is empty or not a subset of {self.n} vertices")
        if self.side == full:
            raise DomainError("cut side is the whole vertex set")

    @classmethod
    def of(cls, vertices: Iterable[int], n: int) -> Cut:
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise DomainError(f"vertex {v} outside 0..{n - 1}")
            bits |= 1 << v
        return cls(bits, n)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if self.side >> v & 1)

    def __contains__(self, v: int) -> bool:
        return bool(self.side >> v & 1)

    def __len__(self) -> int:
        return bin(self.side).count("1")

    def complement(self) -> Cut:
        return Cut(((1 << self.n) - 1) & ~self.side, self.n)

    def __and__(self, other: Cut) -> Cut:
        return Cut(self.side & other.side, self.n)

    def __or__(self, other: Cut) -> Cut:
        return Cut(self.side | other.side, self.n)

    def __lt__(self, other: Cut) -> bool:
        return self.side != other.side and self.side & ~other.side == 0

    def __le__(self, other: Cut) -> bool:
        return self.side & ~other.side == 0

    def canonical(self, anchor: int | None = None) -> Cut:
        """Orientation used for undirected cuts.

        With an anchor, the side containing it; otherwise the side whose
        sorted vertex list is lexicographically smaller.
        """
        other = self.complement()
        if anchor is not None:
            return self if anchor in self else other
        return self if sorted(self.vertices) <= sorted(other.vertices) else other


def side_bits(x: Cut | int, n: int) -> int:
    """Validated bitset of a cut given either as a Cut or a raw bitset."""
    if isinstance(x, Cut):
        if x.n != n:
            raise DomainError(f"cut built for {x.n} vertices used on a graph with {n}")
        return x.side
    return Cut(int(x), n).side


def crosses(g: Graph, e: int, bits: int) -> bool:
    u, v = g.edges[e]
    tail_in, head_in = bits >> u & 1, bits >> v & 1
    if g.directed:
        return bool(tail_in and not head_in)
    return tail_in != head_in


def crossing_edges(g: Graph, x: Cut | int, removed: Collection[int] = EMPTY) -> frozenset[int]:
    """Unmasked edges crossing ``x``: leaving it when directed, with one end inside otherwise."""
    bits = side_bits(x, g.n)
    return frozenset(e for e in g.edge_ids(removed) if crosses(g, e, bits))


def cut_size(g: Graph, x: Cut | int, removed: Collection[int] = EMPTY) -> int:
    bits = side_bits(x, g.n)
    return sum(1 for e in g.edge_ids(removed) if crosses(g, e, bits))


def edges_between(g: Graph, a: int, b: int, removed: Collection[int] = EMPTY) -> list[int]:
    """Edges with one endpoint in bitset ``a`` and the other in bitset ``b`` (any direction)."""
    out = []
    for e in g.edge_ids(removed):
        u, v = g.edges[e]
        if (a >> u & 1 and b >> v & 1) or (a >> v & 1 and b >> u & 1):
            out.append(e)
    return out


def submodularity_check(g: Graph, x: Cut | int, y: Cut | int, removed: Collection[int] = EMPTY) -> bool:
    """Whether ``d(X & Y) + d(X | Y) <= d(X) + d(Y)``; always true, kept as a test probe."""
    xb, yb = side_bits(x, g.n), side_bits(y, g.n)
    full = (1 << g.n) - 1
    meet, join = xb & yb, xb | yb
    if meet == 0 or join == full:
        raise DomainError("intersection is empty or union is the whole vertex set")
    return cut_size(g, meet, removed) + cut_size(g, join, removed) <= cut_size(g, xb, removed) + cut_size(g, yb, removed)


def popcount(bits: int) -> int:
    return bin(bits).count("1")


def bits_to_vertices(bits: int) -> list[int]:
    out, v = [], 0
    while bits:
        if bits & 1:
            out.append(v)
        bits >>= 1
        v += 1
    return out
