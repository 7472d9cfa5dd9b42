"""Top-level search: dispatch to the structural solvers, then enumerate a certified candidate set.

Also the minimum-equivalent-digraph front end, which splits a digraph into
strong components and solves lambda = 1 inside each.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb

import networkx as nx

from .classify import is_deletable
from .directed import solve_directed
from .even import solve_even
from .exceptions import BudgetExceededError, DomainError, InternalInconsistencyError, PreconditionError
from .flow import is_lambda_connected
from .graph import Graph
from .odd import solve_odd
from .outcomes import BoundCertificate, DeletionSet

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8


@dataclass
class SearchReport:
    """What one run of the pipeline did, for reporting."""

    deletion_set: DeletionSet | None
    certificate: BoundCertificate | None = None
    marked: list[int] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.deletion_set is not None

    @property
    def candidate_count(self) -> int:
        return 0 if self.certificate is None else len(self.certificate.candidates)


def slack(g: Graph, lam: int, removed) -> int:
    """Upper bound on how many more edges can go before some degree drops below ``lam``."""
    if g.directed:
        out, inn = [0] * g.n, [0] * g.n
        for e in g.edge_ids(removed):
            u, v = g.edges[e]
            out[u] += 1
            inn[v] += 1
        return min(sum(max(0, d - lam) for d in out), sum(max(0, d - lam) for d in inn))
    deg = [0] * g.n
    for e in g.edge_ids(removed):
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
    return sum(max(0, d - lam) for d in deg) // 2


def enumerate_deletion_set(g: Graph, lam: int, k: int, candidates, budget: int = DEFAULT_BUDGET) -> frozenset[int] | None:
    """Lexicographically first k-subset of ``candidates`` that is a deletion set, or None.

    Prefixes that already disconnect, or leave too little degree slack, are cut.
    """
    cands = sorted(candidates)
    if comb(len(cands), k) > budget:
        raise BudgetExceededError(f"C({len(cands)}, {k}) = {comb(len(cands), k)} subsets exceed the budget {budget}")

    def rec(start: int, chosen: frozenset[int]) -> frozenset[int] | None:
        need = k - len(chosen)
        if need == 0:
            return chosen
        for idx in range(start, len(cands) - need + 1):
            e = cands[idx]
            if not is_deletable(g, e, lam, chosen):
                continue
            nxt = chosen | {e}
            if need > 1 and slack(g, lam, nxt) < need - 1:
                continue
            hit = rec(idx + 1, nxt)
            if hit is not None:
                return hit
        return None

    return rec(0, frozenset())


def search(g: Graph, lam: int, k: int, budget: int = DEFAULT_BUDGET) -> SearchReport:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if lam < 1:
        raise DomainError(f"lambda must be >= 1, got {lam}")
    if not is_lambda_connected(g, lam):
        raise PreconditionError(f"input graph is not {lam}-edge-connected")
    marked: list[int] = []
    if g.directed:
        out = solve_directed(g, lam, k)
    elif lam % 2 == 0:
        out = solve_even(g, lam, k)
    else:
        out = solve_odd(g, lam, k, marked=marked)
    if isinstance(out, DeletionSet):
        log.info("structural solver returned a deletion set (%s)", out.origin)
        return SearchReport(out, None, marked)
    log.info("enumerating %d-subsets of %d certified candidates", k, len(out.candidates))
    hit = enumerate_deletion_set(g, lam, k, out.candidates, budget)
    if hit is None:
        return SearchReport(None, out, marked)
    if not is_lambda_connected(g, lam, hit):
        raise InternalInconsistencyError("enumerated set failed verification")
    return SearchReport(DeletionSet(hit, lam, True, "enumeration"), out, marked)


def find_deletion_set(g: Graph, lam: int, k: int, budget: int = DEFAULT_BUDGET) -> DeletionSet | None:
    """A verified set of exactly ``k`` edges whose removal keeps ``g`` lambda-connected, or None."""
    return search(g, lam, k, budget).deletion_set


def reachability(g: Graph, removed=frozenset()) -> list[int]:
    """Per-vertex bitset of reachable vertices (including itself)."""
    adj = [[] for _ in range(g.n)]
    for e in g.edge_ids(removed):
        u, v = g.edges[e]
        adj[u].append(v)
        if not g.directed:
            adj[v].append(u)
    out = []
    for s in range(g.n):
        seen, stack = 1 << s, [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen >> y & 1:
                    seen |= 1 << y
                    stack.append(y)
        out.append(seen)
    return out


def minimum_equivalent_digraph(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> DeletionSet | None:
    """``k`` arcs whose removal keeps every reachability relation, or None if fewer exist.

    Arcs between strong components survive only if they realize an arc of the
    transitive reduction of the condensation (one arc per such pair). Inside
    each component the lambda = 1 pipeline is asked for ever larger deletion
    sets until it fails or the total reaches ``k``.
    """
    if not g.directed:
        raise DomainError("minimum equivalent digraph needs a directed graph")
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    if k == 0:
        return DeletionSet(frozenset(), 1, True, "med")
    dg = nx.DiGraph()
    dg.add_nodes_from(range(g.n))
    dg.add_edges_from(g.edges)
    comps = sorted((sorted(c) for c in nx.strongly_connected_components(dg)), key=lambda c: c[0])
    comp_of = {v: ci for ci, c in enumerate(comps) for v in c}
    cond = nx.DiGraph()
    cond.add_nodes_from(range(len(comps)))
    cond.add_edges_from((comp_of[u], comp_of[v]) for u, v in g.edges if comp_of[u] != comp_of[v])
    needed = set(nx.transitive_reduction(cond).edges())
    chosen: list[int] = []
    seen_pairs = set()
    for e, (u, v) in enumerate(g.edges):
        pair = (comp_of[u], comp_of[v])
        if pair[0] == pair[1]:
            continue
        if pair in needed and pair not in seen_pairs:
            seen_pairs.add(pair)
        else:
            chosen.append(e)
    for comp in comps:
        if len(chosen) >= k or len(comp) < 2:
            continue
        sub, back = g.induced(comp)
        best: frozenset[int] = frozenset()
        d = 1
        while len(chosen) + len(best) < k and d <= sub.m:
            hit = find_deletion_set(sub, 1, d, budget)
            if hit is None:
                break
            best = hit.edges
            d += 1
        chosen.extend(back[e] for e in sorted(best))
    if len(chosen) < k:
        return None
    picked = frozenset(chosen[:k])
    if reachability(g, picked) != reachability(g):
        raise InternalInconsistencyError("minimum equivalent digraph removal changed reachability")
    return DeletionSet(picked, 1, True, "med")
