"""Witness edges Z(e*) and the nested chain of lambda-cuts they induce.

All cuts here live in ``G* = g - removed - e*`` and are stored with ``u*`` on
the inside and ``v*`` outside.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Iterable, Sequence

from .classify import newly_undeletable
from .exceptions import InsufficientWitnessesError, InternalInconsistencyError, PreconditionError
from .flow import max_flow, min_cut
from .graph import EMPTY, Cut, Graph, crosses, cut_size


@dataclass(frozen=True)
class WitnessSet:
    """Witness edges in path order, each with its endpoints oriented from ``u*`` toward ``v*``."""

    e_star: int
    u_star: int
    v_star: int
    edges: tuple[int, ...]
    ends: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class CutChain:
    witness: WitnessSet
    cuts: tuple[Cut, ...]

    @property
    def witnesses(self) -> tuple[int, ...]:
        return self.witness.edges

    def __len__(self) -> int:
        return len(self.cuts)


def orient_path(g: Graph, path: Sequence[int], start: int) -> list[tuple[int, int]]:
    """Endpoints of each path edge in traversal order."""
    out, x = [], start
    for e in path:
        a, b = g.edges[e]
        if a != x:
            if g.directed or b != x:
                raise InternalInconsistencyError(f"path edge {e} does not continue from vertex {x}")
            a, b = b, a
        out.append((a, b))
        x = b
    return out


def witness_edges(
    g: Graph,
    lam: int,
    e_star: int,
    ell: int,
    removed: Collection[int] = EMPTY,
    D: Iterable[int] | None = None,
    restrict: Iterable[int] | None = None,
) -> WitnessSet:
    """Pick ``ell`` members of D(e*) lying on one of ``lam`` disjoint ``u*``-``v*`` paths of ``G*``.

    The path holding the most D(e*) edges is used (ties: lowest index); its
    first ``ell`` such edges in path order are returned.
    """
    removed = frozenset(removed)
    if D is None:
        D = newly_undeletable(g, lam, e_star, removed, restrict)
    D = frozenset(D)
    if len(D) < ell * lam:
        raise InsufficientWitnessesError(f"|D(e*)| = {len(D)} < ell * lambda = {ell * lam}")
    u_star, v_star = g.edges[e_star]
    _, system = max_flow(g, [u_star], [v_star], removed | {e_star}, cap_limit=lam)
    if system.value < lam:
        raise PreconditionError(f"edge {e_star} is not deletable")
    best = max(range(system.value), key=lambda i: (sum(e in D for e in system.paths[i]), -i))
    path = system.paths[best]
    ends = orient_path(g, path, u_star)
    picked = [(e, ends[pos]) for pos, e in enumerate(path) if e in D][:ell]
    if len(picked) < ell:
        raise InternalInconsistencyError(f"best path holds only {len(picked)} D(e*) edges, needed {ell}")
    return WitnessSet(
        e_star, u_star, v_star, tuple(e for e, _ in picked), tuple(uv for _, uv in picked)
    )


def uncross_pair(
    g: Graph,
    lam: int,
    c_i: Cut,
    c_j: Cut,
    e_i: int,
    e_j: int,
    removed: Collection[int] = EMPTY,
    anchors: tuple[int, int] | None = None,
) -> tuple[Cut, Cut]:
    """Turn two lambda-cuts of ``g - removed`` into a nested pair ``(C_i', C_j')`` with ``C_j' < C_i'``.

    ``anchors`` is ``(u*, v*)``; both cuts must put ``u*`` inside and ``v*`` outside.
    Nested inputs come back (possibly swapped); crossing ones become
    ``(C_i | C_j, C_i & C_j)``, which submodularity keeps tight.
    """
    for name, c in (("c_i", c_i), ("c_j", c_j)):
        if cut_size(g, c, removed) != lam:
            raise PreconditionError(f"{name} is not a {lam}-cut")
        if anchors is not None and not (anchors[0] in c and anchors[1] not in c):
            raise PreconditionError(f"{name} does not separate u* from v*")
    if not crosses(g, e_i, c_i.side) or not crosses(g, e_j, c_j.side):
        raise PreconditionError("witness edge does not cross its cut")
    if c_j < c_i:
        return c_i, c_j
    if c_i < c_j:
        return c_j, c_i
    if c_i == c_j:
        raise PreconditionError("both witnesses cross the same lambda-cut")
    join, meet = c_i | c_j, c_i & c_j
    for c in (join, meet):
        if cut_size(g, c, removed) != lam:
            raise InternalInconsistencyError("uncrossed cut is not tight; submodularity violated")
    return join, meet


def build_chain(
    g: Graph, lam: int, witness: WitnessSet, removed: Collection[int] = EMPTY, seeds: Sequence[Cut] | None = None
) -> CutChain:
    """Nested lambda-cuts ``C_1 < ... < C_l`` of ``G*``, ``C_i`` crossed by exactly witness ``i``.

    ``seeds`` overrides the starting cuts (default: the minimal min-cut with
    ``u*, u_i`` inside and ``v*, v_i`` outside); each must be such a lambda-cut.
    """
    g_star = frozenset(removed) | {witness.e_star}
    u_star, v_star = witness.u_star, witness.v_star
    cuts: list[Cut] = []
    if seeds is not None:
        if len(seeds) != len(witness.edges):
            raise PreconditionError(f"{len(seeds)} seed cuts for {len(witness.edges)} witnesses")
        for c, (u, v) in zip(seeds, witness.ends):
            if not (u_star in c and u in c and v_star not in c and v not in c) or cut_size(g, c, g_star) != lam:
                raise PreconditionError("seed cut is not a lambda-cut with u*, u_i inside and v*, v_i outside")
        cuts = list(seeds)
    else:
        for e, (u, v) in zip(witness.edges, witness.ends):
            value, side = min_cut(g, {u_star, u}, {v_star, v}, g_star)
            if value != lam:
                raise InternalInconsistencyError(f"seed cut for witness {e} has size {value}, expected {lam}")
            cuts.append(Cut(side, g.n))
    ell = len(cuts)
    for j in range(ell):
        for q in range(j + 1, ell):
            if not cuts[j] < cuts[q]:
                cuts[q], cuts[j] = uncross_pair(
                    g, lam, cuts[q], cuts[j], witness.edges[q], witness.edges[j], g_star, (u_star, v_star)
                )
    chain = CutChain(witness, tuple(cuts))
    problems = chain_violations(g, lam, chain, removed)
    if problems:
        raise InternalInconsistencyError("cut chain invariant failed: " + "; ".join(problems))
    return chain


def chain_violations(g: Graph, lam: int, chain: CutChain, removed: Collection[int] = EMPTY) -> list[str]:
    """Every broken chain invariant, as readable messages (empty when the chain is sound)."""
    g_star = frozenset(removed) | {chain.witness.e_star}
    w = chain.witnesses
    out = []
    for i, c in enumerate(chain.cuts):
        if i + 1 < len(chain.cuts) and not c < chain.cuts[i + 1]:
            out.append(f"C_{i} is not a strict subset of C_{i + 1}")
        if cut_size(g, c, g_star) != lam:
            out.append(f"C_{i} has size {cut_size(g, c, g_star)}")
        hit = [q for q, e in enumerate(w) if crosses(g, e, c.side)]
        if hit != [i]:
            out.append(f"C_{i} is crossed by witnesses {hit}")
        for q in range(i):
            a, b = g.edges[w[q]]
            if a not in c or b not in c:
                out.append(f"witness {q} is not inside C_{i}")
    return out
