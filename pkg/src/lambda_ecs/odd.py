"""Odd lambda on undirected graphs: irrelevant-edge marking through cycle-like partitions.

For odd lambda the deletable edges are not bounded in k (a long cycle with
lambda = 1 has n deletable edges and no 2-edge deletion set). Each step
either finds a deletion set, proves an extra edge irrelevant, or certifies
that few relevant deletable edges remain.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Collection, Iterable, Sequence

from .chain import CutChain, build_chain, witness_edges
from .classify import deletable_edges, is_deletable, newly_undeletable
from .directed import greedy_maximal
from .exceptions import DomainError, InternalInconsistencyError, PreconditionError
from .flow import is_lambda_connected, min_cut
from .graph import EMPTY, Cut, Graph, bits_to_vertices, crosses, cut_size, edges_between
from .outcomes import BoundCertificate, DeletionSet, NewIrrelevant

log = logging.getLogger(__name__)


def eta(k: int) -> int:
    return 3 * k * (2 * k + 3) + 1


def odd_bound(lam: int, k: int) -> int:
    return lam * (6 * k**3 + 9 * k**2 + k)


@dataclass(frozen=True)
class OddSetup:
    """Chain of ``eta(k)`` cuts in ``G* = G - S* - e*`` and the chain indices kept after band filtering."""

    k: int
    s_star: frozenset[int]
    chain: CutChain
    selected: tuple[int, ...]

    @property
    def e_star(self) -> int:
        return self.chain.witness.e_star

    @property
    def g_star_removed(self) -> frozenset[int]:
        return self.s_star | {self.e_star}

    def edges(self, indices: Iterable[int] | None = None) -> list[int]:
        idx = self.selected if indices is None else indices
        return [self.chain.witnesses[i] for i in idx]


@dataclass(frozen=True)
class ViolatingTriple:
    x: Cut
    i: int
    j: int


@dataclass(frozen=True)
class CyclePartition:
    """Ring of vertex blocks; ``boundary_witnesses[t]`` joins block ``t`` to block ``t + 1`` (cyclically)."""

    blocks: tuple[int, ...]
    boundary_witnesses: tuple[int, ...]

    def block_vertices(self, t: int) -> list[int]:
        return bits_to_vertices(self.blocks[t])


def _side(chain: CutChain, idx: int) -> int:
    # negative indices stand for the empty set
    return chain.cuts[idx].side if idx >= 0 else 0


def build_odd_setup(
    g: Graph,
    lam: int,
    k: int,
    R: Collection[int],
    s_star: Iterable[int],
    e_star: int,
    D: Collection[int] | None = None,
) -> OddSetup:
    """Witness chain of length ``eta(k)`` for ``e*`` in ``G - S*``, subsampled every ``2k+3`` cuts.

    A subsampled cut is dropped when its band ``C_i - C_(i-2k-3)`` touches an
    endpoint of ``S*``.
    """
    s_star = frozenset(s_star)
    if D is None:
        allowed = [e for e in range(g.m) if e not in R]
        D = newly_undeletable(g, lam, e_star, s_star, restrict=allowed)
    else:
        D = frozenset(e for e in D if e not in R)
    length, gap = eta(k), 2 * k + 3
    if len(D) < length * lam:
        raise PreconditionError(f"|D(e*)| = {len(D)} is below eta * lambda = {length * lam}")
    ws = witness_edges(g, lam, e_star, length, s_star, D=D)
    chain = build_chain(g, lam, ws, s_star)
    touched = g.vertex_bits(s_star)
    selected = tuple(
        idx
        for idx in range(0, length, gap)
        if not (_side(chain, idx) & ~_side(chain, idx - gap)) & touched
    )
    if len(selected) < k:
        raise InternalInconsistencyError(f"band filtering left {len(selected)} < k = {k} cuts")
    return OddSetup(k, s_star, chain, selected)


def _shrink(g: Graph, lam: int, x: int, keep: int, removed: frozenset[int]) -> int:
    """Inclusion-minimal violating side inside ``x`` that still contains vertex ``keep``."""
    full = (1 << g.n) - 1
    changed = True
    while changed:
        changed = False
        for w in bits_to_vertices(x & ~(1 << keep)):
            value, side = min_cut(g, [keep], bits_to_vertices((full & ~x) | (1 << w)), removed)
            if value <= lam - 1:
                x, changed = side, True
                break
    return x


def find_violating_triple(
    g: Graph, lam: int, setup: OddSetup, indices: Sequence[int] | None = None
) -> ViolatingTriple | None:
    """First violating triple over the chain indices in ``indices`` (default: all selected).

    ``i`` is the first index whose removal prefix creates a cut of size at most
    ``lam - 1`` avoiding ``u*`` and ``v*`` with ``u_i`` inside. The side is made
    inclusion-minimal and ``j`` is the latest earlier index whose witness
    crosses it. Returns None when no prefix creates such a cut.
    """
    indices = list(setup.selected if indices is None else indices)
    ws = setup.chain.witness
    base = setup.g_star_removed
    u_star, v_star = ws.u_star, ws.v_star
    for pos, i in enumerate(indices):
        removed_i = base | set(setup.edges(indices[: pos + 1]))
        u_i, v_i = ws.ends[i]
        if u_i in (u_star, v_star):
            continue  # no side can hold u_i and avoid the anchors
        value, x = min_cut(g, [u_i], [v_i, u_star, v_star], removed_i)
        if value > lam - 1:
            continue
        for j in reversed(indices[:pos]):
            u_j, v_j = ws.ends[j]
            if {u_i, v_j} & {v_i, u_j, u_star, v_star}:
                continue
            val, side = min_cut(g, [u_i, v_j], [v_i, u_j, u_star, v_star], removed_i)
            if val <= lam - 1:
                x = side
                break
        x = _shrink(g, lam, x, u_i, removed_i)
        earlier = [j for j in indices[:pos] if crosses(g, ws.edges[j], x)]
        if not earlier:
            raise InternalInconsistencyError(f"violating cut at index {i} is crossed by no earlier witness")
        triple = ViolatingTriple(Cut(x, g.n), i, earlier[-1])
        problems = triple_violations(g, lam, setup, triple, indices)
        if problems:
            raise InternalInconsistencyError("violating triple invalid: " + "; ".join(problems))
        return triple
    return None


def triple_violations(
    g: Graph, lam: int, setup: OddSetup, triple: ViolatingTriple, indices: Sequence[int] | None = None
) -> list[str]:
    indices = list(setup.selected if indices is None else indices)
    chain = setup.chain
    x, i, j = triple.x.side, triple.i, triple.j
    base = setup.g_star_removed
    out = []
    if cut_size(g, x, base) < lam + 1:
        out.append(f"delta_G*(X) = {cut_size(g, x, base)} < lambda + 1")
    inside = chain.cuts[i].side & ~chain.cuts[j].side
    if x & ~inside:
        out.append("X is not inside C_i - C_j")
    hits = [q for q in indices if crosses(g, chain.witnesses[q], x)]
    if sorted(hits) != sorted({i, j}):
        out.append(f"selected witnesses crossing X are {hits}, expected {[j, i]}")
    removed_i = base | {chain.witnesses[q] for q in indices if q <= i}
    if cut_size(g, x, removed_i) != lam - 1:
        out.append(f"delta_G*_i(X) = {cut_size(g, x, removed_i)} != lambda - 1")
    return out


def assemble_cycle_partition(
    g: Graph, lam: int, k: int, setup: OddSetup, triple: ViolatingTriple, R: Collection[int] = EMPTY
) -> CyclePartition:
    """Blocks ``A_1 .. A_(2k+2)`` cut out of ``X`` by the ``2k+3`` chain cuts between ``C_j`` and ``C_i``."""
    chain = setup.chain
    i, j, x = triple.i, triple.j, triple.x.side
    nb = 2 * k + 2
    if i - nb < 1 or j > i - nb - 1:
        raise InternalInconsistencyError(f"triple ({i}, {j}) leaves no room for {nb} intermediate cuts")
    full = (1 << g.n) - 1
    renamed = [chain.cuts[i - t].side for t in range(nb + 1)] + [chain.cuts[j].side]
    Y = [0] + [x & renamed[t - 1] & ~renamed[t] for t in range(1, nb + 2)]
    W = full & ~x
    blocks = [Y[t + 1] for t in range(1, nb)] + [Y[1] | W | Y[nb + 1]]
    # witness of chain index i-(t+1) joins blocks t and t+1; i-1 closes the ring
    wit_idx = [i - (t + 1) for t in range(1, nb)] + [i - 1]

    problems = []
    if any(b == 0 for b in blocks):
        problems.append("empty block")
    half = (lam + 1) // 2
    boundary_total = 0
    for t in range(nb):
        a, b = blocks[t], blocks[(t + 1) % nb]
        size = len(edges_between(g, a, b))
        boundary_total += size
        if size != half:
            problems.append(f"boundary {t + 1}/{(t + 1) % nb + 1} has {size} edges, expected {half}")
    internal = sum(1 for e in range(g.m) if any(b >> g.edges[e][0] & 1 and b >> g.edges[e][1] & 1 for b in blocks))
    if internal + boundary_total != g.m:
        problems.append(f"{g.m - internal - boundary_total} chord edges")
    if problems:
        raise InternalInconsistencyError("cycle partition invalid: " + "; ".join(problems))

    witnesses = []
    for t in range(nb):
        pair = edges_between(g, blocks[t], blocks[(t + 1) % nb])
        e = chain.witnesses[wit_idx[t]]
        if e not in pair or e in R or not is_deletable(g, e, lam):
            e = next((f for f in pair if f not in R and is_deletable(g, f, lam)), None)
            if e is None:
                raise InternalInconsistencyError(f"boundary {t + 1} has no deletable relevant edge")
        witnesses.append(e)
    return CyclePartition(tuple(blocks), tuple(witnesses))


def mark_irrelevant(partition: CyclePartition, weights: Sequence[float] | None = None) -> int:
    """The boundary witness that may join R: the first one, or the lightest (lowest id on ties)."""
    if weights is None:
        return partition.boundary_witnesses[0]
    return min(partition.boundary_witnesses, key=lambda e: (weights[e], e))


def solve_odd_step(
    g: Graph,
    lam: int,
    k: int,
    R: Collection[int],
    restrict: Iterable[int] | None = None,
    weights: Sequence[float] | None = None,
    check: bool = True,
) -> DeletionSet | NewIrrelevant | BoundCertificate:
    if g.directed:
        raise DomainError("solve_odd_step needs an undirected graph")
    if lam % 2 == 0:
        raise DomainError(f"lambda = {lam} is even; use solve_even")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if check and not is_lambda_connected(g, lam):
        raise PreconditionError(f"input graph is not {lam}-edge-connected")
    R = frozenset(R)
    F, steps = greedy_maximal(g, lam, forbidden=R, stop_at=k, restrict=restrict)
    if len(F) >= k:
        return DeletionSet(frozenset(F[:k]), lam, is_lambda_connected(g, lam, F[:k]), "greedy")
    threshold = eta(k) * lam
    for r, D in enumerate(steps):
        if len(D) < threshold:
            continue
        setup = build_odd_setup(g, lam, k, R, F[:r], F[r], D=D)
        use = setup.selected[:k]
        Z = setup.edges(use)
        if is_lambda_connected(g, lam, Z):
            return DeletionSet(frozenset(Z), lam, True, "odd-witness")
        triple = find_violating_triple(g, lam, setup, use)
        if triple is None:
            raise InternalInconsistencyError("witness removal disconnects but no violating triple exists")
        partition = assemble_cycle_partition(g, lam, k, setup, triple, R)
        e = mark_irrelevant(partition, weights)
        if e in R:
            raise InternalInconsistencyError(f"edge {e} was already irrelevant")
        return NewIrrelevant(e)
    bound = odd_bound(lam, k)
    keep = None if restrict is None else set(restrict)
    candidates = frozenset(
        e for e in deletable_edges(g, lam) if e not in R and (keep is None or e in keep)
    )
    if len(candidates) > bound:
        raise InternalInconsistencyError(f"{len(candidates)} relevant deletable edges exceed the bound {bound}")
    return BoundCertificate(candidates, bound, tuple(F), tuple(len(D) for D in steps), R)


def solve_odd(
    g: Graph,
    lam: int,
    k: int,
    R: Iterable[int] | None = None,
    restrict: Iterable[int] | None = None,
    weights: Sequence[float] | None = None,
    marked: list[int] | None = None,
) -> DeletionSet | BoundCertificate:
    """Repeat :func:`solve_odd_step`, growing R, until a deletion set or a bound certificate appears.

    R starts as the undeletable edges (plus any ``R`` given). Marked edges are
    appended to ``marked`` when a list is passed.
    """
    if not is_lambda_connected(g, lam):
        raise PreconditionError(f"input graph is not {lam}-edge-connected")
    deletable = set(deletable_edges(g, lam))
    irrelevant = {e for e in range(g.m) if e not in deletable}
    if R is not None:
        irrelevant |= set(R)
    for _ in range(g.m + 1):
        out = solve_odd_step(g, lam, k, irrelevant, restrict, weights, check=False)
        if isinstance(out, NewIrrelevant):
            log.info("marked edge %d irrelevant (|R| = %d)", out.edge, len(irrelevant) + 1)
            irrelevant.add(out.edge)
            if marked is not None:
                marked.append(out.edge)
            continue
        if isinstance(out, BoundCertificate):
            log.info("bound certificate: %d candidates, bound %d", len(out.candidates), out.bound)
        return out
    raise InternalInconsistencyError("irrelevant set stopped growing without a verdict")
