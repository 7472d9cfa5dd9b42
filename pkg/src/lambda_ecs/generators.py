"""Seeded generators of lambda-connected test instances."""

from __future__ import annotations

from math import ceil

import numpy as np

from .exceptions import DomainError, GenerationError
from .flow import is_lambda_connected
from .graph import Graph

MAX_ATTEMPTS = 50


def _rng(seed: int, attempt: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed) & (2**64 - 1), attempt]))


def _key(u: int, v: int, directed: bool) -> tuple[int, int]:
    return (u, v) if directed or u < v else (v, u)


def _cycles(rng: np.random.Generator, n: int, count: int, directed: bool) -> list[tuple[int, int]] | None:
    used: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for _ in range(count):
        for _ in range(200):
            perm = rng.permutation(n).tolist()
            cyc = [(perm[i], perm[(i + 1) % n]) for i in range(n)]
            keys = {_key(u, v, directed) for u, v in cyc}
            if len(keys) == n and not keys & used:
                used |= keys
                edges.extend(cyc)
                break
        else:
            return None
    return edges


def gen_ham_union(n: int, lam: int, extra_edges: int = 0, seed: int = 0, directed: bool = False) -> Graph:
    """Union of edge-disjoint random Hamiltonian cycles plus ``extra_edges`` random new vertex pairs.

    ``lam`` directed cycles, or ``ceil(lam / 2)`` undirected ones, make the
    result lambda-connected.
    """
    if n < 3:
        raise DomainError(f"need n >= 3, got {n}")
    if lam < 1 or extra_edges < 0:
        raise DomainError("lambda must be >= 1 and extra_edges >= 0")
    count = lam if directed else ceil(lam / 2)
    if count > (n - 1 if directed else (n - 1) // 2):
        raise GenerationError(f"{count} edge-disjoint Hamiltonian cycles do not fit on {n} vertices")
    pairs = n * (n - 1) if directed else n * (n - 1) // 2
    if count * n + extra_edges > pairs:
        raise GenerationError(f"{count * n + extra_edges} edges exceed the {pairs} available vertex pairs")
    for attempt in range(MAX_ATTEMPTS):
        rng = _rng(seed, attempt)
        edges = _cycles(rng, n, count, directed)
        if edges is None:
            continue
        used = {_key(u, v, directed) for u, v in edges}
        free = [
            (u, v)
            for u in range(n)
            for v in range(n)
            if u != v and (directed or u < v) and (u, v) not in used
        ]
        pick = rng.choice(len(free), size=extra_edges, replace=False) if extra_edges else []
        edges += [free[i] for i in pick]
        order = rng.permutation(len(edges))
        g = Graph(n, [edges[i] for i in order], directed)
        if is_lambda_connected(g, lam):
            return g
    raise GenerationError(f"no verified instance after {MAX_ATTEMPTS} attempts")


def gen_blob_cycle(blocks: int, block_size: int, lam: int, seed: int = 0) -> Graph:
    """Dense blobs on a ring with ``(lam + 1) / 2`` edges between consecutive blobs.

    Each blob is a complete graph whose edges are repeated often enough to be
    lambda-connected on its own, so every cut either splits a blob (at least
    lambda edges) or separates an arc of the ring (lam + 1 edges).
    """
    if lam < 1 or lam % 2 == 0:
        raise DomainError(f"blob cycles need an odd lambda, got {lam}")
    if blocks < 3 or block_size < 1:
        raise DomainError("need blocks >= 3 and block_size >= 1")
    n = blocks * block_size
    copies = ceil(lam / (block_size - 1)) if block_size > 1 else 0
    for attempt in range(MAX_ATTEMPTS):
        rng = _rng(seed, attempt)
        edges: list[tuple[int, int]] = []
        for b in range(blocks):
            base = b * block_size
            for u in range(block_size):
                for v in range(u + 1, block_size):
                    edges += [(base + u, base + v)] * copies
        for b in range(blocks):
            nxt = (b + 1) % blocks
            for _ in range((lam + 1) // 2):
                u = b * block_size + int(rng.integers(block_size))
                v = nxt * block_size + int(rng.integers(block_size))
                edges.append((u, v))
        order = rng.permutation(len(edges))
        g = Graph(n, [edges[i] for i in order], False)
        if is_lambda_connected(g, lam):
            return g
        copies += 1  # densify and retry
    raise GenerationError(f"no verified blob cycle after {MAX_ATTEMPTS} attempts")
