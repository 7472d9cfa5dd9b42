"""Result types returned by the solvers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class DeletionSet:
    """Edges whose joint removal keeps the graph lambda-connected."""

    edges: frozenset[int]
    lam: int
    verified: bool
    origin: str = "greedy"

    def __len__(self) -> int:
        return len(self.edges)

    def sorted(self) -> list[int]:
        return sorted(self.edges)


@dataclass(frozen=True)
class BoundCertificate:
    """All deletable, non-irrelevant edges, together with the bound they are known to respect.

    ``greedy`` is the maximal set found and ``d_sizes`` the size of each
    newly-undeletable set along it.
    """

    candidates: frozenset[int]
    bound: int
    greedy: tuple[int, ...] = ()
    d_sizes: tuple[int, ...] = ()
    irrelevant: frozenset[int] = field(default_factory=frozenset)


@dataclass(frozen=True)
class NewIrrelevant:
    edge: int
