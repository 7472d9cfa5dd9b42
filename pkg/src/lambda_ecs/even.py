"""Even lambda on undirected graphs: 2k witnesses, every other one kept."""

from __future__ import annotations

from typing import Iterable

from .directed import solve_by_extraction
from .exceptions import DomainError
from .graph import Graph
from .outcomes import BoundCertificate, DeletionSet


def alternate(witnesses):
    """Positions 0, 2, 4, ... of the witness order."""
    return witnesses[::2]


def solve_even(g: Graph, lam: int, k: int, restrict: Iterable[int] | None = None) -> DeletionSet | BoundCertificate:
    if g.directed:
        raise DomainError("solve_even needs an undirected graph")
    if lam % 2:
        raise DomainError(f"lambda = {lam} is odd; use solve_odd")
    return solve_by_extraction(g, lam, k, 2, alternate, restrict)
