"""scikit-learn style wrapper: ``fit`` finds the deletion set, ``transform`` drops it."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .exceptions import DomainError
from .graph import Graph
from .pipeline import DEFAULT_BUDGET, search
from .weighted import solve_weighted


def check_graph(X, n_vertices: int | None = None, directed: bool = False, weights=None) -> Graph:
    """Accept a Graph, or an ``(m, 2)`` integer array of 0-based endpoints."""
    if isinstance(X, Graph):
        return X
    arr = np.asarray(X)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise DomainError(f"expected a Graph or an (m, 2) edge array, got shape {arr.shape}")
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.equal(np.mod(arr, 1), 0)):
            raise DomainError("edge endpoints must be integers")
        arr = arr.astype(np.int64)
    n = n_vertices if n_vertices is not None else (int(arr.max()) + 1 if arr.size else 0)
    return Graph(n, [tuple(r) for r in arr.tolist()], directed, weights)


class EdgeDeletionSparsifier(BaseEstimator, TransformerMixin):
    """Remove edges while keeping the graph ``lam``-edge-connected.

    Unweighted: exactly ``k`` edges (``status_`` is ``"no_solution"`` when
    impossible). Weighted: the heaviest set of at most ``k`` edges.
    """

    def __init__(self, lam: int = 1, k: int = 1, weighted: bool = False, enum_budget: int = DEFAULT_BUDGET,
                 n_vertices: int | None = None, directed: bool = False):
        self.lam = lam
        self.k = k
        self.weighted = weighted
        self.enum_budget = enum_budget
        self.n_vertices = n_vertices
        self.directed = directed

    def fit(self, X, y=None, weights=None):
        g = check_graph(X, self.n_vertices, self.directed, weights)
        if self.weighted:
            sol = solve_weighted(g, self.lam, self.k, weights)
            self.deletion_set_ = sorted(sol.edges)
            self.weight_ = sol.weight
            self.status_ = "deletion_set"
        else:
            rep = search(g, self.lam, self.k, self.enum_budget)
            self.deletion_set_ = sorted(rep.deletion_set.edges) if rep.found else []
            self.weight_ = float(g.total_weight(self.deletion_set_))
            self.status_ = "deletion_set" if rep.found else "no_solution"
            self.irrelevant_count_ = len(rep.marked)
        self.n_edges_in_ = g.m
        return self

    def transform(self, X):
        check_is_fitted(self)
        g = check_graph(X, self.n_vertices, self.directed)
        if g.m != self.n_edges_in_:
            raise DomainError(f"fitted on {self.n_edges_in_} edges, got {g.m}")
        h, _ = g.without(self.deletion_set_)
        if isinstance(X, Graph):
            return h
        return np.asarray(h.edges, dtype=np.int64).reshape(-1, 2)
