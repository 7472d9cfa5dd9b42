import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from lambda_ecs import DomainError, EdgeDeletionSparsifier, Graph, check_graph, is_lambda_connected

from conftest import cycle

C6_CHORD = np.array([[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 0], [0, 3]])


def test_fit_transform_array():
    est = EdgeDeletionSparsifier(lam=1, k=2)
    out = est.fit_transform(C6_CHORD)
    assert est.status_ == "deletion_set" and len(est.deletion_set_) == 2
    assert out.shape == (5, 2)
    assert is_lambda_connected(check_graph(out, n_vertices=6), 1)


def test_no_solution_keeps_graph():
    est = EdgeDeletionSparsifier(lam=1, k=2).fit(cycle(5))
    assert est.status_ == "no_solution" and est.deletion_set_ == []
    assert est.transform(cycle(5)) == cycle(5)


def test_weighted_fit():
    est = EdgeDeletionSparsifier(lam=1, k=2, weighted=True).fit(C6_CHORD, weights=[1, 1, 1, 9, 1, 1, 5])
    assert est.weight_ == 14.0 and est.deletion_set_ == [3, 6]


def test_params_and_clone():
    est = EdgeDeletionSparsifier(lam=3, k=2, directed=True)
    assert est.get_params()["lam"] == 3
    assert clone(est).get_params() == est.get_params()
    est.set_params(k=5)
    assert est.k == 5


def test_validation():
    with pytest.raises(NotFittedError):
        EdgeDeletionSparsifier().transform(C6_CHORD)
    with pytest.raises(DomainError):
        check_graph(np.zeros((3, 3)))
    with pytest.raises(DomainError):
        check_graph([[0.5, 1]])
    assert check_graph([[0.0, 2.0]]) == Graph(3, [(0, 2)])
    est = EdgeDeletionSparsifier(lam=1, k=1).fit(C6_CHORD)
    with pytest.raises(DomainError):
        est.transform(C6_CHORD[:3])
