import pytest

from lambda_ecs import DomainError, GenerationError, edge_connectivity, emit, gen_blob_cycle, gen_ham_union


@pytest.mark.parametrize("directed", [False, True])
@pytest.mark.parametrize("lam", [1, 2, 3])
def test_ham_union_connected_and_deterministic(directed, lam):
    for seed in range(5):
        g = gen_ham_union(8, lam, 4, seed, directed)
        assert g.directed == directed
        assert edge_connectivity(g) >= lam
        assert emit(g) == emit(gen_ham_union(8, lam, 4, seed, directed))
        keys = [e if directed else tuple(sorted(e)) for e in g.edges]
        assert len(keys) == len(set(keys))  # no parallel edges


def test_seeds_differ():
    assert gen_ham_union(9, 2, 3, 1).edges != gen_ham_union(9, 2, 3, 2).edges


@pytest.mark.parametrize("lam", [1, 3, 5])
def test_blob_cycle(lam):
    g = gen_blob_cycle(4, 3, lam, seed=7)
    assert g.n == 12
    assert edge_connectivity(g) >= lam
    assert emit(g) == emit(gen_blob_cycle(4, 3, lam, seed=7))


def test_huge_seed_accepted():
    g = gen_ham_union(6, 1, 0, seed=2**70 + 5)
    assert edge_connectivity(g) >= 1


def test_bad_parameters():
    with pytest.raises(DomainError):
        gen_ham_union(2, 1)
    with pytest.raises(DomainError):
        gen_blob_cycle(4, 2, 2)
    with pytest.raises(DomainError):
        gen_blob_cycle(2, 2, 1)
    with pytest.raises(GenerationError):
        gen_ham_union(5, 5)
    with pytest.raises(GenerationError):
        gen_ham_union(5, 1, extra_edges=20)
