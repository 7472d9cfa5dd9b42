import itertools

import pytest

from lambda_ecs import Graph

ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[num])


def cycle(n, directed=False):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], directed)


def bidirected_complete(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(n) if u != v], True)


def sides(n, directed):
    """Every nonempty proper vertex subset as a bitmask; undirected keeps those holding vertex 0."""
    full = (1 << n) - 1
    for x in range(1, full):
        if directed or x & 1:
            yield x


def delta(g, x, removed=()):
    """Edges leaving x (directed) or crossing it (undirected), counted by hand."""
    gone = set(removed)
    out = 0
    for e, (u, v) in enumerate(g.edges):
        if e in gone:
            continue
        a, b = x >> u & 1, x >> v & 1
        if g.directed:
            out += a and not b
        else:
            out += a != b
    return out


def brute_lambda(g, removed=()):
    return min(delta(g, x, removed) for x in sides(g.n, g.directed))


def brute_ok(g, lam, removed=()):
    return brute_lambda(g, removed) >= lam


def brute_max_deletion(g, lam, k_max):
    """Largest s <= k_max with some s-subset deletable, by plain enumeration."""
    best = 0
    for s in range(1, k_max + 1):
        if any(brute_ok(g, lam, c) for c in itertools.combinations(range(g.m), s)):
            best = s
        else:
            break
    return best


@pytest.fixture
def k4_bidirected():
    return bidirected_complete(4)
