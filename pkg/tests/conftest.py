"""Shared fixtures and independent oracles for the test suite.

naive_graphs re-enumerates small graphs by brute force over all edge
subsets, with filter-after-generate constraint handling; it shares no code
with the pruned generator under test.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional

import pytest

from randic import Graph


def naive_graphs(n: int, connected: Optional[bool] = None,
                 min_degree: Optional[int] = None,
                 max_degree: Optional[int] = None) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices, filtering after generation."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(2 ** len(pairs)):
        edges = tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if min_degree is not None and n and min(deg) < min_degree:
            continue
        if max_degree is not None and n and max(deg) > max_degree:
            continue
        if connected is not None and _naive_connected(n, edges) != connected:
            continue
        yield Graph(n, edges)


def _naive_connected(n: int, edges) -> bool:
    if n <= 1:
        return True
    reach = {0}
    frontier = {0}
    while frontier:
        nxt = set()
        for u, v in edges:
            if u in reach and v not in reach:
                nxt.add(v)
            elif v in reach and u not in reach:
                nxt.add(u)
        reach |= nxt
        frontier = nxt
    return len(reach) == n


def star(n: int) -> Graph:
    return Graph(n, tuple((0, i) for i in range(1, n)))


def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = tuple((u + g.n, v + g.n) for u, v in h.edges)
    return Graph(g.n + h.n, g.edges + shifted)


@pytest.fixture
def star4() -> Graph:
    return star(4)


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def k23() -> Graph:
    return complete_bipartite(2, 3)
