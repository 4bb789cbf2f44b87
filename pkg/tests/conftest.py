"""Shared exhaustive instance families, built once per session."""

import pytest

from cosp import Graph, Poset, is_cograph, is_nfree
from cosp import oracles


@pytest.fixture(scope="session")
def graphs_to_4() -> list[Graph]:
    out = []
    for n in range(5):
        out.extend(oracles.enumerate_graphs(n))
    return out


@pytest.fixture(scope="session")
def connected_cographs_to_6() -> list[Graph]:
    """Every connected cograph on 1..6 vertices, all labelings."""
    out = []
    for n in range(1, 7):
        for g in oracles.enumerate_graphs(n):
            if g.is_connected() and is_cograph(g):
                out.append(g)
    return out


@pytest.fixture(scope="session")
def posets_to_4() -> list[Poset]:
    out = []
    for n in range(5):
        out.extend(oracles.enumerate_posets(n))
    return out


@pytest.fixture(scope="session")
def connected_nfree_to_4(posets_to_4) -> list[Poset]:
    """Every connected N-free poset on 1..4 elements, all labelings."""
    return [
        p
        for p in posets_to_4
        if p.order >= 1 and p.is_connected() and is_nfree(p)
    ]
