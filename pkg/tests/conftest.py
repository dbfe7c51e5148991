import os
from itertools import permutations

import pytest

from dicolor.digraph import CirculantSpec, Digraph, circulant_tournament


def heavy_enabled() -> bool:
    return os.environ.get("DICOLOR_HEAVY") == "1"


def pytest_collection_modifyitems(config, items):
    skip = pytest.mark.skip(reason="heavy check; set DICOLOR_HEAVY=1 to run")
    for item in items:
        if "heavy" in item.keywords and not heavy_enabled():
            item.add_marker(skip)


def transitive_tournament(n: int) -> Digraph:
    return Digraph(n, frozenset((u, v) for u in range(n)
                                for v in range(u + 1, n)))


def oracle_acyclic(arcs, subset) -> bool:
    """Independent acyclicity check: some vertex order respects every arc."""
    subset = list(subset)
    if len(subset) <= 1:
        return True
    for perm in permutations(subset):
        pos = {v: i for i, v in enumerate(perm)}
        if all(not ((u, v) in arcs and pos[u] > pos[v])
               for u in subset for v in subset if u != v):
            return True
    return False


@pytest.fixture(scope="session")
def digon_digraph() -> Digraph:
    # Three vertices a,b,c = 0,1,2 with arcs b->c, c->a and a digon a<->b.
    return Digraph(3, frozenset({(1, 2), (2, 0), (0, 1), (1, 0)}))


@pytest.fixture(scope="session")
def rev7() -> Digraph:
    return circulant_tournament(CirculantSpec(3, 3))


@pytest.fixture(scope="session")
def rev9() -> Digraph:
    return circulant_tournament(CirculantSpec(4, 4))


@pytest.fixture(scope="session")
def cyc5() -> Digraph:
    return circulant_tournament(CirculantSpec(2, None))
