import itertools
import os
import sys

import pytest

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
sys.path.insert(0, ROOT)

from graph.generator import cycle_graph, wrap_core  # noqa: E402
from graph.graph_file import load_graph  # noqa: E402
from graph.plane_graph import build_embedding  # noqa: E402

CORPUS = os.path.join(ROOT, "corpus")


def brute_force_cycles(g, length: int) -> list[tuple[int, ...]]:
    """Cycles of the given length by trying every ordering of every vertex
    subset, written from the smallest vertex with the second below the last."""
    found = []
    for subset in itertools.combinations(sorted(g.vertices), length):
        first = subset[0]
        for rest in itertools.permutations(subset[1:]):
            if rest[0] > rest[-1]:
                continue
            cycle = (first,) + rest
            if all(g.has_edge(cycle[i], cycle[i - 1]) for i in range(length)):
                found.append(cycle)
    return sorted(found)


# cores below list rotations counter-clockwise; leaves are joined to a 7-cycle

# adjacent 4-vertices u = 0, v = 1; u1, u2, u3 = 2, 3, 4; v1, v2, v3 = 5, 6, 7
ADJACENT_4_CORE = {
    0: [4, 1, 2, 3],
    1: [0, 5, 6, 7],
    2: [0],
    3: [0],
    4: [0],
    5: [1, 8, 9],
    6: [1, 10, 11],
    7: [1],
    8: [5],
    9: [5],
    10: [6],
    11: [6],
}

# 5-vertex 0 with five isolated 3-neighbors
FIVE_STAR_CORE = {0: [1, 2, 3, 4, 5]} | {
    i: [0, 4 + 2 * i, 5 + 2 * i] for i in range(1, 6)
}
FIVE_STAR_CORE |= {leaf: [(leaf - 4) // 2] for leaf in range(6, 16)}

# triangle 0 1 2 with the poor 3-vertex 1 and the 4-vertex 0, whose neighbor
# across from 2 is the leaf 4
POOR_3_CORE = {
    0: [1, 2, 3, 4],
    1: [0, 5, 2],
    2: [6, 0, 1],
    3: [0],
    4: [0],
    5: [1, 7, 8],
    6: [2],
    7: [5],
    8: [5],
}

# triangle 0 1 2 with the poor 3-vertex 0 (isolated neighbor 3) and the
# 5-vertex 1 carrying isolated 3-neighbors 4, 5, 6
BROOM_CORE = {
    0: [1, 2, 3],
    1: [6, 2, 0, 4, 5],
    2: [15, 0, 1],
    3: [0, 7, 8],
    4: [1, 9, 10],
    5: [12, 1, 11],
    6: [13, 14, 1],
    7: [3],
    8: [3],
    9: [4],
    10: [4],
    11: [5],
    12: [5],
    13: [6],
    14: [6],
    15: [2],
}

# triangle 0 1 2 with the poor 4-vertex 0 (isolated 3-neighbors 3, 4) and the
# 5-vertex 1 whose isolated 3-neighbors after 2 are 5, 6, 7
DOUBLE_CLAW_CORE = {
    0: [1, 2, 3, 4],
    1: [0, 5, 6, 7, 2],
    2: [18, 0, 1],
    3: [0, 8, 9],
    4: [0, 10, 11],
    5: [1, 12, 13],
    6: [1, 14, 15],
    7: [1, 16, 17],
    18: [2],
} | {leaf: [3 + (leaf - 8) // 2] for leaf in range(8, 18)}

# triangle 0 1 2 with the internal 4-vertex 0 and the poor 4-vertex 1, whose
# isolated 3-neighbors are 3 and 4
POOR_4_CORE = {
    0: [1, 2, 5, 6],
    1: [3, 2, 0, 4],
    2: [7, 0, 1],
    3: [8, 1, 9],
    4: [1, 10, 11],
    5: [0],
    6: [0],
    7: [2],
    8: [3],
    9: [3],
    10: [4],
    11: [4],
}


@pytest.fixture
def k3():
    return build_embedding({0: [1, 2], 1: [2, 0], 2: [0, 1]}, [0, 2, 1])


@pytest.fixture
def c7():
    return cycle_graph(7)


@pytest.fixture
def claw4_graph():
    return load_graph(os.path.join(CORPUS, "claw4_wrapped.json"))


@pytest.fixture
def adjacent_4_graph():
    return wrap_core(ADJACENT_4_CORE)


@pytest.fixture
def five_star_graph():
    return wrap_core(FIVE_STAR_CORE)


@pytest.fixture
def poor_3_graph():
    return wrap_core(POOR_3_CORE)


@pytest.fixture
def broom_graph():
    return wrap_core(BROOM_CORE)


@pytest.fixture
def double_claw_graph():
    return wrap_core(DOUBLE_CLAW_CORE)


@pytest.fixture
def poor_4_graph():
    return wrap_core(POOR_4_CORE)


@pytest.fixture
def g12a():
    return load_graph(os.path.join(CORPUS, "g12a.json"))


@pytest.fixture
def poor4():
    return load_graph(os.path.join(CORPUS, "poor4.json"))
