import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coloring.fold_spec import FoldSpec
from coloring.multi_coloring import verify_coloring
from cover.cover import (Color, Cover, cover_from_dict, cover_from_list_assignment,
                         dump_cover, load_cover, permute_cover, random_cover,
                         straight_cover, validate_cover)
from cover.inheritance import inherited_cover
from cover.residual import residual
from cover.straighten import permute_coloring, straighten_tree, unpermute_coloring
from cover.tree_reduction import nest_list_assignment, tree_cover_to_lists
from error import GraphFileError, InvalidPartialColoring, MatchingCollision, NotATree
from graph.identification import identify_vertices, new_vertex_id
from graph.plane_graph import build_embedding

PATH_EDGES = [(0, 1), (1, 2), (2, 3)]


def random_tree_cover(edges, sizes, seed: int) -> Cover:
    rng = random.Random(seed)
    matchings = {}
    for u, v in edges:
        k = rng.randint(0, min(sizes[u], sizes[v]))
        matchings[(u, v)] = list(
            zip(rng.sample(range(sizes[u]), k), rng.sample(range(sizes[v]), k))
        )
    return Cover(sizes=sizes, matchings=matchings)


def test_cover_orientation() -> None:
    c = Cover(sizes={0: 2, 1: 2}, matchings={(1, 0): [(0, 1)]})
    assert c.pairs(0, 1) == frozenset({(1, 0)})
    assert c.pairs(1, 0) == frozenset({(0, 1)})
    assert c.color_neighbors(Color(0, 1)) == frozenset({Color(1, 0)})
    assert not c.is_straight(0, 1)


def test_validate_cover(k3) -> None:
    assert validate_cover(k3, straight_cover(k3, 7)) == []
    assert validate_cover(k3, random_cover(k3, 7, seed=3, density=0.5)) == []
    bad = Cover(sizes={0: 2, 1: 2, 2: 2}, matchings={(0, 1): [(0, 0), (1, 0)]})
    assert any("matched 2 times" in v for v in validate_cover(k3, bad))
    outside = Cover(sizes={0: 2, 1: 2, 2: 2}, matchings={(0, 1): [(0, 5)]})
    assert any("leaves" in v for v in validate_cover(k3, outside))


def test_cover_from_dict(k3) -> None:
    assert cover_from_dict(k3, {"straight": 7}) == straight_cover(k3, 7)
    c = cover_from_dict(k3, {"sizes": [3, 3, 4], "matchings": {"0-1": [[0, 2]], "1-2": []}})
    assert c.sizes == {0: 3, 1: 3, 2: 4}
    assert c.pairs(1, 0) == frozenset({(2, 0)})
    assert c.pairs(1, 2) == frozenset()
    legacy = cover_from_dict(k3, {"sizes": 3, "matchings": [[1, 0, [[2, 0]]]]})
    assert legacy == Cover(sizes={0: 3, 1: 3, 2: 3}, matchings={(0, 1): [(0, 2)]})


@pytest.mark.parametrize(
    "data",
    [
        {"sizes": [3, 3, 3], "matchings": {"1-0": [[0, 0]]}},
        {"sizes": [3, 3, 3], "matchings": {"01": [[0, 0]]}},
        {"sizes": [3, 3, 3], "matchings": {"0-1": [[0]]}},
        {"sizes": "three"},
        {"matchings": {}},
        [3, 3, 3],
    ],
)
def test_malformed_cover(k3, data) -> None:
    with pytest.raises(GraphFileError):
        cover_from_dict(k3, data)


def test_cover_from_list_assignment() -> None:
    c, names = cover_from_list_assignment(
        [(0, 1)], {0: ["a", "b", "c"], 1: ["b", "c", "d"]}
    )
    assert c.sizes == {0: 3, 1: 3}
    assert c.pairs(0, 1) == frozenset({(1, 0), (2, 1)})
    assert names[Color(1, 2)] == "d"


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_straighten_tree(seed) -> None:
    sizes = {0: 5, 1: 7, 2: 7, 3: 7}
    c = random_tree_cover(PATH_EDGES, sizes, seed)
    straightened, permutation = straighten_tree(c, PATH_EDGES)
    assert all(straightened.is_straight(u, v) for u, v in PATH_EDGES)
    phi = {0: frozenset({0, 1}), 2: frozenset({3, 4})}
    moved = permute_coloring(phi, permutation)
    assert unpermute_coloring(moved, permutation) == phi
    assert permute_cover(c, permutation) == straightened


def test_straighten_needs_a_tree() -> None:
    c = Cover(sizes={0: 2, 1: 2, 2: 2}, matchings={})
    with pytest.raises(NotATree):
        straighten_tree(c, [(0, 1), (1, 2), (0, 2)])


def test_residual(k3) -> None:
    c = straight_cover(k3, 7)
    left = residual(k3, c, {0: frozenset({0, 1})}, [1, 2])
    assert left.sizes() == {1: 5, 2: 5}
    assert left.residual_lists[1] == frozenset(range(2, 7))
    cover, back_map = left.as_cover({1: 3})
    assert cover.sizes == {1: 3, 2: 5}
    assert back_map[1] == [2, 3, 4]
    with pytest.raises(InvalidPartialColoring):
        residual(k3, c, {0: frozenset({0})}, [0, 1])


def test_residual_rejects_bad_coloring(k3) -> None:
    c = straight_cover(k3, 7)
    with pytest.raises(InvalidPartialColoring):
        residual(k3, c, {0: frozenset({0, 1}), 1: frozenset({1, 2})}, [2])


def test_inherited_cover(adjacent_4_graph) -> None:
    g = adjacent_4_graph
    merged = identify_vertices(g, 4, 2, 0, {0, 1, 5, 6})
    vstar = new_vertex_id(g)
    c = random_cover(g, 7, seed=5)
    inherited = inherited_cover(merged, c, 4, 2, vstar)
    assert validate_cover(merged, inherited) == []
    for other in merged.neighbors(vstar):
        source = 4 if g.has_edge(4, other) else 2
        assert inherited.pairs(vstar, other) == c.pairs(source, other)


def test_inherited_cover_collision() -> None:
    # a path x - o - y merged into one vertex joined to o
    merged = build_embedding({1: [3], 3: [1]}, [1, 3])
    c = Cover(
        sizes={0: 2, 1: 2, 2: 2},
        matchings={(0, 1): [(0, 0)], (1, 2): [(0, 1)]},
    )
    with pytest.raises(MatchingCollision):
        inherited_cover(merged, c, 0, 2, 3)


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_tree_cover_to_lists(seed) -> None:
    sizes = {0: 3, 1: 5, 2: 3, 3: 3}
    edges = [(0, 1), (1, 2), (1, 3)]
    c = random_tree_cover(edges, sizes, seed)
    lists, back_map = tree_cover_to_lists(c, edges)
    assert {v: len(colors) for v, colors in lists.items()} == sizes
    for leaf in (0, 2, 3):
        assert lists[leaf] <= lists[1]
    # equal list colors on an edge come from matched cover colors or from
    # colors the saturation paired up, never from a clash the cover forbids
    for u, v in edges:
        for cid in lists[u] & lists[v]:
            i, j = back_map[u][cid], back_map[v][cid]
            if (i, j) not in c.pairs(u, v):
                assert i not in c.partner(u, v) and j not in c.partner(v, u)


def test_nest_list_assignment() -> None:
    nested, names = nest_list_assignment(
        [(0, 1)], {0: {"a", "b"}, 1: {"b", "c", "d"}}
    )
    assert nested[0] <= nested[1]
    assert {names[0][cid] for cid in nested[0]} == {"a", "b"}
    assert {names[1][cid] for cid in nested[1]} == {"b", "c", "d"}
    shared = nested[0] & nested[1]
    assert any(names[0][cid] == names[1][cid] == "b" for cid in shared)


def test_straightened_coloring_maps_back(k3) -> None:
    c = random_cover(k3, 7, seed=11)
    straightened, permutation = straighten_tree(c, [(0, 1), (1, 2)])
    phi = {0: frozenset({0, 1}), 1: frozenset({2, 3}), 2: frozenset({4, 5})}
    spec = FoldSpec(m=1)
    assert bool(verify_coloring(k3, straightened, spec, phi)) == bool(
        verify_coloring(k3, c, spec, unpermute_coloring(phi, permutation))
    )


def test_cover_file(tmp_path, claw4_graph) -> None:
    c = random_cover(claw4_graph, 7, seed=4, density=0.5)
    path = str(tmp_path / "cover.json")
    dump_cover(c, path)
    with open(path, encoding="utf8") as f:
        data = json.load(f)
    assert data["sizes"] == [7] * len(claw4_graph.vertices)
    assert all(int(key.split("-")[0]) < int(key.split("-")[1]) for key in data["matchings"])
    assert load_cover(claw4_graph, path) == c


def test_load_cover_file_by_hand(tmp_path, k3) -> None:
    path = tmp_path / "k3_cover.json"
    path.write_text('{"sizes": [2, 2, 2], "matchings": {"0-1": [[0, 1], [1, 0]], "0-2": [[0, 0]]}}')
    c = load_cover(k3, str(path))
    assert validate_cover(k3, c) == []
    assert c.pairs(1, 0) == frozenset({(1, 0), (0, 1)})
    assert c.pairs(0, 2) == frozenset({(0, 0)})
    assert c.pairs(1, 2) == frozenset()
    path.write_text("sizes: [2, 2, 2]")
    with pytest.raises(GraphFileError):
        load_cover(k3, str(path))
