import itertools
import json
import os

import networkx as nx
import pytest
from conftest import CORPUS, brute_force_cycles

from error import (AmbiguousOuterFace, BoundaryNotCycle, EulerViolation,
                   GraphFileError, InconsistentRotation, PreconditionViolated)
from graph.class_check import check_class_p45, has_4_or_5_cycle
from graph.cycle import cycle_sides, short_cycles, splitting_paths
from graph.generator import cycle_graph, generate_class_graph, insert_ear, wrap_core
from graph.graph_file import dump_graph, graph_from_dict, load_graph
from graph.identification import (check_identification, identification_candidates,
                                  identify_vertices, new_vertex_id)
from graph.plane_graph import build_embedding
from graph.profile import vertex_profile
from reducible.trivial import chords, cut_vertices


def with_ear(length: int, n: int, a: int, b: int):
    """cycle_graph(n) with an ear of the given length from a to b inside."""
    g = cycle_graph(n)
    face_id = g.bounded_face_ids()[0]
    face = g.faces[face_id]
    i, j = sorted((face.index(a), face.index(b)))
    rotation, _ = insert_ear(g, face_id, i, j, length)
    return build_embedding(rotation, g.outer_face)


def bowtie():
    rotation = {0: [1, 2, 3, 4], 1: [2, 0], 2: [0, 1], 3: [4, 0], 4: [0, 3]}
    return build_embedding(rotation, [0, 2, 1, 0, 4, 3])


def test_triangle_faces(k3) -> None:
    assert len(k3.faces) == 2
    assert k3.outer_face == (0, 2, 1)
    assert k3.faces[k3.bounded_face_ids()[0]] == (0, 1, 2)
    assert k3.triangles == [(0, 1, 2)]
    assert k3.rotation_after(0, 1) == (2,)


def test_cycle_boundary(c7) -> None:
    assert c7.boundary_cycle() == (0, 6, 5, 4, 3, 2, 1)
    assert c7.internal_vertices == []
    assert c7.face_length(c7.bounded_face_ids()[0]) == 7


def test_inconsistent_rotation() -> None:
    with pytest.raises(InconsistentRotation):
        build_embedding({0: [1], 1: []}, [0])
    with pytest.raises(InconsistentRotation):
        build_embedding({0: [1, 1], 1: [0]}, [0, 1])


def test_disconnected_rotation() -> None:
    with pytest.raises(EulerViolation):
        build_embedding({0: [1], 1: [0], 2: [3], 3: [2]}, [0, 1])


def test_outer_hint_must_match(k3) -> None:
    with pytest.raises(AmbiguousOuterFace):
        build_embedding(k3.rotation, [0, 1, 5])


def test_drawing_graph(claw4_graph) -> None:
    assert claw4_graph.vertex_count == 32
    assert len(claw4_graph.edges) == 38
    assert len(claw4_graph.faces) == 8
    assert claw4_graph.boundary_vertices == frozenset(range(11, 18))
    assert claw4_graph.degree(0) == 4
    assert check_class_p45(claw4_graph).legal_instance


def test_graph_file_errors(tmp_path) -> None:
    with pytest.raises(GraphFileError):
        graph_from_dict({"rotation": [[1], [0]]})
    with pytest.raises(GraphFileError):
        graph_from_dict({"n": 3, "rotation": [[1], [0]], "outer": [0, 1]})
    with pytest.raises(GraphFileError):
        load_graph(str(tmp_path / "missing.json"))
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    with pytest.raises(GraphFileError):
        load_graph(str(broken))


def test_graph_file_keeps_embedding(tmp_path, claw4_graph) -> None:
    path = str(tmp_path / "g.json")
    dump_graph(claw4_graph, path)
    with open(path, encoding="utf8") as f:
        assert isinstance(json.load(f)["rotation"], list)
    g = load_graph(path)
    assert g.rotation == claw4_graph.rotation
    assert g.outer_face == claw4_graph.outer_face


def test_corpus_membership() -> None:
    c5 = load_graph(os.path.join(CORPUS, "c5.json"))
    report = check_class_p45(c5)
    assert report.has_5_cycle and not report.in_class
    assert check_class_p45(load_graph(os.path.join(CORPUS, "c6.json"))).in_class
    assert check_class_p45(load_graph(os.path.join(CORPUS, "k3.json"))).legal_instance
    assert check_class_p45(load_graph(os.path.join(CORPUS, "c7.json"))).legal_instance


def test_bowtie_has_cut_vertex() -> None:
    g = bowtie()
    report = check_class_p45(g)
    assert report.in_class
    assert not report.two_connected
    assert not report.boundary_is_cycle
    assert [r.witness for r in cut_vertices(g)] == [(0,)]
    with pytest.raises(BoundaryNotCycle):
        g.boundary_cycle()


def test_short_cycles(c7, k3) -> None:
    assert short_cycles(c7.rotation, 7) == [(0, 1, 2, 3, 4, 5, 6)]
    assert short_cycles(c7.rotation, 6) == []
    assert short_cycles(k3.rotation, 3) == [(0, 1, 2)]


def test_splitting_path_and_chord() -> None:
    g = with_ear(2, 6, 0, 3)
    assert splitting_paths(g, 2) == [(0, 6, 3)]
    assert splitting_paths(g, 1) == []
    assert has_4_or_5_cycle(g.rotation)
    chorded = with_ear(1, 6, 0, 3)
    assert [r.witness for r in chords(chorded)] == [(0, 3)]
    assert check_class_p45(chorded).chords == [(0, 3)]
    assert splitting_paths(chorded, 1) == [(0, 3)]


def test_cycle_sides() -> None:
    g = with_ear(3, 7, 0, 3)
    inner = next(
        tuple(g.faces[i]) for i in g.bounded_face_ids() if 1 in g.faces[i]
    )
    interior, exterior = cycle_sides(g, inner)
    assert not interior
    assert exterior == frozenset(g.vertices) - frozenset(inner)


@pytest.mark.parametrize(
    "fixture",
    [
        "adjacent_4_graph",
        "five_star_graph",
        "poor_3_graph",
        "broom_graph",
        "double_claw_graph",
    ],
)
def test_wrapped_cores_are_in_class(request, fixture) -> None:
    g = request.getfixturevalue(fixture)
    report = check_class_p45(g)
    assert report.in_class
    assert len(g.boundary_cycle()) == 7


def test_wrap_rejects_short_cycles() -> None:
    core = {0: [1, 3, 4], 1: [2, 0], 2: [3, 1], 3: [0, 2], 4: [0]}
    with pytest.raises(PreconditionViolated):
        wrap_core(core)


def test_profiles(poor_3_graph) -> None:
    poor = vertex_profile(poor_3_graph, 1)
    assert poor.is_poor and poor.is_triangular
    assert poor.isolated_neighbors == frozenset({5})
    four = vertex_profile(poor_3_graph, 0)
    assert four.degree == 4 and four.triangle_count == 1 and not four.is_poor


def brute_force_splitting_paths(g, max_len: int) -> set[tuple[int, ...]]:
    boundary = g.boundary_cycle()
    on_boundary = set(boundary)
    boundary_edges = {
        frozenset((boundary[i], boundary[i - 1])) for i in range(len(boundary))
    }
    found = set()
    for u, v in itertools.combinations(sorted(on_boundary), 2):
        for path in nx.all_simple_paths(g.nx_graph, u, v, cutoff=max_len):
            if on_boundary & set(path[1:-1]):
                continue
            if len(path) == 2 and frozenset(path) in boundary_edges:
                continue
            found.add(tuple(path))
    return found


def test_g12a_faces(g12a) -> None:
    assert g12a.vertex_count == 12 and len(g12a.edges) == 15
    # Euler: F = E - V + 2
    assert len(g12a.faces) == 15 - 12 + 2
    assert sorted(sorted(face) for face in g12a.faces) == sorted(
        [
            [0, 1, 2, 3, 4, 5, 6],
            [0, 1, 2, 7, 9, 10, 11],
            [0, 3, 4, 5, 6, 7, 8],
            [2, 3, 8, 9, 10, 11],
            [7, 8, 9],
        ]
    )
    assert sorted(g12a.outer_face) == list(range(7))
    assert g12a.internal_vertices == [7, 8, 9, 10, 11]


def test_g12a_membership(g12a) -> None:
    for length in (4, 5):
        assert brute_force_cycles(g12a, length) == []
    report = check_class_p45(g12a)
    assert report.legal_instance
    assert short_cycles(g12a.rotation, 7) == sorted(
        (c for length in (3, 6, 7) for c in brute_force_cycles(g12a, length)),
        key=lambda c: (len(c), c),
    )
    assert brute_force_cycles(g12a, 3) == [(7, 8, 9)]


def test_g12a_splitting_paths(g12a) -> None:
    assert splitting_paths(g12a, 3) == [(0, 7, 8, 3)]
    for max_len in range(1, 7):
        assert set(splitting_paths(g12a, max_len)) == brute_force_splitting_paths(
            g12a, max_len
        )
    assert (0, 7, 9, 10, 11, 2) in splitting_paths(g12a, 5)
    assert (0, 7, 9, 10, 11, 2) not in splitting_paths(g12a, 4)


def test_poor_4_vertex(poor4) -> None:
    assert poor4.vertex_count == 10
    v = 7
    profile = vertex_profile(poor4, v)
    assert profile.is_poor and profile.degree == 4 and profile.triangle_count == 1
    # the definition read off the adjacency: v is internal, lies on a
    # triangle, and has two internal 3-neighbors that share no neighbor with it
    adjacency = poor4.adjacency(v)
    assert v not in poor4.outer_face
    assert any(poor4.has_edge(a, b) for a, b in itertools.combinations(adjacency, 2))
    small = [
        u
        for u in adjacency
        if u not in poor4.outer_face
        and poor4.degree(u) == 3
        and not adjacency & poor4.adjacency(u)
    ]
    assert sorted(small) == [8, 9]
    assert profile.isolated_neighbors == frozenset(small)
    assert [u for u in poor4.vertices if vertex_profile(poor4, u).is_poor] == [v]
    # a poor 4-vertex with its small neighbors on boundary triangles needs
    # 4- and 5-cycles at ten vertices
    assert not check_class_p45(poor4).in_class


def test_identification(adjacent_4_graph) -> None:
    g = adjacent_4_graph
    removed = {0, 1, 5, 6}
    merged = identify_vertices(g, 4, 2, 0, removed)
    vstar = new_vertex_id(g)
    assert merged.vertex_count == g.vertex_count - len(removed) - 1
    assert merged.degree(vstar) == 2
    assert not has_4_or_5_cycle(merged.rotation)
    assert merged.boundary_vertices == g.boundary_vertices
    with pytest.raises(PreconditionViolated):
        # consecutive around 0
        check_identification(g, 2, 3, 0, frozenset(removed))
    with pytest.raises(PreconditionViolated):
        check_identification(g, 4, 2, 0, frozenset({1, 5, 6}))


def test_identification_candidates(adjacent_4_graph) -> None:
    g = adjacent_4_graph
    candidates = identification_candidates(g)
    assert (1, 3, 0, frozenset({0, 2, 4})) in candidates
    assert (0, 6, 1, frozenset({1, 5, 7})) in candidates
    for x, y, z, removed in candidates:
        check_identification(g, x, y, z, removed)
        assert not has_4_or_5_cycle(identify_vertices(g, x, y, z, removed).rotation)


@pytest.mark.parametrize("seed", range(5))
def test_generated_graphs_are_legal(seed) -> None:
    g = generate_class_graph(12, seed=seed)
    assert g.vertex_count == 12
    assert check_class_p45(g).legal_instance


def test_generator_preconditions() -> None:
    with pytest.raises(PreconditionViolated):
        generate_class_graph(12, boundary_len=5)
    with pytest.raises(PreconditionViolated):
        generate_class_graph(4, boundary_len=7)
