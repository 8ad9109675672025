from collections.abc import Mapping
from typing import NamedTuple

import networkx as nx

from graph.plane_graph import PlaneGraph, normalize_edge

GOOD_CYCLE_LENGTH = 7


class CycleWitness(NamedTuple):
    vertices: tuple[int, ...]
    length: int
    interior: frozenset[int]
    exterior: frozenset[int]

    @property
    def is_separating(self) -> bool:
        return bool(self.interior) and bool(self.exterior)

    @property
    def is_good(self) -> bool:
        return self.length <= GOOD_CYCLE_LENGTH

    def edges(self) -> list[tuple[int, int]]:
        return cycle_edges(self.vertices)


def cycle_edges(cycle: tuple[int, ...]) -> list[tuple[int, int]]:
    return [
        normalize_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))
    ]


def short_cycles(
    adjacency: Mapping[int, frozenset[int] | tuple[int, ...]], max_len: int
) -> list[tuple[int, ...]]:
    """All simple cycles of length at most max_len, each once.

    A cycle is reported starting at its smallest vertex, oriented so that the
    second vertex is smaller than the last one.
    """
    assert max_len >= 3
    found: list[tuple[int, ...]] = []

    def dfs(path: list[int], on_path: set[int]) -> None:
        start, current = path[0], path[-1]
        for nb in sorted(adjacency[current]):
            if nb == start and len(path) >= 3 and path[1] < path[-1]:
                found.append(tuple(path))
                continue
            if nb <= start or nb in on_path or len(path) >= max_len:
                continue
            path.append(nb)
            on_path.add(nb)
            dfs(path, on_path)
            on_path.remove(nb)
            path.pop()

    for start in sorted(adjacency):
        dfs([start], {start})
    return sorted(found, key=lambda c: (len(c), c))


def cycle_sides(
    g: PlaneGraph, cycle: tuple[int, ...]
) -> tuple[frozenset[int], frozenset[int]]:
    """Split the vertices off the cycle into (interior, exterior)."""
    on_cycle = frozenset(cycle)
    c_edges = set(cycle_edges(cycle))
    face_graph = nx.Graph()
    face_graph.add_nodes_from(range(len(g.faces)))
    for u, v in g.edges:
        if (u, v) not in c_edges:
            face_graph.add_edge(g.dart_face(u, v), g.dart_face(v, u))
    outside_faces = nx.node_connected_component(face_graph, g.outer_face_id)
    interior: set[int] = set()
    for face_id, face in enumerate(g.faces):
        if face_id not in outside_faces:
            interior.update(v for v in face if v not in on_cycle)
    exterior = frozenset(g.vertices) - on_cycle - interior
    return frozenset(interior), exterior


def enumerate_short_cycles(g: PlaneGraph, max_len: int = 8) -> list[CycleWitness]:
    result = []
    for cycle in short_cycles(g.rotation, max_len):
        interior, exterior = cycle_sides(g, cycle)
        assert len(interior) + len(exterior) + len(cycle) == g.vertex_count
        result.append(
            CycleWitness(
                vertices=cycle,
                length=len(cycle),
                interior=interior,
                exterior=exterior,
            )
        )
    return result


def splitting_paths(g: PlaneGraph, max_len: int) -> list[tuple[int, ...]]:
    """Paths of length 1..max_len joining two boundary vertices through
    internal vertices only; the length-1 paths are the chords. Each path once,
    listed from its smaller end."""
    boundary = g.boundary_cycle()
    on_boundary = frozenset(boundary)
    boundary_edges = frozenset(cycle_edges(boundary))
    found: list[tuple[int, ...]] = []

    def dfs(path: list[int], on_path: set[int]) -> None:
        for nb in g.neighbors(path[-1]):
            if nb in on_boundary:
                if nb == path[0] or path[0] > nb:
                    continue
                if len(path) >= 2 or normalize_edge(path[0], nb) not in boundary_edges:
                    found.append(tuple(path + [nb]))
                continue
            if nb in on_path or len(path) >= max_len:
                continue
            path.append(nb)
            on_path.add(nb)
            dfs(path, on_path)
            on_path.remove(nb)
            path.pop()

    for start in sorted(on_boundary):
        dfs([start], {start})
    return sorted(found, key=lambda p: (len(p), p))
