import functools
from collections.abc import Iterable, Mapping, Sequence
from typing import NamedTuple

import networkx as nx
from cyy_naive_lib.log import get_logger

from error import (AmbiguousOuterFace, BoundaryNotCycle, EulerViolation,
                   InconsistentRotation)

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _cyclic_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = tuple(a) + tuple(a)
    target = tuple(b)
    return any(doubled[i: i + len(a)] == target for i in range(len(a)))


class PlaneGraph:
    """A connected plane graph given by its rotation system.

    Rotations list neighbors counter-clockwise. Faces are traced so that each
    face lies on the left of its darts; bounded faces come out counter-clockwise
    and the outer face clockwise.
    """

    def __init__(
        self,
        rotation: Mapping[int, Sequence[int]],
        faces: Sequence[tuple[int, ...]],
        outer_face_id: int,
    ) -> None:
        self.__rotation: dict[int, tuple[int, ...]] = {
            v: tuple(nbrs) for v, nbrs in sorted(rotation.items())
        }
        self.__faces: tuple[tuple[int, ...], ...] = tuple(faces)
        self.__outer_face_id = outer_face_id
        self.__adjacency: dict[int, frozenset[int]] = {
            v: frozenset(nbrs) for v, nbrs in self.__rotation.items()
        }
        self.__dart_face: dict[Edge, int] = {}
        for face_id, face in enumerate(self.__faces):
            for idx, u in enumerate(face):
                self.__dart_face[(u, face[(idx + 1) % len(face)])] = face_id

    @property
    def rotation(self) -> dict[int, tuple[int, ...]]:
        return self.__rotation

    @property
    def vertices(self) -> list[int]:
        return list(self.__rotation)

    @property
    def vertex_count(self) -> int:
        return len(self.__rotation)

    @functools.cached_property
    def edges(self) -> list[Edge]:
        return sorted(
            {normalize_edge(u, v) for u, nbrs in self.__rotation.items() for v in nbrs}
        )

    @property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        return self.__faces

    @property
    def outer_face_id(self) -> int:
        return self.__outer_face_id

    @property
    def outer_face(self) -> tuple[int, ...]:
        return self.__faces[self.__outer_face_id]

    def bounded_face_ids(self) -> list[int]:
        return [i for i in range(len(self.__faces)) if i != self.__outer_face_id]

    def face_length(self, face_id: int) -> int:
        return len(self.__faces[face_id])

    def dart_face(self, u: int, v: int) -> int:
        return self.__dart_face[(u, v)]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.__rotation[v]

    def degree(self, v: int) -> int:
        return len(self.__rotation[v])

    def has_vertex(self, v: int) -> bool:
        return v in self.__rotation

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.__adjacency[u]

    def adjacency(self, v: int) -> frozenset[int]:
        return self.__adjacency[v]

    @functools.cached_property
    def nx_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.__rotation)
        graph.add_edges_from(self.edges)
        return graph

    @functools.cached_property
    def boundary_vertices(self) -> frozenset[int]:
        return frozenset(self.outer_face)

    def is_internal(self, v: int) -> bool:
        return v not in self.boundary_vertices

    @property
    def internal_vertices(self) -> list[int]:
        return [v for v in self.__rotation if self.is_internal(v)]

    def boundary_cycle(self) -> tuple[int, ...]:
        walk = self.outer_face
        if len(walk) < 3 or len(set(walk)) != len(walk):
            raise BoundaryNotCycle(f"outer face walk {walk} is not a cycle")
        return walk

    def common_neighbors(self, u: int, v: int) -> frozenset[int]:
        return self.__adjacency[u] & self.__adjacency[v]

    def is_triangular_edge(self, u: int, v: int) -> bool:
        return bool(self.common_neighbors(u, v))

    @functools.cached_property
    def triangles(self) -> list[tuple[int, int, int]]:
        result = []
        for u, v in self.edges:
            for w in self.common_neighbors(u, v):
                if w > v:
                    result.append((u, v, w))
        return sorted(result)

    def triangles_at(self, v: int) -> list[tuple[int, int, int]]:
        return [t for t in self.triangles if v in t]

    def rotation_after(self, v: int, start: int) -> tuple[int, ...]:
        """Neighbors of v in rotation order, starting right after start."""
        nbrs = self.__rotation[v]
        idx = nbrs.index(start)
        return nbrs[idx + 1:] + nbrs[:idx]

    def subgraph_adjacency(self, vertices: Iterable[int]) -> dict[int, frozenset[int]]:
        keep = frozenset(vertices)
        return {v: self.__adjacency[v] & keep for v in sorted(keep)}

    def to_dict(self) -> dict:
        return {
            "n": self.vertex_count,
            "rotation": {str(v): list(nbrs) for v, nbrs in self.__rotation.items()},
            "outer": list(self.outer_face),
        }

    def __repr__(self) -> str:
        return (
            f"PlaneGraph(n={self.vertex_count}, e={len(self.edges)}, "
            f"faces={len(self.__faces)}, outer={self.outer_face})"
        )


def check_rotation(rotation: Mapping[int, Sequence[int]]) -> None:
    for v, nbrs in rotation.items():
        if len(set(nbrs)) != len(nbrs):
            raise InconsistentRotation(f"parallel edges at vertex {v}: {nbrs}")
        for u in nbrs:
            if u == v:
                raise InconsistentRotation(f"loop at vertex {v}")
            if u not in rotation:
                raise InconsistentRotation(f"vertex {v} lists unknown neighbor {u}")
            if v not in rotation[u]:
                raise InconsistentRotation(
                    f"{u} is in the rotation of {v} but {v} is not in the rotation of {u}"
                )


def trace_faces(rotation: Mapping[int, Sequence[int]]) -> list[tuple[int, ...]]:
    """Trace face boundary walks; the dart after (u, v) is (v, w) with w
    preceding u in the rotation at v."""
    position = {
        (v, u): idx for v, nbrs in rotation.items() for idx, u in enumerate(nbrs)
    }
    visited: set[Edge] = set()
    faces: list[tuple[int, ...]] = []
    for start_u in sorted(rotation):
        if not rotation[start_u]:
            faces.append(())
            continue
        for start_v in rotation[start_u]:
            if (start_u, start_v) in visited:
                continue
            walk = []
            u, v = start_u, start_v
            while (u, v) not in visited:
                visited.add((u, v))
                walk.append(u)
                nbrs = rotation[v]
                w = nbrs[(position[(v, u)] - 1) % len(nbrs)]
                u, v = v, w
            assert (u, v) == (start_u, start_v)
            faces.append(tuple(walk))
    return faces


def _resolve_outer(
    faces: Sequence[tuple[int, ...]], outer_face_hint: Sequence[int]
) -> int:
    hint = tuple(outer_face_hint)
    if len(faces) == 1:
        return 0
    candidates = [
        face_id
        for face_id, face in enumerate(faces)
        if _cyclic_equal(face, hint) or _cyclic_equal(face, hint[::-1])
    ]
    if len(candidates) > 1:
        directed = [
            face_id for face_id in candidates if _cyclic_equal(faces[face_id], hint)
        ]
        if len(directed) == 1:
            return directed[0]
    if len(candidates) != 1:
        raise AmbiguousOuterFace(
            f"outer face hint {hint} matches {len(candidates)} faces"
        )
    return candidates[0]


def build_embedding(
    rotation: Mapping[int, Sequence[int]],
    outer_face_hint: Sequence[int],
    allow_disconnected: bool = False,
) -> PlaneGraph:
    rotation = {int(v): tuple(int(u) for u in nbrs) for v, nbrs in rotation.items()}
    check_rotation(rotation)
    graph = nx.Graph()
    graph.add_nodes_from(rotation)
    graph.add_edges_from((u, v) for u, nbrs in rotation.items() for v in nbrs)
    if not rotation:
        raise EulerViolation("empty graph")
    components = nx.number_connected_components(graph)
    if components > 1 and not allow_disconnected:
        raise EulerViolation(f"graph has {components} components")
    faces = trace_faces(rotation)
    vertex_count = graph.number_of_nodes()
    edge_count = graph.number_of_edges()
    assert sum(len(face) for face in faces) == 2 * edge_count
    # every component contributes its own outer face to the traced faces
    if vertex_count - edge_count + len(faces) != 2 * components:
        raise EulerViolation(
            f"V - E + F = {vertex_count} - {edge_count} + {len(faces)} "
            f"for {components} component(s)"
        )
    outer_face_id = _resolve_outer(faces, outer_face_hint)
    get_logger().debug(
        "built embedding with %s vertices %s edges %s faces",
        vertex_count,
        edge_count,
        len(faces),
    )
    return PlaneGraph(rotation=rotation, faces=faces, outer_face_id=outer_face_id)


class EdgeListGraph(NamedTuple):
    """A bare graph for structures that carry no embedding, such as trees
    handed to the colorers."""

    vertices: list[int]
    edges: list[Edge]
