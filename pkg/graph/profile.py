from typing import NamedTuple

from graph.plane_graph import PlaneGraph


class VertexProfile(NamedTuple):
    vertex: int
    degree: int
    is_internal: bool
    triangle_count: int
    isolated_neighbors: frozenset[int]
    is_poor: bool

    @property
    def is_triangular(self) -> bool:
        return self.triangle_count >= 1


def isolated_neighbors(g: PlaneGraph, v: int) -> frozenset[int]:
    return frozenset(u for u in g.neighbors(v) if not g.is_triangular_edge(u, v))


def internal_isolated_3_neighbors(g: PlaneGraph, v: int) -> list[int]:
    return sorted(
        u for u in isolated_neighbors(g, v) if g.is_internal(u) and g.degree(u) == 3
    )


def vertex_profile(g: PlaneGraph, v: int) -> VertexProfile:
    degree = g.degree(v)
    internal = g.is_internal(v)
    triangle_count = len(g.triangles_at(v))
    isolated = isolated_neighbors(g, v)
    poor = False
    if internal and triangle_count >= 1:
        small = len(internal_isolated_3_neighbors(g, v))
        match degree:
            case 3:
                poor = small >= 1
            case 4:
                poor = small >= 2
    return VertexProfile(
        vertex=v,
        degree=degree,
        is_internal=internal,
        triangle_count=triangle_count,
        isolated_neighbors=isolated,
        is_poor=poor,
    )


def profiles(g: PlaneGraph) -> dict[int, VertexProfile]:
    return {v: vertex_profile(g, v) for v in g.vertices}
