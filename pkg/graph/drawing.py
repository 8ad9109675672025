import math
from collections.abc import Iterable, Mapping, Sequence

from graph.plane_graph import PlaneGraph, build_embedding, trace_faces

Point = tuple[float, float]


def sorted_rotation(
    coords: Mapping[int, Point], edges: Iterable[tuple[int, int]]
) -> dict[int, tuple[int, ...]]:
    neighbors: dict[int, list[int]] = {v: [] for v in coords}
    for u, v in edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    rotation = {}
    for v, nbrs in neighbors.items():
        cx, cy = coords[v]
        nbrs.sort(key=lambda nb: math.atan2(coords[nb][1] - cy, coords[nb][0] - cx))
        rotation[v] = tuple(nbrs)
    return rotation


def signed_area(coords: Mapping[int, Point], face: Sequence[int]) -> float:
    area = 0.0
    for i, v in enumerate(face):
        x1, y1 = coords[v]
        x2, y2 = coords[face[(i + 1) % len(face)]]
        area += x1 * y2 - x2 * y1
    return area / 2.0


def from_straight_line_drawing(
    coords: Mapping[int, Point],
    edges: Iterable[tuple[int, int]],
    outer: Sequence[int] | None = None,
) -> PlaneGraph:
    """Embedding of a straight-line drawing in ordinary (y-up) coordinates.

    Without an outer hint the clockwise face, the only one with negative
    signed area, becomes the outer face.
    """
    rotation = sorted_rotation(coords, edges)
    if outer is None:
        faces = trace_faces(rotation)
        outer = min(faces, key=lambda face: signed_area(coords, face))
    return build_embedding(rotation, outer)
