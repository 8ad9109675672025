from collections.abc import Iterable

from cyy_naive_lib.log import get_logger

from error import (AmbiguousOuterFace, EulerViolation, LemmaViolated,
                   PreconditionViolated)
from graph.class_check import has_4_or_5_cycle
from graph.plane_graph import PlaneGraph, build_embedding, normalize_edge


def new_vertex_id(g: PlaneGraph) -> int:
    return max(g.vertices) + 1


def separated_around(g: PlaneGraph, z: int, x: int, y: int) -> bool:
    """Whether x and y split the other neighbors of z into two non-empty arcs."""
    after_x = g.rotation_after(z, x)
    idx = after_x.index(y)
    return idx >= 1 and idx <= len(after_x) - 2


def check_identification(
    g: PlaneGraph, x: int, y: int, z: int, removed: frozenset[int]
) -> None:
    if z not in removed:
        raise PreconditionViolated(f"{z} is not in the removed set")
    if removed & g.boundary_vertices:
        raise PreconditionViolated(
            f"removed set contains boundary vertices {sorted(removed & g.boundary_vertices)}"
        )
    if g.degree(z) < 4:
        raise PreconditionViolated(f"d({z}) = {g.degree(z)} < 4")
    for w in (x, y):
        if not g.has_edge(z, w):
            raise PreconditionViolated(f"{w} is not a neighbor of {z}")
        if w in removed:
            raise PreconditionViolated(f"{w} lies in the removed set")
    if x == y or g.has_edge(x, y):
        raise PreconditionViolated(f"{x} and {y} are adjacent")
    if not separated_around(g, z, x, y):
        raise PreconditionViolated(
            f"{x} and {y} are consecutive around {z} in {g.neighbors(z)}"
        )
    if g.common_neighbors(x, y) - {z}:
        raise PreconditionViolated(
            f"{x} and {y} share neighbors {sorted(g.common_neighbors(x, y) - {z})}"
        )
    if x in g.boundary_vertices and y in g.boundary_vertices:
        raise PreconditionViolated(f"both {x} and {y} lie on the boundary")


def identify_vertices(
    g: PlaneGraph, x: int, y: int, z: int, removed: Iterable[int]
) -> PlaneGraph:
    """Delete the removed set and merge x and y into the vertex
    new_vertex_id(g)."""
    removed = frozenset(removed)
    check_identification(g, x, y, z, removed)
    vstar = new_vertex_id(g)

    def kept_after(w: int) -> list[int]:
        return [u for u in g.rotation_after(w, z) if u not in removed]

    rotation: dict[int, list[int]] = {}
    for w in g.vertices:
        if w in removed or w in (x, y):
            continue
        nbrs = []
        for u in g.neighbors(w):
            if u in removed:
                continue
            nbrs.append(vstar if u in (x, y) else u)
        rotation[w] = nbrs
    rotation[vstar] = kept_after(x) + kept_after(y)

    def image(w: int) -> int:
        return vstar if w in (x, y) else w

    outer = [image(w) for w in g.outer_face]
    try:
        result = build_embedding(rotation, outer, allow_disconnected=True)
    except (EulerViolation, AmbiguousOuterFace) as e:
        raise LemmaViolated(f"identification is not planar: {e}") from e

    if has_4_or_5_cycle(result.rotation):
        raise LemmaViolated(f"identifying {x} and {y} creates a 4- or 5-cycle")
    boundary = frozenset(g.outer_face)
    before = {
        normalize_edge(image(u), image(v))
        for u, v in g.edges
        if u in boundary and v in boundary
    }
    image_boundary = frozenset(image(w) for w in boundary)
    after = {
        (u, v)
        for u, v in result.edges
        if u in image_boundary and v in image_boundary
    }
    if before != after:
        raise LemmaViolated(f"identifying {x} and {y} changes the boundary subgraph")
    get_logger().debug(
        "identified %s and %s at %s into %s after removing %s",
        x,
        y,
        z,
        vstar,
        sorted(removed),
    )
    return result


def identification_candidates(
    g: PlaneGraph,
) -> list[tuple[int, int, int, frozenset[int]]]:
    """(x, y, z, Z) with Z = {z} plus the first neighbor between x and y on
    each side, whenever the identification preconditions hold."""
    result = []
    for z in g.internal_vertices:
        if g.degree(z) < 4:
            continue
        for x in g.neighbors(z):
            arc = g.rotation_after(z, x)
            for idx in range(1, len(arc) - 1):
                y = arc[idx]
                if y < x:
                    continue
                removed = frozenset((z, arc[0], arc[idx + 1]))
                if removed & g.boundary_vertices:
                    continue
                try:
                    check_identification(g, x, y, z, removed)
                except PreconditionViolated:
                    continue
                result.append((x, y, z, removed))
    return result
