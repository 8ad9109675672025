import random
from collections.abc import Mapping, Sequence

from cyy_naive_lib.log import get_logger

from error import GenerationStalled, PreconditionViolated
from graph.class_check import has_4_or_5_cycle
from graph.plane_graph import PlaneGraph, build_embedding, trace_faces

START_CYCLE_LENGTHS = (3, 6, 7)


def cycle_graph(length: int) -> PlaneGraph:
    """The cycle 0, 1, ..., length-1 laid out counter-clockwise."""
    rotation = {i: ((i + 1) % length, (i - 1) % length) for i in range(length)}
    outer = [0] + list(range(length - 1, 0, -1))
    return build_embedding(rotation, outer)


def insert_ear(
    g: PlaneGraph, face_id: int, i: int, j: int, length: int
) -> tuple[dict[int, list[int]], list[int]]:
    """Rotation after drawing a path with `length` edges inside the face from
    its i-th to its j-th corner."""
    face = g.faces[face_id]
    a, b = face[i], face[j]
    first_new = max(g.vertices) + 1
    path = [a] + list(range(first_new, first_new + length - 1)) + [b]
    rotation = {v: list(nbrs) for v, nbrs in g.rotation.items()}
    for corner, nb in ((i, path[1]), (j, path[-2])):
        v = face[corner]
        succ = face[(corner + 1) % len(face)]
        # the face sector at v opens right after its successor on the walk
        rotation[v].insert(rotation[v].index(succ) + 1, nb)
    for k in range(1, len(path) - 1):
        rotation[path[k]] = [path[k - 1], path[k + 1]]
    return rotation, path


def generate_class_graph(
    target_n: int,
    seed: int = 0,
    boundary_len: int | None = None,
    max_tries: int = 2000,
) -> PlaneGraph:
    """Grow a 2-connected member of the class inside a good boundary cycle by
    repeatedly adding ears in bounded faces, rejecting any ear that closes a
    4- or 5-cycle or a chord of the boundary."""
    rng = random.Random(seed)
    if boundary_len is None:
        boundary_len = rng.choice(START_CYCLE_LENGTHS)
    if boundary_len not in START_CYCLE_LENGTHS:
        raise PreconditionViolated(
            f"boundary length {boundary_len} is not one of {START_CYCLE_LENGTHS}"
        )
    if target_n < boundary_len:
        raise PreconditionViolated(
            f"target {target_n} vertices is below the boundary length {boundary_len}"
        )
    g = cycle_graph(boundary_len)
    failures = 0
    while g.vertex_count < target_n:
        if failures >= max_tries:
            raise GenerationStalled(
                f"no admissible ear after {failures} tries at {g.vertex_count} vertices"
            )
        face_id = rng.choice(g.bounded_face_ids())
        face = g.faces[face_id]
        i, j = sorted(rng.sample(range(len(face)), 2))
        length = rng.randint(1, min(4, target_n - g.vertex_count + 1))
        if length == 1 and (
            g.has_edge(face[i], face[j])
            or (face[i] in g.boundary_vertices and face[j] in g.boundary_vertices)
        ):
            failures += 1
            continue
        rotation, path = insert_ear(g, face_id, i, j, length)
        if has_4_or_5_cycle(rotation):
            failures += 1
            continue
        g = build_embedding(rotation, g.outer_face)
        get_logger().debug("added ear %s", path)
    get_logger().debug("generated %s after %s rejected ears", g, failures)
    return g


def wrap_core(
    core: Mapping[int, Sequence[int]], boundary_len: int = 7, hops: int = 3
) -> PlaneGraph:
    """Surround a plane core with a boundary cycle of boundary_len vertices.

    Every leaf of the core is joined to the boundary by a path with hops edges,
    leaves spread over the boundary in their counter-clockwise order. The core
    must have no 4- or 5-cycles and all its leaves on its outer walk; with
    hops >= 3 every cycle leaving the core is then longer than 7.
    """
    assert hops >= 1 and boundary_len >= 3
    faces = trace_faces(core)
    outer = max(faces, key=len)
    leaves = [v for v, nbrs in core.items() if len(nbrs) == 1]
    # the outer walk goes clockwise around the core
    order = list(dict.fromkeys(v for v in reversed(outer) if v in leaves))
    if len(order) != len(leaves):
        raise PreconditionViolated(
            f"leaves {sorted(set(leaves) - set(order))} are not on the outer walk"
        )
    first = max(core) + 1
    boundary = list(range(first, first + boundary_len))
    rotation: dict[int, list[int]] = {v: list(nbrs) for v, nbrs in core.items()}
    attached: dict[int, list[int]] = {b: [] for b in boundary}
    next_id = first + boundary_len
    for position, leaf in enumerate(order):
        b = boundary[position * boundary_len // len(order)]
        path = [leaf] + list(range(next_id, next_id + hops - 1)) + [b]
        next_id += hops - 1
        rotation[leaf].append(path[1])
        for k in range(1, len(path) - 1):
            rotation[path[k]] = [path[k - 1], path[k + 1]]
        attached[b].append(path[-2])
    for j, b in enumerate(boundary):
        rotation[b] = (
            [boundary[(j + 1) % boundary_len]]
            + attached[b][::-1]
            + [boundary[j - 1]]
        )
    g = build_embedding(rotation, [boundary[0]] + boundary[:0:-1])
    if has_4_or_5_cycle(g.rotation):
        raise PreconditionViolated("the core contains a 4- or 5-cycle")
    get_logger().debug("wrapped a core of %s vertices into %s", len(core), g)
    return g
