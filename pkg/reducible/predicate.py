"""Re-check of a report's defining predicate from raw adjacency.

Nothing here goes through VertexProfile or the detectors, so a detector bug
cannot hide behind a predicate bug of the same shape.
"""

import itertools
from collections.abc import Callable

import networkx as nx

from graph.cycle import GOOD_CYCLE_LENGTH, cycle_edges, cycle_sides
from graph.plane_graph import PlaneGraph, normalize_edge
from reducible.config_report import ConfigKind, ConfigReport


def _triangular(g: PlaneGraph, a: int, b: int) -> bool:
    return bool(g.adjacency(a) & g.adjacency(b))


def _internal_3(g: PlaneGraph, x: int) -> bool:
    return x not in g.boundary_vertices and len(g.adjacency(x)) == 3


def _isolated_internal_3(g: PlaneGraph, v: int, x: int) -> bool:
    return g.has_edge(v, x) and _internal_3(g, x) and not _triangular(g, v, x)


def _poor(g: PlaneGraph, v: int) -> bool:
    if v in g.boundary_vertices:
        return False
    nbrs = g.adjacency(v)
    if not any(g.has_edge(a, b) for a, b in itertools.combinations(nbrs, 2)):
        return False
    small = sum(1 for x in nbrs if _isolated_internal_3(g, v, x))
    match len(nbrs):
        case 3:
            return small >= 1
        case 4:
            return small >= 2
    return False


def _is_path(g: PlaneGraph, path: tuple[int, ...]) -> bool:
    return len(set(path)) == len(path) and all(
        g.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1)
    )


def _splitting(g: PlaneGraph, path: tuple[int, ...]) -> bool:
    d = g.boundary_vertices
    return (
        _is_path(g, path)
        and path[0] in d
        and path[-1] in d
        and not d & set(path[1:-1])
    )


def _is_triangle(g: PlaneGraph, a: int, b: int, c: int) -> bool:
    return g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)


def _internal_deg(g: PlaneGraph, v: int, degree: int) -> bool:
    return v not in g.boundary_vertices and g.degree(v) == degree


def _low_degree(g: PlaneGraph, r: ConfigReport) -> bool:
    (v,) = r.witness
    return v not in g.boundary_vertices and g.degree(v) <= 2


def _cut_vertex(g: PlaneGraph, r: ConfigReport) -> bool:
    (v,) = r.witness
    rest = g.nx_graph.copy()
    rest.remove_node(v)
    return rest.number_of_nodes() > 0 and not nx.is_connected(rest)


def _separating_cycle(g: PlaneGraph, r: ConfigReport) -> bool:
    cycle = r.witness
    if not 3 <= len(cycle) <= GOOD_CYCLE_LENGTH or not _is_path(g, cycle):
        return False
    if not g.has_edge(cycle[-1], cycle[0]):
        return False
    interior, exterior = cycle_sides(g, cycle)
    return bool(interior) and bool(exterior)


def _chord(g: PlaneGraph, r: ConfigReport) -> bool:
    u, v = r.witness
    d = g.boundary_cycle()
    return (
        g.has_edge(u, v)
        and u in d
        and v in d
        and normalize_edge(u, v) not in cycle_edges(d)
    )


def _split_path_2(g: PlaneGraph, r: ConfigReport) -> bool:
    path = r.witness
    return (
        len(path) == 3
        and _splitting(g, path)
        and normalize_edge(path[0], path[2]) not in cycle_edges(g.boundary_cycle())
    )


def _split_path_3(g: PlaneGraph, r: ConfigReport) -> bool:
    return len(r.witness) == 4 and _splitting(g, r.witness)


def _claw_4(g: PlaneGraph, r: ConfigReport) -> bool:
    v, *leaves = r.witness
    return (
        _internal_deg(g, v, 4)
        and len(set(leaves)) == 3
        and all(g.has_edge(v, x) and _internal_3(g, x) for x in leaves)
        and not any(g.has_edge(a, b) for a, b in itertools.combinations(leaves, 2))
    )


def _adjacent_4s(g: PlaneGraph, r: ConfigReport) -> bool:
    u, v, v1, v2 = (r.roles[k] for k in ("u", "v", "v1", "v2"))
    if not (g.has_edge(u, v) and _internal_deg(g, u, 4) and _internal_deg(g, v, 4)):
        return False
    if not (_internal_3(g, v1) and _internal_3(g, v2)) or g.has_edge(v1, v2):
        return False
    arc = g.rotation_after(v, u)
    return (v1, v2) in ((arc[0], arc[1]), (arc[2], arc[1]))


def _triangle_poor(g: PlaneGraph, r: ConfigReport) -> bool:
    u, v, w = (r.roles[k] for k in ("u", "v", "w"))
    if not _is_triangle(g, u, v, w) or not _poor(g, v):
        return False
    if u in g.boundary_vertices or g.degree(u) not in (3, 4):
        return False
    picked = [r.roles[k] for k in ("p1", "p2") if k in r.roles]
    return len(picked) == g.degree(v) - 2 and all(
        _isolated_internal_3(g, v, x) for x in picked
    )


def _five_star(g: PlaneGraph, r: ConfigReport) -> bool:
    v, *leaves = r.witness
    return (
        _internal_deg(g, v, 5)
        and set(leaves) == g.adjacency(v)
        and all(_isolated_internal_3(g, v, x) for x in leaves)
    )


def _v_side(g: PlaneGraph, r: ConfigReport) -> bool:
    v = r.roles["v"]
    leaves = [r.roles[k] for k in ("v1", "v2", "v3")]
    return (
        _internal_deg(g, v, 5)
        and len(set(leaves)) == 3
        and all(_isolated_internal_3(g, v, x) for x in leaves)
    )


def _broom(g: PlaneGraph, r: ConfigReport) -> bool:
    u, v, w, u_prime = (r.roles[k] for k in ("u", "v", "w", "u_prime"))
    return (
        _is_triangle(g, u, v, w)
        and _internal_deg(g, u, 3)
        and _poor(g, u)
        and _isolated_internal_3(g, u, u_prime)
        and _v_side(g, r)
    )


def _double_claw(g: PlaneGraph, r: ConfigReport) -> bool:
    u, v, w = (r.roles[k] for k in ("u", "v", "w"))
    if not (_is_triangle(g, u, v, w) and _internal_deg(g, u, 4) and _poor(g, u)):
        return False
    if not all(_isolated_internal_3(g, u, r.roles[k]) for k in ("u1", "u2")):
        return False
    order = [x for x in g.rotation_after(v, w) if x in {r.roles[k] for k in ("v1", "v2", "v3")}]
    return _v_side(g, r) and order == [r.roles[k] for k in ("v1", "v2", "v3")]


PREDICATES: dict[ConfigKind, Callable[[PlaneGraph, ConfigReport], bool]] = {
    ConfigKind.InternalDeg2: _low_degree,
    ConfigKind.CutVertex: _cut_vertex,
    ConfigKind.SeparatingGoodCycle: _separating_cycle,
    ConfigKind.BoundaryChord: _chord,
    ConfigKind.SplitPath2NonTriangle: _split_path_2,
    ConfigKind.SplitPath3: _split_path_3,
    ConfigKind.L10_Claw4: _claw_4,
    ConfigKind.L11_Adjacent4s: _adjacent_4s,
    ConfigKind.L12_TrianglePoorSmallU: _triangle_poor,
    ConfigKind.L13_FiveStar: _five_star,
    ConfigKind.L14_Broom: _broom,
    ConfigKind.L15_DoubleClaw: _double_claw,
}


def witness_holds(g: PlaneGraph, report: ConfigReport) -> bool:
    try:
        return PREDICATES[report.kind](g, report)
    except (KeyError, ValueError):
        # a role missing or a vertex absent from g
        return False
