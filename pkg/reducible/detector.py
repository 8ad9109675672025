import itertools
from collections.abc import Callable, Iterator

from cyy_naive_lib.log import get_logger

from error import PreconditionViolated
from graph.class_check import check_class_p45
from graph.plane_graph import PlaneGraph, normalize_edge
from graph.profile import VertexProfile, internal_isolated_3_neighbors, profiles
from reducible.config_report import ConfigKind, ConfigReport
from reducible.trivial import (
    chords,
    cut_vertices,
    internal_low_degree,
    non_triangle_2_paths,
    separating_good_cycles,
    splitting_3_paths,
)

Profiles = dict[int, VertexProfile]


def _is_internal_3(p: Profiles, v: int) -> bool:
    return p[v].is_internal and p[v].degree == 3


def _star_edges(center: int, leaves: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    return tuple(normalize_edge(center, leaf) for leaf in leaves)


def claw_at_4_vertex(g: PlaneGraph, p: Profiles) -> list[ConfigReport]:
    """An internal 4-vertex with three pairwise non-adjacent internal
    3-neighbors."""
    reports = []
    for v in g.internal_vertices:
        if p[v].degree != 4:
            continue
        small = sorted(u for u in g.neighbors(v) if _is_internal_3(p, u))
        for leaves in itertools.combinations(small, 3):
            if any(g.has_edge(a, b) for a, b in itertools.combinations(leaves, 2)):
                continue
            reports.append(
                ConfigReport(
                    kind=ConfigKind.L10_Claw4,
                    witness=(v,) + leaves,
                    edges=_star_edges(v, leaves),
                    roles={"v": v, "v1": leaves[0], "v2": leaves[1], "v3": leaves[2]},
                )
            )
    return reports


def adjacent_4_vertices(g: PlaneGraph, p: Profiles) -> list[ConfigReport]:
    """Adjacent internal 4-vertices u, v with neighbors u1, u2, u3, v1, v2, v3
    in cyclic order around uv such that v1, v2 are non-adjacent internal
    3-vertices. Both readings of the cyclic order are tried."""
    reports = []
    for u in g.internal_vertices:
        if p[u].degree != 4:
            continue
        for v in g.neighbors(u):
            if not p[v].is_internal or p[v].degree != 4:
                continue
            ccw_u = g.rotation_after(u, v)
            ccw_v = g.rotation_after(v, u)
            readings = {
                "ccw": (ccw_u, ccw_v),
                "cw": (ccw_u[::-1], ccw_v[::-1]),
            }
            for variant, (arc_u, arc_v) in readings.items():
                v1, v2, v3 = arc_v
                if not (_is_internal_3(p, v1) and _is_internal_3(p, v2)):
                    continue
                if g.has_edge(v1, v2) or {v1, v2} & set(arc_u):
                    continue
                roles = {
                    "u": u,
                    "v": v,
                    "u1": arc_u[0],
                    "u2": arc_u[1],
                    "u3": arc_u[2],
                    "v1": v1,
                    "v2": v2,
                    "v3": v3,
                }
                reports.append(
                    ConfigReport(
                        kind=ConfigKind.L11_Adjacent4s,
                        witness=(u, v, v1, v2),
                        edges=_star_edges(v, (u, v1, v2)),
                        roles=roles,
                        variant=variant,
                    )
                )
    return reports


def _triangle_orders(g: PlaneGraph) -> Iterator[tuple[int, int, int]]:
    for triangle in g.triangles:
        for v, u in itertools.permutations(triangle, 2):
            (w,) = set(triangle) - {u, v}
            yield u, v, w


def triangle_poor_small(g: PlaneGraph, p: Profiles) -> list[ConfigReport]:
    """A triangle uvw with v poor and u internal of degree 3 or 4."""
    reports = []
    for u, v, w in _triangle_orders(g):
        if not p[v].is_poor or not p[u].is_internal or p[u].degree not in (3, 4):
            continue
        isolated = internal_isolated_3_neighbors(g, v)
        roles = {"u": u, "v": v, "w": w}
        if p[v].degree == 3:
            roles["p1"] = isolated[0]
            z = (u, v, isolated[0])
        else:
            roles["p1"], roles["p2"] = isolated[:2]
            z = (u, v) + tuple(isolated[:2])
        reports.append(
            ConfigReport(
                kind=ConfigKind.L12_TrianglePoorSmallU,
                witness=z,
                edges=_star_edges(v, tuple(x for x in z if x != v)),
                roles=roles,
                variant=f"u{p[u].degree}-poor{p[v].degree}",
            )
        )
    return reports


def five_star(g: PlaneGraph, p: Profiles) -> list[ConfigReport]:
    """An internal 5-vertex whose five neighbors are isolated internal
    3-vertices."""
    reports = []
    for v in g.internal_vertices:
        if p[v].degree != 5:
            continue
        leaves = tuple(internal_isolated_3_neighbors(g, v))
        if len(leaves) < 5:
            continue
        reports.append(
            ConfigReport(
                kind=ConfigKind.L13_FiveStar,
                witness=(v,) + leaves,
                edges=_star_edges(v, leaves),
                roles={"v": v} | {f"v{i + 1}": leaf for i, leaf in enumerate(leaves)},
            )
        )
    return reports


def _isolated_around(g: PlaneGraph, v: int, start: int) -> list[int]:
    isolated = set(internal_isolated_3_neighbors(g, v))
    return [x for x in g.rotation_after(v, start) if x in isolated]


def broom_at_poor_3(g: PlaneGraph, p: Profiles) -> list[ConfigReport]:
    """A triangle uvw with u a poor 3-vertex, v an internal 5-vertex with
    three internal isolated 3-neighbors; u' is the isolated neighbor of u."""
    reports = []
    for u, v, w in _triangle_orders(g):
        if not (p[u].is_poor and p[u].degree == 3):
            continue
        if not p[v].is_internal or p[v].degree != 5:
            continue
        leaves = _isolated_around(g, v, w)
        if len(leaves) < 3:
            continue
        u_prime = internal_isolated_3_neighbors(g, u)[0]
        z = (u_prime, u, v) + tuple(leaves)
        reports.append(
            ConfigReport(
                kind=ConfigKind.L14_Broom,
                witness=z,
                edges=(normalize_edge(u_prime, u), normalize_edge(u, v))
                + _star_edges(v, tuple(leaves)),
                roles={
                    "u": u,
                    "v": v,
                    "w": w,
                    "u_prime": u_prime,
                    "v1": leaves[0],
                    "v2": leaves[1],
                    "v3": leaves[2],
                },
            )
        )
    return reports


def double_claw_at_poor_4(g: PlaneGraph, p: Profiles) -> list[ConfigReport]:
    """A triangle uvw with u a poor 4-vertex and v an internal 5-vertex with
    three internal isolated 3-neighbors; the middle one of them, read around v
    from w, is identified with w."""
    reports = []
    for u, v, w in _triangle_orders(g):
        if not (p[u].is_poor and p[u].degree == 4):
            continue
        if not p[v].is_internal or p[v].degree != 5:
            continue
        leaves = _isolated_around(g, v, w)
        if len(leaves) < 3:
            continue
        u1, u2 = internal_isolated_3_neighbors(g, u)[:2]
        v1, v2, v3 = leaves
        reports.append(
            ConfigReport(
                kind=ConfigKind.L15_DoubleClaw,
                witness=(u1, u2, u, v, v1, v3),
                edges=(normalize_edge(u, v),)
                + _star_edges(u, (u1, u2))
                + _star_edges(v, (v1, v3)),
                roles={
                    "u": u,
                    "v": v,
                    "w": w,
                    "u1": u1,
                    "u2": u2,
                    "v1": v1,
                    "v2": v2,
                    "v3": v3,
                },
            )
        )
    return reports


Detector = Callable[[PlaneGraph, Profiles], list[ConfigReport]]

DETECTORS: dict[ConfigKind, Detector] = {
    ConfigKind.InternalDeg2: lambda g, p: internal_low_degree(g),
    ConfigKind.CutVertex: lambda g, p: cut_vertices(g),
    ConfigKind.SeparatingGoodCycle: lambda g, p: separating_good_cycles(g),
    ConfigKind.BoundaryChord: lambda g, p: chords(g),
    ConfigKind.SplitPath2NonTriangle: lambda g, p: non_triangle_2_paths(g),
    ConfigKind.SplitPath3: lambda g, p: splitting_3_paths(g),
    ConfigKind.L10_Claw4: claw_at_4_vertex,
    ConfigKind.L11_Adjacent4s: adjacent_4_vertices,
    ConfigKind.L12_TrianglePoorSmallU: triangle_poor_small,
    ConfigKind.L13_FiveStar: five_star,
    ConfigKind.L14_Broom: broom_at_poor_3,
    ConfigKind.L15_DoubleClaw: double_claw_at_poor_4,
}


def require_instance(g: PlaneGraph) -> None:
    report = check_class_p45(g)
    if not report.in_class:
        raise PreconditionViolated(f"{g} is not a connected graph without 4- and 5-cycles")
    if not report.boundary_is_good:
        raise PreconditionViolated(f"outer face {g.outer_face} is not a good cycle")


def find_reducible(
    g: PlaneGraph, kinds: list[ConfigKind] | None = None
) -> list[ConfigReport]:
    """Every occurrence of the requested configuration kinds (all by default)."""
    require_instance(g)
    p = profiles(g)
    reports = []
    for kind in DETECTORS if kinds is None else kinds:
        found = DETECTORS[kind](g, p)
        if found:
            get_logger().debug("%s: %s occurrence(s)", kind.value, len(found))
        reports.extend(found)
    return reports
