import networkx as nx

from graph.class_check import boundary_chords
from graph.cycle import GOOD_CYCLE_LENGTH, cycle_edges, enumerate_short_cycles, splitting_paths
from graph.plane_graph import PlaneGraph, normalize_edge
from reducible.config_report import ConfigKind, ConfigReport


def internal_low_degree(g: PlaneGraph) -> list[ConfigReport]:
    return [
        ConfigReport(
            kind=ConfigKind.InternalDeg2,
            witness=(v,),
            roles={"v": v},
            variant=f"degree-{g.degree(v)}",
        )
        for v in sorted(g.internal_vertices)
        if g.degree(v) <= 2
    ]


def cut_vertices(g: PlaneGraph) -> list[ConfigReport]:
    return [
        ConfigReport(kind=ConfigKind.CutVertex, witness=(v,), roles={"v": v})
        for v in sorted(nx.articulation_points(g.nx_graph))
    ]


def separating_good_cycles(g: PlaneGraph) -> list[ConfigReport]:
    return [
        ConfigReport(
            kind=ConfigKind.SeparatingGoodCycle,
            witness=cycle.vertices,
            edges=tuple(cycle.edges()),
            variant=f"length-{cycle.length}",
        )
        for cycle in enumerate_short_cycles(g, GOOD_CYCLE_LENGTH)
        if cycle.is_separating
    ]


def chords(g: PlaneGraph) -> list[ConfigReport]:
    return [
        ConfigReport(kind=ConfigKind.BoundaryChord, witness=chord, edges=(chord,))
        for chord in boundary_chords(g, g.boundary_cycle())
    ]


def _boundary_edges(g: PlaneGraph) -> frozenset[tuple[int, int]]:
    return frozenset(cycle_edges(g.boundary_cycle()))


def _path_report(kind: ConfigKind, path: tuple[int, ...]) -> ConfigReport:
    edges = tuple(normalize_edge(path[i], path[i + 1]) for i in range(len(path) - 1))
    return ConfigReport(kind=kind, witness=path, edges=edges)


def non_triangle_2_paths(g: PlaneGraph) -> list[ConfigReport]:
    """Splitting paths xyz whose ends are not consecutive on the boundary."""
    boundary_edges = _boundary_edges(g)
    return [
        _path_report(ConfigKind.SplitPath2NonTriangle, path)
        for path in splitting_paths(g, 2)
        if len(path) == 3 and normalize_edge(path[0], path[2]) not in boundary_edges
    ]


def splitting_3_paths(g: PlaneGraph) -> list[ConfigReport]:
    return [
        _path_report(ConfigKind.SplitPath3, path)
        for path in splitting_paths(g, 3)
        if len(path) == 4
    ]
