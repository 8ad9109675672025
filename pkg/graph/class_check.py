from dataclasses import dataclass, field

import networkx as nx

from graph.cycle import GOOD_CYCLE_LENGTH, short_cycles
from graph.plane_graph import PlaneGraph, normalize_edge


@dataclass
class ClassReport:
    four_cycle: tuple[int, ...] | None = None
    five_cycle: tuple[int, ...] | None = None
    connected: bool = False
    two_connected: bool = False
    boundary_is_cycle: bool = False
    boundary_is_good: bool = False
    chords: list[tuple[int, int]] = field(default_factory=list)

    @property
    def has_4_cycle(self) -> bool:
        return self.four_cycle is not None

    @property
    def has_5_cycle(self) -> bool:
        return self.five_cycle is not None

    @property
    def in_class(self) -> bool:
        return self.connected and not self.has_4_cycle and not self.has_5_cycle

    @property
    def legal_instance(self) -> bool:
        """In class with a chordless good boundary cycle and 2-connected."""
        return (
            self.in_class
            and self.two_connected
            and self.boundary_is_good
            and not self.chords
        )

    def to_dict(self) -> dict:
        return {
            "in_class": self.in_class,
            "four_cycle": list(self.four_cycle) if self.four_cycle else None,
            "five_cycle": list(self.five_cycle) if self.five_cycle else None,
            "connected": self.connected,
            "two_connected": self.two_connected,
            "boundary_is_cycle": self.boundary_is_cycle,
            "boundary_is_good": self.boundary_is_good,
            "chords": [list(chord) for chord in self.chords],
        }


def has_4_or_5_cycle(adjacency) -> bool:
    return any(len(cycle) >= 4 for cycle in short_cycles(adjacency, 5))


def boundary_chords(g: PlaneGraph, boundary: tuple[int, ...]) -> list[tuple[int, int]]:
    boundary_edges = {
        normalize_edge(boundary[i], boundary[(i + 1) % len(boundary)])
        for i in range(len(boundary))
    }
    on_boundary = frozenset(boundary)
    return [
        (u, v)
        for u, v in g.edges
        if u in on_boundary and v in on_boundary and (u, v) not in boundary_edges
    ]


def check_class_p45(g: PlaneGraph) -> ClassReport:
    report = ClassReport()
    cycles = short_cycles(g.rotation, 5)
    report.four_cycle = next((c for c in cycles if len(c) == 4), None)
    report.five_cycle = next((c for c in cycles if len(c) == 5), None)
    graph = g.nx_graph
    report.connected = nx.is_connected(graph)
    report.two_connected = (
        report.connected
        and graph.number_of_nodes() >= 3
        and not any(True for _ in nx.articulation_points(graph))
    )
    boundary = g.outer_face
    report.boundary_is_cycle = len(boundary) >= 3 and len(set(boundary)) == len(
        boundary
    )
    if report.boundary_is_cycle:
        report.boundary_is_good = len(boundary) <= GOOD_CYCLE_LENGTH
        report.chords = boundary_chords(g, boundary)
    return report
