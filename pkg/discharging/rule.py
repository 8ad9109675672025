from collections import Counter
from collections.abc import Callable, Iterator
from enum import Enum

from cyy_naive_lib.log import get_logger

from discharging.ledger import ChargeLedger, Element, Transfer, face, vertex
from error import PreconditionViolated
from graph.plane_graph import PlaneGraph, normalize_edge
from graph.profile import VertexProfile, profiles

Profiles = dict[int, VertexProfile]


class Rule(str, Enum):
    R1 = "R1"
    R2_1 = "R2(1)"
    R2_2 = "R2(2)"
    R3 = "R3"
    R4 = "R4"
    R5_1 = "R5(1)"
    R5_2 = "R5(2)"
    R6_1 = "R6(1)"
    R6_2 = "R6(2)"


# half-units
AMOUNTS: dict[Rule, int] = {
    Rule.R1: 2,
    Rule.R2_1: 1,
    Rule.R2_2: 2,
    Rule.R3: 1,
    Rule.R4: 4,
    Rule.R5_1: 3,
    Rule.R5_2: 2,
    Rule.R6_1: 2,
    Rule.R6_2: 1,
}


def _triangle_with(g: PlaneGraph, v: int, u: int) -> tuple[int, ...]:
    (w, *_) = sorted(g.common_neighbors(v, u))
    return tuple(sorted((v, u, w)))


def _send(
    source: Element, target: Element, rule: Rule, via: tuple[int, ...] = ()
) -> Transfer:
    return Transfer(
        source=source, target=target, amount=AMOUNTS[rule], rule=rule.value, via=via
    )


def internal_triangles(g: PlaneGraph, p: Profiles) -> Iterator[Transfer]:
    """Every internal 3-face receives 1 from each of its vertices."""
    for face_id in g.bounded_face_ids():
        walk = g.faces[face_id]
        if len(walk) != 3:
            continue
        for v in walk:
            yield _send(vertex(v), face(face_id), Rule.R1, tuple(sorted(walk)))


def triangular_3_vertices(g: PlaneGraph, p: Profiles) -> Iterator[Transfer]:
    for v in g.internal_vertices:
        if p[v].degree != 3 or not p[v].is_triangular:
            continue
        isolated = p[v].isolated_neighbors
        if p[v].is_poor:
            for u in sorted(set(g.neighbors(v)) - isolated):
                yield _send(vertex(u), vertex(v), Rule.R2_1, _triangle_with(g, v, u))
            continue
        # a triangular 3-vertex has one isolated neighbor when triangles are
        # pairwise edge-disjoint
        assert len(isolated) == 1, v
        (v_prime,) = isolated
        yield _send(vertex(v_prime), vertex(v), Rule.R2_2, normalize_edge(v, v_prime))


def poor_4_vertices(g: PlaneGraph, p: Profiles) -> Iterator[Transfer]:
    for v in g.internal_vertices:
        if p[v].degree != 4 or not p[v].is_poor:
            continue
        for u in sorted(set(g.neighbors(v)) - p[v].isolated_neighbors):
            yield _send(vertex(u), vertex(v), Rule.R3, _triangle_with(g, v, u))


def external_vertices(g: PlaneGraph, p: Profiles) -> Iterator[Transfer]:
    f0 = face(g.outer_face_id)
    for v in g.boundary_cycle():
        rule = None
        match p[v].degree, p[v].triangle_count:
            case 2, _:
                rule = Rule.R4
            case 3, 0:
                rule = Rule.R5_2
            case 3, _:
                rule = Rule.R5_1
            case 4, 1:
                rule = Rule.R6_2
            case 4, count if count >= 2:
                rule = Rule.R6_1
        if rule is not None:
            yield _send(f0, vertex(v), rule)


RULES: dict[str, Callable[[PlaneGraph, Profiles], Iterator[Transfer]]] = {
    "R1": internal_triangles,
    "R2": triangular_3_vertices,
    "R3": poor_4_vertices,
    "R4-R6": external_vertices,
}


def check_exclusive(ledger: ChargeLedger) -> list[str]:
    """Vertices receiving under both branches of a split rule."""
    branches: dict[tuple[Element, str], set[str]] = {}
    for t in ledger.transfers:
        if t.rule[:2] in ("R5", "R6"):
            branches.setdefault((t.target, t.rule[:2]), set()).add(t.rule)
    return [
        f"{target} receives under {sorted(rules)}"
        for (target, _), rules in sorted(branches.items())
        if len(rules) > 1
    ]


def apply_rules(g: PlaneGraph, ledger: ChargeLedger) -> ChargeLedger:
    """A copy of the initial ledger after every rule has fired once per
    qualifying incidence."""
    if ledger.transfers:
        raise PreconditionViolated("rules apply to a ledger of initial charges only")
    result = ledger.copy()
    p = profiles(g)
    for name, rule in RULES.items():
        count = 0
        for t in rule(g, p):
            result.transfer(t)
            count += 1
        get_logger().debug("%s: %s transfer(s)", name, count)
    assert result.total() == ledger.total()
    assert not check_exclusive(result)
    assert all(t.amount in (1, 2, 3, 4) for t in result.transfers)
    get_logger().debug(
        "transfers by rule: %s", dict(Counter(t.rule for t in result.transfers))
    )
    return result
