from collections.abc import Mapping
from dataclasses import dataclass, field, replace
from typing import NamedTuple

from cyy_naive_lib.log import get_logger

from cover.cover import Cover
from cover.residual import outside_degree
from error import LemmaViolated, PreconditionViolated, UnsupportedKind
from graph.plane_graph import Edge, PlaneGraph, normalize_edge
from graph.profile import profiles
from reducible.config_report import ConfigKind, ConfigReport
from reducible.detector import adjacent_4_vertices
from tree_colorer.tree_shape import LIST_SIZES, ShapeKind, TreeShape

# list size of every vertex before anything is deleted, in units of m
FULL_SIZE = 7


class Identification(NamedTuple):
    x: int
    y: int
    z: int


@dataclass(frozen=True)
class ReductionPlan:
    """How a reducible configuration is colored: delete z_set (merging x and
    y at z if there is an identification), color the rest, then finish G[Z]
    with a tree colorer."""

    kind: ConfigKind
    z_set: frozenset[int]
    shape: TreeShape
    identification: Identification | None = None
    # cover edges that must pair equal indices before solving
    straight_edges: tuple[Edge, ...] = ()
    # vertex -> residual list size in units of m
    residual_sizes: Mapping[int, int] = field(default_factory=dict)
    variant: str = ""

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "z": sorted(self.z_set),
            "identification": None
            if self.identification is None
            else self.identification._asdict(),
            "shape": self.shape.to_dict(),
            "straight_edges": [list(e) for e in self.straight_edges],
            "residual_sizes": {str(v): k for v, k in sorted(self.residual_sizes.items())},
            "variant": self.variant,
        }


def _shape_plan(
    report: ConfigReport,
    kind: ShapeKind,
    roles: Mapping[str, int],
    identification: Identification | None = None,
) -> ReductionPlan:
    shape = TreeShape(kind, roles)
    straight_edges: tuple[Edge, ...] = ()
    if identification is not None:
        straight_edges = (
            normalize_edge(identification.x, identification.z),
            normalize_edge(identification.y, identification.z),
        )
    return ReductionPlan(
        kind=report.kind,
        z_set=shape.vertices,
        shape=shape,
        identification=identification,
        straight_edges=straight_edges,
        residual_sizes={
            v: LIST_SIZES[kind][role] for role, v in shape.roles.items()
        },
        variant=report.variant,
    )


def _claw_4(report: ConfigReport, g: PlaneGraph) -> ReductionPlan:
    r = report.roles
    return _shape_plan(
        report, ShapeKind.claw, {"u": r["v"], "v1": r["v1"], "v2": r["v2"], "v3": r["v3"]}
    )


def _adjacent_4s(report: ConfigReport, g: PlaneGraph) -> ReductionPlan:
    r = report.roles
    return _shape_plan(
        report,
        ShapeKind.claw,
        {"u": r["v"], "v1": r["u"], "v2": r["v1"], "v3": r["v2"]},
        Identification(x=r["u3"], y=r["u1"], z=r["u"]),
    )


def _opposite(g: PlaneGraph, z: int, x: int) -> int:
    nbrs = g.neighbors(z)
    return nbrs[(nbrs.index(x) + 2) % len(nbrs)]


def _triangle_poor(report: ConfigReport, g: PlaneGraph) -> ReductionPlan:
    r = report.roles
    match report.variant:
        case "u3-poor3":
            return _shape_plan(
                report, ShapeKind.path3, {"u": r["v"], "v1": r["u"], "v2": r["p1"]}
            )
        case "u3-poor4":
            return _shape_plan(
                report,
                ShapeKind.claw,
                {"u": r["v"], "v1": r["u"], "v2": r["p1"], "v3": r["p2"]},
            )
        case "u4-poor3":
            # w and the neighbor of u across from it, which is next to v
            y = _opposite(g, r["u"], r["w"])
            if y == r["v"]:
                raise PreconditionViolated(
                    f"triangle {r['u']}{r['v']}{r['w']} is not a face at {r['u']}"
                )
            return _shape_plan(
                report,
                ShapeKind.path3,
                {"u": r["v"], "v1": r["u"], "v2": r["p1"]},
                Identification(x=r["w"], y=y, z=r["u"]),
            )
        case "u4-poor4":
            return _poor_4_next_to_4(report, g)
    raise UnsupportedKind(f"{report.kind.value} has no variant {report.variant}")


def _poor_4_next_to_4(report: ConfigReport, g: PlaneGraph) -> ReductionPlan:
    """u and the poor v are adjacent internal 4-vertices, so the adjacent
    4-vertex reduction applies to the pair."""
    u, v = report.roles["u"], report.roles["v"]
    for adjacent in adjacent_4_vertices(g, profiles(g)):
        if (adjacent.roles["u"], adjacent.roles["v"]) == (u, v):
            return replace(
                _adjacent_4s(adjacent, g), kind=report.kind, variant=report.variant
            )
    raise PreconditionViolated(
        f"{u} and {v} do not form adjacent 4-vertices with two isolated "
        f"internal 3-neighbors of {v} next to {u}"
    )


def _five_star(report: ConfigReport, g: PlaneGraph) -> ReductionPlan:
    return _shape_plan(report, ShapeKind.star5, dict(report.roles))


def _broom(report: ConfigReport, g: PlaneGraph) -> ReductionPlan:
    r = report.roles
    return _shape_plan(
        report,
        ShapeKind.broom,
        {
            "u": r["u_prime"],
            "w": r["u"],
            "v": r["v"],
            "v1": r["v1"],
            "v2": r["v2"],
            "v3": r["v3"],
        },
    )


def _double_claw(report: ConfigReport, g: PlaneGraph) -> ReductionPlan:
    r = report.roles
    return _shape_plan(
        report,
        ShapeKind.double_claw,
        {
            "u": r["u"],
            "v": r["v"],
            "u1": r["u1"],
            "u2": r["u2"],
            "v1": r["v1"],
            "v2": r["v3"],
        },
        Identification(x=r["w"], y=r["v2"], z=r["v"]),
    )


PLANNERS = {
    ConfigKind.L10_Claw4: _claw_4,
    ConfigKind.L11_Adjacent4s: _adjacent_4s,
    ConfigKind.L12_TrianglePoorSmallU: _triangle_poor,
    ConfigKind.L13_FiveStar: _five_star,
    ConfigKind.L14_Broom: _broom,
    ConfigKind.L15_DoubleClaw: _double_claw,
}


def guaranteed_size(g: PlaneGraph, plan: ReductionPlan, v: int) -> int:
    """Lower bound on the residual list of v in units of m: every outside
    neighbor costs 2, the identified pair costs 2 only once."""
    outside = outside_degree(g, v, plan.z_set)
    if plan.identification is not None and v == plan.identification.z:
        outside -= 1
    return FULL_SIZE - 2 * outside


def check_plan(g: PlaneGraph, plan: ReductionPlan) -> None:
    induced = {
        normalize_edge(u, v)
        for u in plan.z_set
        for v in g.neighbors(u)
        if v in plan.z_set
    }
    if induced != set(plan.shape.edges):
        raise LemmaViolated(
            f"G[Z] has edges {sorted(induced)}, {plan.shape} needs {plan.shape.edges}"
        )
    for v, needed in plan.residual_sizes.items():
        if not g.is_internal(v):
            raise LemmaViolated(f"{v} of Z lies on the boundary")
        kept = guaranteed_size(g, plan, v)
        if kept < needed:
            raise LemmaViolated(f"{v} keeps only {kept}m colors, {needed}m needed")


def explain_reduction(
    report: ConfigReport, g: PlaneGraph, c: Cover | None = None
) -> ReductionPlan:
    if report.kind not in PLANNERS:
        raise UnsupportedKind(f"{report.kind.value} has no tree colorer reduction")
    plan = PLANNERS[report.kind](report, g)
    check_plan(g, plan)
    if c is not None:
        crooked = [e for e in plan.straight_edges if not c.is_straight(*e)]
        get_logger().debug("%s: %s edge(s) to straighten", report.kind.value, len(crooked))
    get_logger().debug(
        "%s plan: Z=%s shape=%s identification=%s",
        report.kind.value,
        sorted(plan.z_set),
        plan.shape,
        plan.identification,
    )
    return plan
