from collections.abc import Mapping

from cyy_naive_lib.log import get_logger

from coloring.fold_spec import FoldSpec
from coloring.multi_coloring import MultiColoring, merge_colorings, verify_coloring
from coloring.solver import exhaustive_solve
from cover.cover import Cover
from cover.inheritance import inherited_cover
from cover.residual import lift_coloring, residual
from cover.straighten import permute_coloring, straighten_tree, unpermute_coloring
from error import (InvalidPartialColoring, LemmaViolated, OuterExtensionUnsat,
                   PreconditionViolated)
from graph.identification import identify_vertices, new_vertex_id
from graph.plane_graph import PlaneGraph
from reducible.reduction_plan import ReductionPlan
from tree_colorer.dispatch import color_tree_cover


def _check_boundary(
    g: PlaneGraph, c: Cover, spec: FoldSpec, boundary_phi: Mapping[int, frozenset[int]]
) -> None:
    boundary = frozenset(g.boundary_cycle())
    if boundary_phi.keys() != boundary:
        raise InvalidPartialColoring(
            f"boundary coloring covers {sorted(boundary_phi)}, not D = {sorted(boundary)}"
        )
    violations = verify_coloring(g, c, spec, boundary_phi, domain=boundary)
    if violations:
        raise InvalidPartialColoring(f"boundary coloring is invalid: {violations}")


def _color_rest_identified(
    plan: ReductionPlan,
    g: PlaneGraph,
    c: Cover,
    spec: FoldSpec,
    fixed: Mapping[int, frozenset[int]],
    **solver_args,
) -> MultiColoring:
    """Color G - Z through the graph with x and y merged; x and y then both
    take the colors of the merged vertex."""
    assert plan.identification is not None
    x, y, z = plan.identification
    if c.size(x) != c.size(y):
        raise PreconditionViolated(
            f"|L({x})| = {c.size(x)} differs from |L({y})| = {c.size(y)}"
        )
    g_prime = identify_vertices(g, x, y, z, plan.z_set)
    vstar = new_vertex_id(g)
    c_prime = inherited_cover(g_prime, c, x, y, vstar)
    merged_fixed = {vstar if v in (x, y) else v: colors for v, colors in fixed.items()}
    psi = exhaustive_solve(g_prime, c_prime, spec, fixed=merged_fixed, **solver_args)
    if psi is None:
        raise OuterExtensionUnsat(f"no extension of the boundary coloring to {g_prime}")
    phi = {v: colors for v, colors in psi.items() if v != vstar}
    phi[x] = phi[y] = psi[vstar]
    return phi


def execute_reduction(
    plan: ReductionPlan,
    g: PlaneGraph,
    c: Cover,
    boundary_phi: Mapping[int, frozenset[int]],
    m: int = 1,
    budget_sec: float | None = None,
    max_vertices: int | None = None,
) -> MultiColoring:
    """Extend a coloring of the boundary to all of g the way the reduction
    argument does: color G - Z (or the identified graph) exactly, then finish
    G[Z] with the tree colorer on the residual cover."""
    spec = FoldSpec(m=m)
    _check_boundary(g, c, spec, boundary_phi)
    solver_args = {"budget_sec": budget_sec, "max_vertices": max_vertices}

    work_cover, permutation = c, {}
    if plan.identification is None:
        phi = exhaustive_solve(
            g,
            c,
            spec,
            fixed=boundary_phi,
            vertices=frozenset(g.vertices) - plan.z_set,
            **solver_args,
        )
        if phi is None:
            raise OuterExtensionUnsat(
                f"no extension of the boundary coloring to G - {sorted(plan.z_set)}"
            )
    else:
        work_cover, permutation = straighten_tree(c, plan.straight_edges)
        phi = _color_rest_identified(
            plan,
            g,
            work_cover,
            spec,
            permute_coloring(boundary_phi, permutation),
            **solver_args,
        )
    get_logger().debug("colored %s vertices outside Z", len(phi))

    left = residual(g, work_cover, phi, plan.z_set)
    sizes = left.sizes()
    for v, k in plan.residual_sizes.items():
        if sizes[v] < k * m:
            raise LemmaViolated(f"residual list of {v} has {sizes[v]} colors, {k * m} expected")
    tree_cover, back_map = left.as_cover(
        {v: k * m for v, k in plan.residual_sizes.items()}
    )
    psi, result = color_tree_cover(plan.shape, tree_cover, m)

    full = unpermute_coloring(
        merge_colorings(phi, lift_coloring(psi, back_map)), permutation
    )
    violations = verify_coloring(g, c, spec, full)
    if violations:
        raise LemmaViolated(f"{plan.kind.value} reduction produced conflicts: {violations}")
    assert all(full[v] == boundary_phi[v] for v in boundary_phi)
    get_logger().info(
        "%s reduction colored %s vertices, tree colorer case %s",
        plan.kind.value,
        len(full),
        result.case,
    )
    return dict(sorted(full.items()))
