from collections.abc import Callable, Mapping

from cyy_naive_lib.log import get_logger

from coloring.fold_spec import FoldSpec
from coloring.multi_coloring import MultiColoring, verify_coloring
from cover.cover import Cover
from cover.tree_reduction import tree_cover_to_lists
from error import LemmaViolated, PreconditionViolated
from graph.plane_graph import EdgeListGraph
from tree_colorer.broom import color_broom
from tree_colorer.claw import color_claw, color_path3
from tree_colorer.double_claw import color_double_claw_g, color_double_claw_uniform
from tree_colorer.list_assignment import TreeColoringResult
from tree_colorer.star5 import color_star5
from tree_colorer.tree_shape import ShapeKind, TreeShape

Colorer = Callable[[Mapping[str, frozenset[int]], int], TreeColoringResult]

COLORERS: dict[ShapeKind, Colorer] = {
    ShapeKind.claw: color_claw,
    ShapeKind.path3: color_path3,
    ShapeKind.double_claw: color_double_claw_uniform,
    ShapeKind.double_claw_g: color_double_claw_g,
    ShapeKind.star5: color_star5,
    ShapeKind.broom: color_broom,
}


def get_colorer(kind: ShapeKind | str) -> Colorer:
    try:
        return COLORERS[ShapeKind(kind)]
    except ValueError as e:
        raise PreconditionViolated(f"unknown tree shape {kind}") from e


def color_tree_cover(
    shape: TreeShape, c: Cover, m: int
) -> tuple[MultiColoring, TreeColoringResult]:
    """Reduce the cover of the tree to nested lists, color them and map the
    chosen list colors back to colors of the cover."""
    sizes = shape.list_sizes(m)
    for v, expected in sizes.items():
        if v not in c.sizes or c.size(v) != expected:
            raise PreconditionViolated(
                f"{shape.kind.value} needs |L({v})| = {expected}, "
                f"got {c.sizes.get(v)}"
            )
    tree_cover = c.restrict(shape.vertices)
    lists, back_map = tree_cover_to_lists(tree_cover, shape.edges)
    result = get_colorer(shape.kind)(
        {role: lists[v] for role, v in shape.roles.items()}, m
    )
    phi = {
        v: frozenset(back_map[v][cid] for cid in result.assignment[role])
        for role, v in shape.roles.items()
    }
    violations = verify_coloring(
        EdgeListGraph(vertices=sorted(shape.vertices), edges=shape.edges),
        tree_cover,
        FoldSpec(m=m, g=shape.folds(m), f=sizes),
        phi,
    )
    if violations:
        raise LemmaViolated(f"{shape} colored inconsistently: {violations}")
    get_logger().debug(
        "%s colored through %s%s",
        shape,
        result.case,
        " (search fallback)" if result.fallback_used else "",
    )
    return dict(sorted(phi.items())), result


def dispatch_tree_colorer(shape: TreeShape, c: Cover, spec: FoldSpec) -> MultiColoring:
    return color_tree_cover(shape, c, spec.m)[0]
