from collections.abc import Mapping

from cyy_naive_lib.log import get_logger

from coloring.fold_spec import FoldSpec
from coloring.solver import exhaustive_solve
from cover.cover import Color, cover_from_list_assignment
from error import LemmaViolated
from graph.plane_graph import EdgeListGraph
from tree_colorer.list_assignment import ListAssignment, TreeColoringResult
from tree_colorer.tree_shape import FOLDS, LIST_SIZES, ROLE_EDGES, ShapeKind


def search_list_coloring(
    kind: ShapeKind, lists: Mapping[str, frozenset[int]], m: int
) -> ListAssignment | None:
    """Color the shape tree with the backtracking solver."""
    index = {role: i for i, role in enumerate(LIST_SIZES[kind])}
    edges = [(index[a], index[b]) for a, b in ROLE_EDGES[kind]]
    c, names = cover_from_list_assignment(
        edges, {index[role]: colors for role, colors in lists.items()}
    )
    tree = EdgeListGraph(vertices=sorted(index.values()), edges=edges)
    spec = FoldSpec(
        m=m,
        g={index[role]: k * m for role, k in FOLDS[kind].items()},
        f=c.sizes,
    )
    phi = exhaustive_solve(tree, c, spec)
    if phi is None:
        return None
    return {
        role: frozenset(names[Color(index[role], i)] for i in phi[index[role]])
        for role in index
    }


def fall_back(
    kind: ShapeKind, lists: Mapping[str, frozenset[int]], m: int, reason: Exception
) -> TreeColoringResult:
    get_logger().warning(
        "%s construction failed for m=%s (%s), falling back to search",
        kind.value,
        m,
        reason,
    )
    assignment = search_list_coloring(kind, lists, m)
    if assignment is None:
        raise LemmaViolated(f"{kind.value} lists {dict(lists)} admit no coloring")
    return TreeColoringResult(assignment=assignment, case="search", fallback_used=True)
