from collections.abc import Mapping

from tree_colorer.list_assignment import (
    TreeColoringResult,
    as_lists,
    list_coloring_violations,
    require_nested,
)
from tree_colorer.subset import pick
from tree_colorer.tree_shape import ShapeKind


def color_claw(lists: Mapping[str, frozenset[int]], m: int) -> TreeColoringResult:
    """2m-fold coloring of the claw u; v1, v2, v3 with |L(u)| = 5m and
    L(vi) a 3m-subset of L(u)."""
    lists = as_lists(lists)
    require_nested(ShapeKind.claw, lists, m)
    lu, l1, l2, l3 = lists["u"], lists["v1"], lists["v2"], lists["v3"]
    # |L(v1) | L(v2)| <= 5m, so the leaves share at least m colors
    a = pick(l1 & l2, m, "A")
    b = pick(lu - (l3 | a), m, "B")
    a1 = pick(l1 - (a | b), m, "A'1")
    a2 = pick(l2 - (a | b), m, "A'2")
    b_prime = pick(lu - (a | a1 | a2 | b), m, "B'")
    assignment = {
        "u": b | b_prime,
        "v1": a | a1,
        "v2": a | a2,
        "v3": pick(l3 - b_prime, 2 * m, "phi(v3)"),
    }
    assert not list_coloring_violations(ShapeKind.claw, lists, m, assignment)
    return TreeColoringResult(assignment=assignment, case="claw")


def color_path3(lists: Mapping[str, frozenset[int]], m: int) -> TreeColoringResult:
    """A claw that lost its third leaf: v1 - u - v2."""
    lists = as_lists(lists)
    require_nested(ShapeKind.path3, lists, m)
    phantom = pick(lists["u"], 3 * m, "phantom leaf")
    result = color_claw(lists | {"v3": phantom}, m)
    assignment = {role: result.assignment[role] for role in ("u", "v1", "v2")}
    assert not list_coloring_violations(ShapeKind.path3, lists, m, assignment)
    return TreeColoringResult(assignment=assignment, case="path3")
