from collections.abc import Mapping

from cyy_naive_lib.log import get_logger

from cover.tree_reduction import nest_list_assignment
from tree_colorer.list_assignment import (
    TreeColoringResult,
    as_lists,
    list_coloring_violations,
    require_nested,
)
from tree_colorer.subset import pick, pick_preferring
from tree_colorer.tree_shape import ROLE_EDGES, ShapeKind


def _leaves_share(lists: Mapping[str, frozenset[int]], m: int) -> dict[str, frozenset[int]]:
    lu, lv = lists["u"], lists["v"]
    l_u1, l_u2 = lists["u1"], lists["u2"]
    l_v1, l_v2 = lists["v1"], lists["v2"]
    a = pick(l_u1 & l_u2, m, "A")
    b = pick((lu - a) & l_v1, m, "B")
    rest_u = lu - a - b
    # colors of B are free for v2 since v never uses them
    c1 = pick(l_v2 & b, min(m, len(l_v2 & b)), "C1")
    c2 = pick(rest_u & l_v2, m - len(c1), "C2")
    phi_u = b | c2
    phi_u |= pick(rest_u - phi_u, 2 * m - len(phi_u), "phi(u)")
    return {
        "u1": a,
        "u2": a,
        "u": phi_u,
        "v1": b,
        "v2": c1 | c2,
        "v": pick((lv - b) - phi_u, 2 * m, "phi(v)"),
    }


def _leaves_spread(lists: Mapping[str, frozenset[int]], m: int) -> dict[str, frozenset[int]]:
    lu, lv = lists["u"], lists["v"]
    l_u1, l_u2 = lists["u1"], lists["u2"]
    l_v1, l_v2 = lists["v1"], lists["v2"]
    a = pick((l_u1 | l_u2) - l_v1, m, "A")
    b = pick(l_v2 - a, m, "B")
    phi_u1 = a & l_u1
    phi_u2 = a & l_u2
    phi_u1 |= pick(l_u1 - b - a, m - len(phi_u1), "A1")
    phi_u2 |= pick(l_u2 - b - a, m - len(phi_u2), "A2")
    taken = (phi_u1 | phi_u2) - a
    phi_v1 = pick(l_v1 - taken, m, "phi(v1)")
    phi_u = pick_preferring(phi_v1 | b, lu - (phi_u1 | phi_u2), 2 * m, "phi(u)")
    return {
        "u1": phi_u1,
        "u2": phi_u2,
        "u": phi_u,
        "v1": phi_v1,
        "v2": b,
        "v": lv - phi_u,
    }


def color_double_claw_g(
    lists: Mapping[str, frozenset[int]], m: int
) -> TreeColoringResult:
    """Folds 2m at the centers u, v and m at the leaves u1, u2, v1, v2, from
    center lists L(u) = L(v) of size 4m and leaf lists of size 2m inside them."""
    lists = as_lists(lists)
    require_nested(ShapeKind.double_claw_g, lists, m)
    if len(lists["u1"] & lists["u2"]) >= m:
        case, assignment = "case1", _leaves_share(lists, m)
    else:
        case, assignment = "case2", _leaves_spread(lists, m)
    assert not list_coloring_violations(
        ShapeKind.double_claw_g, lists, m, assignment
    ), assignment
    return TreeColoringResult(assignment=assignment, case=case)


def color_double_claw_uniform(
    lists: Mapping[str, frozenset[int]], m: int
) -> TreeColoringResult:
    """2m-fold coloring of the double claw with center lists 5m and leaf lists
    3m: give common m-subsets to both leaf pairs, then finish the remaining
    4m/2m lists with the asymmetric colorer."""
    lists = as_lists(lists)
    require_nested(ShapeKind.double_claw, lists, m)
    a = pick(lists["u1"] & lists["u2"], m, "A")
    b = pick(lists["v1"] & lists["v2"], m, "B")
    side = {"u": a, "u1": a, "u2": a, "v": b, "v1": b, "v2": b}
    remaining = {role: colors - side[role] for role, colors in lists.items()}
    assert all(
        len(remaining[role]) == (4 if role in ("u", "v") else 2) * m
        for role in remaining
    ), remaining
    # L(u) - A and L(v) - B need not agree, so nest them again
    index = {role: i for i, role in enumerate(remaining)}
    nested, back_map = nest_list_assignment(
        [(index[a], index[b]) for a, b in ROLE_EDGES[ShapeKind.double_claw]],
        {index[role]: colors for role, colors in remaining.items()},
    )
    inner = color_double_claw_g({role: nested[i] for role, i in index.items()}, m)
    get_logger().debug("double claw finished through %s", inner.case)
    assignment = {
        role: frozenset(back_map[index[role]][cid] for cid in colors)
        | (side[role] if role not in ("u", "v") else frozenset())
        for role, colors in inner.assignment.items()
    }
    assert not list_coloring_violations(
        ShapeKind.double_claw, lists, m, assignment
    ), assignment
    return TreeColoringResult(assignment=assignment, case=inner.case)
