from collections import Counter
from collections.abc import Mapping

from tree_colorer.fallback import fall_back
from tree_colorer.list_assignment import (
    TreeColoringResult,
    as_lists,
    list_coloring_violations,
    require_nested,
)
from tree_colorer.subset import ConstructionFailed, pick, pick_preferring
from tree_colorer.tree_shape import ShapeKind

LEAVES = ("v1", "v2", "v3")


def _center_colors(lists: Mapping[str, frozenset[int]], m: int) -> frozenset[int]:
    """phi(v): 2m colors leaving every leaf at least 2m of its list and
    keeping m colors of L(v) outside both phi(v) and L(u)."""
    lv, lu = lists["v"], lists["u"]
    counts = Counter(color for role in LEAVES for color in lists[role])
    a = pick((color for color in lv if counts[color] <= 1), m, "A")
    t = len(a & lu)
    b_prime = pick(lv - (lu | a), t, "B'")
    d = (lu - a) | b_prime
    phi_v = set(a)
    for role in LEAVES:
        t_i = len(a & lists[role])
        phi_v |= pick(d - (lists[role] - a), t_i, f"A_{role}")
    phi_v |= pick(d - phi_v, 2 * m - len(phi_v), "phi(v)")
    return frozenset(phi_v)


def color_broom(lists: Mapping[str, frozenset[int]], m: int) -> TreeColoringResult:
    """2m-fold coloring of the broom u - w - v with leaves v1, v2, v3 at v,
    where L(w) = L(v) has 5m colors and the other lists are 3m-subsets."""
    lists = as_lists(lists)
    require_nested(ShapeKind.broom, lists, m)
    try:
        phi_v = _center_colors(lists, m)
        assignment = {"v": phi_v}
        for role in LEAVES:
            assignment[role] = pick(lists[role] - phi_v, 2 * m, f"phi({role})")
        lu = lists["u"]
        free_w = lists["w"] - phi_v
        assignment["w"] = pick_preferring(free_w - lu, free_w, 2 * m, "phi(w)")
        if len(lu - assignment["w"]) < 2 * m:
            raise ConstructionFailed(f"only {len(lu - assignment['w'])} colors left for u")
        assignment["u"] = pick(lu - assignment["w"], 2 * m, "phi(u)")
        violations = list_coloring_violations(ShapeKind.broom, lists, m, assignment)
        if violations:
            raise ConstructionFailed(f"broom produced {violations}")
    except ConstructionFailed as e:
        return fall_back(ShapeKind.broom, lists, m, e)
    return TreeColoringResult(assignment=assignment, case="broom")
