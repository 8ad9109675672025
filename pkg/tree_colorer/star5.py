import itertools
import math
from collections import Counter
from collections.abc import Mapping, Sequence

from tree_colorer.fallback import fall_back
from tree_colorer.list_assignment import (
    TreeColoringResult,
    as_lists,
    list_coloring_violations,
    require_nested,
)
from tree_colorer.subset import ConstructionFailed, pick
from tree_colorer.tree_shape import ShapeKind

LEAVES = ("v1", "v2", "v3", "v4", "v5")

# (leaf colorings of the three other leaves, phi(v), the colors B' of phi(v)
# chosen last)
_Partial = tuple[dict[str, frozenset[int]], frozenset[int], frozenset[int]]


def overlap_threshold(m: int) -> int:
    return math.ceil(4 * m / 5)


def overlapping_pair(lists: Mapping[str, frozenset[int]], m: int) -> tuple[str, str]:
    """Two leaves sharing at least ceil(4m/5) colors.

    Five 3m-lists inside 7m colors overlap in at least 8m colors in total over
    the ten pairs, so the best pair always reaches the threshold.
    """
    best = max(
        itertools.combinations(LEAVES, 2),
        key=lambda pair: len(lists[pair[0]] & lists[pair[1]]),
    )
    assert len(lists[best[0]] & lists[best[1]]) >= overlap_threshold(m), lists
    return best


def _dense_triple(
    lists: Mapping[str, frozenset[int]], pair: Sequence[str], others: Sequence[str], m: int
) -> _Partial:
    q = overlap_threshold(m)
    lv = lists["v"]
    a = pick(lists[others[0]] & lists[others[1]] & lists[others[2]], q, "A")
    b = pick(lv - (lists[pair[0]] | lists[pair[1]] | a), m, "B")
    phi = {}
    for role in others:
        phi[role] = a | pick(lists[role] - (a | b), 2 * m - q, f"A_{role}")
    used = frozenset().union(*phi.values())
    b_prime = pick(lv - (used | b), m, "B'")
    return phi, b | b_prime, b_prime


def _sparse_triple(
    lists: Mapping[str, frozenset[int]], pair: Sequence[str], others: Sequence[str], m: int
) -> _Partial:
    lv = lists["v"]
    counts = Counter(color for role in others for color in lists[role])
    a = frozenset(color for color, k in counts.items() if k == 3)
    a_prime = pick(
        (color for color, k in counts.items() if k == 2), 2 * (m - len(a)), "A'"
    )
    b = pick(lv - (a | a_prime | lists[pair[0]] | lists[pair[1]]), m, "B")
    phi = {}
    for role in others:
        start = a | (a_prime & lists[role])
        phi[role] = start | pick(
            lists[role] - start - b, 2 * m - len(start), f"A'_{role}"
        )
    used = frozenset().union(*phi.values())
    b_prime = pick(lv - (used | b), m, "B'")
    return phi, b | b_prime, b_prime


def color_star5(lists: Mapping[str, frozenset[int]], m: int) -> TreeColoringResult:
    """2m-fold coloring of the star with center v (7m colors) and five leaves
    (3m colors each, inside L(v)).

    Set sizes are rounded up to integers and every cardinality the
    construction needs is checked as it goes; if one fails the tree is colored
    by search instead and the result is flagged.
    """
    lists = as_lists(lists)
    require_nested(ShapeKind.star5, lists, m)
    pair = overlapping_pair(lists, m)
    others = [role for role in LEAVES if role not in pair]
    triple = len(lists[others[0]] & lists[others[1]] & lists[others[2]])
    case = "case1" if triple >= overlap_threshold(m) else "case2"
    try:
        if case == "case1":
            phi, phi_v, b_prime = _dense_triple(lists, pair, others, m)
        else:
            phi, phi_v, b_prime = _sparse_triple(lists, pair, others, m)
        assignment = phi | {"v": phi_v}
        for role in pair:
            assignment[role] = pick(lists[role] - b_prime, 2 * m, f"phi({role})")
        violations = list_coloring_violations(ShapeKind.star5, lists, m, assignment)
        if violations:
            raise ConstructionFailed(f"{case} produced {violations}")
    except ConstructionFailed as e:
        return fall_back(ShapeKind.star5, lists, m, e)
    return TreeColoringResult(assignment=assignment, case=case)
