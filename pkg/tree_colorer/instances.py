import itertools
import random
from collections.abc import Iterator, Mapping

from tree_colorer.list_assignment import ListAssignment
from tree_colorer.tree_shape import FOLDS, LIST_SIZES, ROLE_EDGES, ShapeKind

CLAW_CENTER_SIZE = 5


def random_nested_lists(kind: ShapeKind | str, m: int, seed: int = 0) -> ListAssignment:
    """Random lists meeting the nesting a colorer expects: every role with the
    largest size shares one list and the others are random subsets of it."""
    kind = ShapeKind(kind)
    rng = random.Random(seed)
    sizes = LIST_SIZES[kind]
    top = max(sizes.values()) * m
    universe = list(range(2 * top))
    top_list = frozenset(rng.sample(universe, top))
    ordered_top = sorted(top_list)
    return {
        role: top_list
        if k * m == top
        else frozenset(rng.sample(ordered_top, k * m))
        for role, k in sizes.items()
    }


def _canonical(
    leaves: tuple[tuple[int, ...], ...], universe: int
) -> tuple[tuple[int, ...], ...]:
    inside = range(CLAW_CENTER_SIZE)
    outside = range(CLAW_CENTER_SIZE, universe)
    best = None
    for sigma in itertools.permutations(inside):
        for tau in itertools.permutations(outside):
            rename = dict(zip(inside, sigma)) | dict(zip(outside, tau))
            image = tuple(tuple(sorted(rename[c] for c in leaf)) for leaf in leaves)
            if best is None or image < best:
                best = image
    assert best is not None
    return best


def canonical_claw_assignments(universe: int = CLAW_CENTER_SIZE) -> Iterator[ListAssignment]:
    """Claw list assignments for m = 1 up to renaming colors.

    L(u) is always {0, ..., 4}; leaf lists range over the 3-subsets of
    range(universe), so for universe > 5 they need not lie inside L(u).
    """
    assert CLAW_CENTER_SIZE <= universe <= 8
    seen = set()
    triples = list(itertools.combinations(range(universe), 3))
    for leaves in itertools.product(triples, repeat=3):
        form = _canonical(leaves, universe)
        if form in seen:
            continue
        seen.add(form)
        yield {"u": frozenset(range(CLAW_CENTER_SIZE))} | {
            f"v{i + 1}": frozenset(leaf) for i, leaf in enumerate(form)
        }


def exhaustive_list_color(
    kind: ShapeKind | str, lists: Mapping[str, frozenset[int]], m: int
) -> ListAssignment | None:
    """Brute-force list coloring of the shape tree, roles in declaration order."""
    kind = ShapeKind(kind)
    roles = list(LIST_SIZES[kind])
    neighbors: dict[str, list[str]] = {role: [] for role in roles}
    for a, b in ROLE_EDGES[kind]:
        neighbors[a].append(b)
        neighbors[b].append(a)
    assignment: ListAssignment = {}

    def extend(position: int) -> bool:
        if position == len(roles):
            return True
        role = roles[position]
        blocked = set()
        for other in neighbors[role]:
            blocked |= assignment.get(other, frozenset())
        for colors in itertools.combinations(
            sorted(lists[role] - blocked), FOLDS[kind][role] * m
        ):
            assignment[role] = frozenset(colors)
            if extend(position + 1):
                return True
            del assignment[role]
        return False

    return dict(assignment) if extend(0) else None
