import json
import os
from collections.abc import Iterable, Mapping
from typing import NamedTuple

from error import GraphFileError, PreconditionViolated
from tree_colorer.tree_shape import FOLDS, LIST_SIZES, ROLE_EDGES, ShapeKind

# role -> color ids
ListAssignment = dict[str, frozenset[int]]

# pairs of roles whose lists the constructions assume equal
_EQUAL_CENTERS: dict[ShapeKind, tuple[str, str]] = {
    ShapeKind.double_claw: ("u", "v"),
    ShapeKind.double_claw_g: ("u", "v"),
    ShapeKind.broom: ("w", "v"),
}


class TreeColoringResult(NamedTuple):
    assignment: ListAssignment
    case: str
    fallback_used: bool = False


def as_lists(lists: Mapping[str, Iterable[int]]) -> ListAssignment:
    return {role: frozenset(colors) for role, colors in lists.items()}


def require_nested(kind: ShapeKind, lists: Mapping[str, frozenset[int]], m: int) -> None:
    if m < 1:
        raise PreconditionViolated(f"m must be positive, got {m}")
    sizes = LIST_SIZES[kind]
    if set(lists) != set(sizes):
        raise PreconditionViolated(
            f"{kind.value} needs lists for {sorted(sizes)}, got {sorted(lists)}"
        )
    for role, k in sizes.items():
        if len(lists[role]) != k * m:
            raise PreconditionViolated(
                f"L({role}) has {len(lists[role])} colors, {kind.value} needs {k * m}"
            )
    for a, b in ROLE_EDGES[kind]:
        small, large = (a, b) if sizes[a] <= sizes[b] else (b, a)
        if not lists[small] <= lists[large]:
            raise PreconditionViolated(f"L({small}) is not contained in L({large})")
    if kind in _EQUAL_CENTERS:
        a, b = _EQUAL_CENTERS[kind]
        if lists[a] != lists[b]:
            raise PreconditionViolated(f"L({a}) and L({b}) differ")


def list_coloring_violations(
    kind: ShapeKind,
    lists: Mapping[str, frozenset[int]],
    m: int,
    assignment: Mapping[str, frozenset[int]],
) -> list[str]:
    violations = []
    for role, k in FOLDS[kind].items():
        colors = assignment.get(role, frozenset())
        if len(colors) != k * m:
            violations.append(f"{role} has {len(colors)} colors instead of {k * m}")
        if not colors <= lists[role]:
            violations.append(f"{role} uses {sorted(colors - lists[role])} off its list")
    for a, b in ROLE_EDGES[kind]:
        shared = assignment.get(a, frozenset()) & assignment.get(b, frozenset())
        if shared:
            violations.append(f"{a}{b} share colors {sorted(shared)}")
    return violations


def load_list_assignment(path: str) -> tuple[ShapeKind, ListAssignment, int]:
    """Read {"m": int, "shape": kind, "lists": {role: [colors]}}."""
    if not os.path.isfile(path):
        raise GraphFileError(f"no list assignment file {path}")
    with open(path, "rt", encoding="utf8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise GraphFileError(f"{path} is not valid JSON: {e}") from e
    try:
        kind = ShapeKind(data["shape"])
        lists = {
            role: frozenset(int(c) for c in colors)
            for role, colors in data["lists"].items()
        }
        m = int(data["m"])
    except (KeyError, TypeError, ValueError) as e:
        raise GraphFileError(f"malformed list assignment {path}: {e}") from e
    return kind, lists, m
