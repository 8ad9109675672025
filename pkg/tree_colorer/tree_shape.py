from collections.abc import Mapping
from enum import Enum

from error import PreconditionViolated
from graph.plane_graph import Edge, normalize_edge


class ShapeKind(str, Enum):
    claw = "claw"
    path3 = "path3"
    double_claw = "double_claw"
    double_claw_g = "double_claw_g"
    star5 = "star5"
    broom = "broom"


# edges between roles, center first
ROLE_EDGES: dict[ShapeKind, tuple[tuple[str, str], ...]] = {
    ShapeKind.claw: (("u", "v1"), ("u", "v2"), ("u", "v3")),
    ShapeKind.path3: (("u", "v1"), ("u", "v2")),
    ShapeKind.double_claw: (
        ("u", "v"),
        ("u", "u1"),
        ("u", "u2"),
        ("v", "v1"),
        ("v", "v2"),
    ),
    ShapeKind.star5: tuple(("v", f"v{i}") for i in range(1, 6)),
    ShapeKind.broom: (("u", "w"), ("w", "v"), ("v", "v1"), ("v", "v2"), ("v", "v3")),
}
ROLE_EDGES[ShapeKind.double_claw_g] = ROLE_EDGES[ShapeKind.double_claw]

# list sizes in units of m
LIST_SIZES: dict[ShapeKind, dict[str, int]] = {
    ShapeKind.claw: {"u": 5, "v1": 3, "v2": 3, "v3": 3},
    ShapeKind.path3: {"u": 5, "v1": 3, "v2": 3},
    ShapeKind.double_claw: {"u": 5, "v": 5, "u1": 3, "u2": 3, "v1": 3, "v2": 3},
    ShapeKind.double_claw_g: {"u": 4, "v": 4, "u1": 2, "u2": 2, "v1": 2, "v2": 2},
    ShapeKind.star5: {"v": 7} | {f"v{i}": 3 for i in range(1, 6)},
    ShapeKind.broom: {"u": 3, "w": 5, "v": 5, "v1": 3, "v2": 3, "v3": 3},
}

# folds in units of m
FOLDS: dict[ShapeKind, dict[str, int]] = {
    kind: {role: 2 for role in sizes} for kind, sizes in LIST_SIZES.items()
}
FOLDS[ShapeKind.double_claw_g] = {
    "u": 2,
    "v": 2,
    "u1": 1,
    "u2": 1,
    "v1": 1,
    "v2": 1,
}


class TreeShape:
    """One of the small trees the reductions finish with, its roles bound to graph vertices."""

    def __init__(self, kind: ShapeKind | str, roles: Mapping[str, int]) -> None:
        self.kind = ShapeKind(kind)
        if set(roles) != set(LIST_SIZES[self.kind]):
            raise PreconditionViolated(
                f"{self.kind.value} needs roles {sorted(LIST_SIZES[self.kind])}, "
                f"got {sorted(roles)}"
            )
        if len(set(roles.values())) != len(roles):
            raise PreconditionViolated(f"roles {dict(roles)} share a vertex")
        self.roles: dict[str, int] = dict(roles)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.roles.values())

    @property
    def role_edges(self) -> tuple[tuple[str, str], ...]:
        return ROLE_EDGES[self.kind]

    @property
    def edges(self) -> list[Edge]:
        return sorted(
            normalize_edge(self.roles[a], self.roles[b]) for a, b in self.role_edges
        )

    def role_of(self, vertex: int) -> str:
        for role, v in self.roles.items():
            if v == vertex:
                return role
        raise KeyError(vertex)

    def list_sizes(self, m: int) -> dict[int, int]:
        return {self.roles[role]: k * m for role, k in LIST_SIZES[self.kind].items()}

    def folds(self, m: int) -> dict[int, int]:
        return {self.roles[role]: k * m for role, k in FOLDS[self.kind].items()}

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "roles": dict(sorted(self.roles.items()))}

    def __repr__(self) -> str:
        return f"TreeShape({self.kind.value}, {self.roles})"


def canonical_shape(kind: ShapeKind | str) -> TreeShape:
    """The shape with its roles bound to 0, 1, ... in role order."""
    kind = ShapeKind(kind)
    return TreeShape(kind, {role: i for i, role in enumerate(LIST_SIZES[kind])})
