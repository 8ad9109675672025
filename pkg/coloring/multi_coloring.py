import json
import os
from collections.abc import Iterable, Mapping

from coloring.fold_spec import FoldSpec
from cover.cover import Cover
from error import GraphFileError
from graph.plane_graph import PlaneGraph

# vertex -> indices i of its colors (v, i)
MultiColoring = dict[int, frozenset[int]]


def as_coloring(assignment: Mapping[int, Iterable[int]]) -> MultiColoring:
    return {int(v): frozenset(int(i) for i in colors) for v, colors in assignment.items()}


def verify_coloring(
    g: PlaneGraph,
    c: Cover,
    spec: FoldSpec,
    phi: Mapping[int, frozenset[int]],
    domain: Iterable[int] | None = None,
) -> list[str]:
    """Violations of phi being an (H, g)-coloring of g[domain]."""
    domain = frozenset(g.vertices if domain is None else domain)
    violations = []
    for v in sorted(domain):
        if v not in phi:
            violations.append(f"vertex {v} is uncolored")
            continue
        if len(phi[v]) != spec.fold(v):
            violations.append(
                f"vertex {v} has {len(phi[v])} colors instead of {spec.fold(v)}"
            )
        outside = sorted(i for i in phi[v] if not 0 <= i < c.size(v))
        if outside:
            violations.append(f"vertex {v} uses colors {outside} outside L({v})")
    for u, v in g.edges:
        if u not in domain or v not in domain or u not in phi or v not in phi:
            continue
        conflicts = sorted(
            (i, j) for i, j in c.pairs(u, v) if i in phi[u] and j in phi[v]
        )
        if conflicts:
            violations.append(f"edge {u}{v} joins matched colors {conflicts}")
    return violations


def merge_colorings(*colorings: Mapping[int, frozenset[int]]) -> MultiColoring:
    result: MultiColoring = {}
    for phi in colorings:
        for v, colors in phi.items():
            assert v not in result or result[v] == colors, v
            result[v] = frozenset(colors)
    return result


def coloring_to_dict(phi: Mapping[int, frozenset[int]], m: int) -> dict:
    return {"m": m, "assignment": {str(v): sorted(phi[v]) for v in sorted(phi)}}


def load_coloring(path: str) -> tuple[MultiColoring, int]:
    if not os.path.isfile(path):
        raise GraphFileError(f"no coloring file {path}")
    with open(path, "rt", encoding="utf8") as f:
        data = json.load(f)
    try:
        return as_coloring(data["assignment"]), int(data["m"])
    except (KeyError, TypeError, ValueError) as e:
        raise GraphFileError(f"malformed coloring {path}: {e}") from e


def dump_coloring(phi: Mapping[int, frozenset[int]], m: int, path: str) -> None:
    dirname = os.path.dirname(path)
    if dirname:
        os.makedirs(dirname, exist_ok=True)
    with open(path, "wt", encoding="utf8") as f:
        json.dump(coloring_to_dict(phi, m), f)
