from collections.abc import Iterable, Mapping

from cyy_naive_lib.log import get_logger

from coloring.fold_spec import FoldSpec
from coloring.multi_coloring import MultiColoring, verify_coloring
from cover.cover import Cover
from error import InsufficientSlack


def degeneracy_order(g, k: int, vertices: Iterable[int] | None = None) -> list[int] | None:
    """An order in which every vertex has at most k earlier neighbors inside
    vertices, or None when the induced subgraph is not k-degenerate."""
    remaining = set(g.vertices if vertices is None else vertices)
    degree = {v: 0 for v in remaining}
    adjacency: dict[int, set[int]] = {v: set() for v in remaining}
    for u, v in g.edges:
        if u in remaining and v in remaining:
            adjacency[u].add(v)
            adjacency[v].add(u)
            degree[u] += 1
            degree[v] += 1
    removal = []
    while remaining:
        v = min(remaining, key=lambda w: (degree[w], w))
        if degree[v] > k:
            return None
        remaining.remove(v)
        removal.append(v)
        for w in adjacency[v]:
            if w in remaining:
                degree[w] -= 1
    return removal[::-1]


def extend_low_degree(
    g,
    c: Cover,
    spec: FoldSpec,
    phi: Mapping[int, frozenset[int]],
    order: Iterable[int],
) -> MultiColoring:
    """Color the vertices of order greedily, each with the first g(v) colors
    not matched to a color already used on a neighbor."""
    adjacency: dict[int, set[int]] = {v: set() for v in g.vertices}
    for u, v in g.edges:
        adjacency[u].add(v)
        adjacency[v].add(u)
    result: MultiColoring = dict(phi)
    for v in order:
        assert v not in result, v
        colored = [u for u in sorted(adjacency[v]) if u in result]
        slack = c.size(v) - sum(len(result[u]) for u in colored)
        if slack < spec.fold(v):
            raise InsufficientSlack(v, slack, spec.fold(v))
        blocked = set()
        for u in colored:
            partner = c.partner(u, v)
            blocked.update(partner[i] for i in result[u] if i in partner)
        available = [i for i in range(c.size(v)) if i not in blocked]
        assert len(available) >= spec.fold(v)
        result[v] = frozenset(available[: spec.fold(v)])
    assert not verify_coloring(g, c, spec, result, domain=result.keys())
    get_logger().debug("greedy extension colored %s vertices", len(result) - len(phi))
    return result
