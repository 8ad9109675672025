from collections.abc import Iterable, Mapping

import networkx as nx

from cover.cover import Cover, permute_cover
from error import NotATree, PreconditionViolated
from graph.plane_graph import Edge

# vertex -> list sending an original color index to its new index
Permutation = dict[int, list[int]]


def _forest(edges: Iterable[Edge]) -> nx.Graph:
    forest = nx.Graph()
    forest.add_edges_from(edges)
    if forest.number_of_nodes() and not nx.is_forest(forest):
        raise NotATree(f"edges {sorted(forest.edges)} contain a cycle")
    return forest


def straighten_tree(c: Cover, tree_edges: Iterable[Edge]) -> tuple[Cover, Permutation]:
    """Permute colors so that every tree edge pairs equal indices only."""
    forest = _forest(tree_edges)
    permutation: Permutation = {}
    for component in nx.connected_components(forest):
        root = min(component)
        permutation[root] = list(range(c.size(root)))
        for parent, child in nx.bfs_edges(forest, root, sort_neighbors=sorted):
            image: dict[int, int] = {}
            for i, j in c.pairs(parent, child):
                target = permutation[parent][i]
                if target >= c.size(child):
                    raise PreconditionViolated(
                        f"cannot straighten {parent}{child}: index {target} "
                        f"exceeds L({child})"
                    )
                image[j] = target
            spare = iter(sorted(set(range(c.size(child))) - set(image.values())))
            permutation[child] = [
                image[j] if j in image else next(spare) for j in range(c.size(child))
            ]
    straightened = permute_cover(c, permutation)
    assert all(straightened.is_straight(u, v) for u, v in forest.edges)
    return straightened, permutation


def permute_coloring(
    phi: Mapping[int, frozenset[int]], permutation: Permutation
) -> dict[int, frozenset[int]]:
    return {
        v: frozenset(permutation[v][i] for i in colors) if v in permutation else colors
        for v, colors in phi.items()
    }


def unpermute_coloring(
    phi: Mapping[int, frozenset[int]], permutation: Permutation
) -> dict[int, frozenset[int]]:
    """Pull a coloring of the straightened cover back to the original one."""
    inverse = {
        v: {new: old for old, new in enumerate(images)}
        for v, images in permutation.items()
    }
    return {
        v: frozenset(inverse[v][i] for i in colors) if v in inverse else colors
        for v, colors in phi.items()
    }
