from collections.abc import Hashable, Iterable, Mapping

import networkx as nx

from cover.cover import Color, Cover, cover_from_list_assignment
from error import NotATree
from graph.plane_graph import Edge, normalize_edge


def saturate(c: Cover, tree_edges: Iterable[Edge]) -> Cover:
    """Extend each edge matching until it covers the smaller list, pairing the
    unmatched colors of both ends in index order."""
    matchings = dict(c.matchings)
    for u, v in tree_edges:
        if c.size(u) > c.size(v):
            u, v = v, u
        pairs = set(c.pairs(u, v))
        free_u = sorted(set(range(c.size(u))) - {i for i, _ in pairs})
        free_v = sorted(set(range(c.size(v))) - {j for _, j in pairs})
        pairs.update(zip(free_u, free_v))
        if u > v:
            u, v = v, u
            pairs = {(j, i) for i, j in pairs}
        matchings[(u, v)] = frozenset(pairs)
    return Cover(sizes=c.sizes, matchings=matchings)


def tree_cover_to_lists(
    c: Cover, tree_edges: Iterable[Edge] | None = None
) -> tuple[dict[int, frozenset[int]], dict[int, dict[int, int]]]:
    """Turn a cover of a tree into a nested list assignment.

    List colors are the components of the (saturated) color graph, numbered by
    their smallest color; the back map sends a component id at v to the color
    index of v in that component.
    """
    edges = sorted(
        normalize_edge(u, v) for u, v in (c.edges if tree_edges is None else tree_edges)
    )
    tree = nx.Graph()
    tree.add_nodes_from(c.vertices)
    tree.add_edges_from(edges)
    if not nx.is_forest(tree):
        raise NotATree(f"edges {edges} contain a cycle")
    saturated = saturate(c, edges)
    color_graph = nx.Graph()
    for v in c.vertices:
        color_graph.add_nodes_from(saturated.colors(v))
    for u, v in edges:
        color_graph.add_edges_from(
            (Color(u, i), Color(v, j)) for i, j in saturated.pairs(u, v)
        )
    components = sorted(
        (sorted(component) for component in nx.connected_components(color_graph)),
        key=lambda component: component[0],
    )
    lists: dict[int, set[int]] = {v: set() for v in c.vertices}
    back_map: dict[int, dict[int, int]] = {v: {} for v in c.vertices}
    for component_id, component in enumerate(components):
        owners = [color.owner for color in component]
        assert len(owners) == len(set(owners)), component
        for color in component:
            lists[color.owner].add(component_id)
            back_map[color.owner][component_id] = color.index
    for v in c.vertices:
        assert len(lists[v]) == c.size(v)
    for u, v in edges:
        small, large = (u, v) if c.size(u) <= c.size(v) else (v, u)
        assert lists[small] <= lists[large]
    return {v: frozenset(colors) for v, colors in lists.items()}, back_map


def nest_list_assignment(
    tree_edges: Iterable[Edge], lists: Mapping[int, Iterable[Hashable]]
) -> tuple[dict[int, frozenset[int]], dict[int, dict[int, Hashable]]]:
    """Replace a list assignment of a tree by a nested one; any coloring of the
    nested lists maps back, through the returned names, to a coloring of the
    original lists."""
    tree_edges = list(tree_edges)
    c, names = cover_from_list_assignment(tree_edges, lists)
    nested, back_map = tree_cover_to_lists(c, tree_edges)
    return nested, {
        v: {cid: names[Color(v, index)] for cid, index in back.items()}
        for v, back in back_map.items()
    }
