from cyy_naive_lib.log import get_logger

from coloring.fold_spec import FoldSpec
from coloring.greedy import degeneracy_order, extend_low_degree
from coloring.multi_coloring import MultiColoring, merge_colorings, verify_coloring
from coloring.solver import exhaustive_solve
from cover.cover import Cover
from graph.cycle import cycle_sides
from graph.plane_graph import PlaneGraph


def color_whole_graph(
    g: PlaneGraph,
    c: Cover,
    spec: FoldSpec,
    budget_sec: float | None = None,
) -> MultiColoring | None:
    """Color a class member from scratch.

    Without triangles the graph has girth at least 6 and is 2-degenerate, so a
    greedy pass suffices. Otherwise a triangle is colored first and the
    coloring is extended separately into its inside and its outside.
    """
    if not g.triangles:
        order = degeneracy_order(g, 2)
        assert order is not None, "a planar graph of girth 6 is 2-degenerate"
        get_logger().debug("no triangle, coloring greedily along %s", order)
        return extend_low_degree(g, c, spec, {}, order)

    triangle = g.triangles[0]
    phi = exhaustive_solve(g, c, spec, vertices=triangle, budget_sec=budget_sec)
    if phi is None:
        return None
    interior, exterior = cycle_sides(g, triangle)
    get_logger().debug(
        "split along triangle %s: %s inside, %s outside",
        triangle,
        len(interior),
        len(exterior),
    )
    parts = [phi]
    for side in (interior, exterior):
        if not side:
            continue
        extension = exhaustive_solve(
            g,
            c,
            spec,
            fixed=phi,
            vertices=side | frozenset(triangle),
            budget_sec=budget_sec,
        )
        if extension is None:
            return None
        parts.append(extension)
    result = merge_colorings(*parts)
    assert not verify_coloring(g, c, spec, result)
    return result
