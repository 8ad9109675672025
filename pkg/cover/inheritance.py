from cover.cover import Cover
from error import MatchingCollision
from graph.plane_graph import PlaneGraph


def inherited_cover(
    g_prime: PlaneGraph, c: Cover, x: int, y: int, vstar: int
) -> Cover:
    """The cover of the identified graph: (i, v*)(j, u) is matched iff
    (i, x)(j, u) or (i, y)(j, u) is."""
    sizes = {v: c.size(v) for v in g_prime.vertices if v != vstar}
    sizes[vstar] = max(c.size(x), c.size(y))
    matchings = {}
    for u, v in g_prime.edges:
        if vstar not in (u, v):
            matchings[(u, v)] = c.pairs(u, v)
            continue
        other = v if u == vstar else u
        pairs = c.pairs(x, other) | c.pairs(y, other)
        for side in (0, 1):
            used = [pair[side] for pair in pairs]
            if len(used) != len(set(used)):
                raise MatchingCollision(
                    f"{x} and {y} both reach {other} with clashing matchings"
                )
        matchings[(vstar, other)] = pairs
    return Cover(sizes=sizes, matchings=matchings)
