from collections.abc import Iterable, Mapping

from coloring.fold_spec import FoldSpec
from coloring.multi_coloring import MultiColoring, verify_coloring
from cover.cover import Cover
from error import InvalidPartialColoring, PreconditionViolated
from graph.plane_graph import PlaneGraph


class ResidualCover:
    def __init__(
        self,
        base: Cover,
        residual_lists: Mapping[int, frozenset[int]],
    ) -> None:
        self.base = base
        self.residual_lists: dict[int, frozenset[int]] = dict(
            sorted(residual_lists.items())
        )
        self.residual_matchings = {
            (u, v): frozenset(
                (i, j)
                for i, j in pairs
                if i in self.residual_lists[u] and j in self.residual_lists[v]
            )
            for (u, v), pairs in base.matchings.items()
        }

    def sizes(self) -> dict[int, int]:
        return {v: len(colors) for v, colors in self.residual_lists.items()}

    def as_cover(
        self, limit: Mapping[int, int] | None = None
    ) -> tuple[Cover, dict[int, list[int]]]:
        """Reindex surviving colors to 0..k-1, keeping the first limit[v] of
        them; the second value maps new indices back to original ones."""
        back_map: dict[int, list[int]] = {}
        for v, colors in self.residual_lists.items():
            kept = sorted(colors)
            if limit is not None and v in limit:
                if len(kept) < limit[v]:
                    raise PreconditionViolated(
                        f"residual list of {v} has {len(kept)} colors, {limit[v]} needed"
                    )
                kept = kept[: limit[v]]
            back_map[v] = kept
        position = {v: {i: k for k, i in enumerate(kept)} for v, kept in back_map.items()}
        matchings = {
            (u, v): [
                (position[u][i], position[v][j])
                for i, j in pairs
                if i in position[u] and j in position[v]
            ]
            for (u, v), pairs in self.residual_matchings.items()
        }
        sizes = {v: len(kept) for v, kept in back_map.items()}
        return Cover(sizes=sizes, matchings=matchings), back_map


def lift_coloring(
    psi: Mapping[int, frozenset[int]], back_map: Mapping[int, list[int]]
) -> MultiColoring:
    return {v: frozenset(back_map[v][k] for k in colors) for v, colors in psi.items()}


def residual(
    g: PlaneGraph,
    c: Cover,
    phi: Mapping[int, frozenset[int]],
    z: Iterable[int],
) -> ResidualCover:
    """The cover of G[Z] left after phi colors (part of) G - Z."""
    z = frozenset(z)
    if z & phi.keys():
        raise InvalidPartialColoring(f"phi colors vertices {sorted(z & phi.keys())} of Z")
    phi_spec = FoldSpec(
        m=1,
        g={v: len(colors) for v, colors in phi.items()},
        f={v: max(c.size(v), len(colors)) for v, colors in phi.items()},
    )
    violations = verify_coloring(g, c, phi_spec, phi, domain=phi.keys())
    if violations:
        raise InvalidPartialColoring(f"phi is not a coloring of G - Z: {violations}")
    lists = {}
    for v in sorted(z):
        blocked = set()
        removed_bound = 0
        for u in g.neighbors(v):
            if u in z or u not in phi:
                continue
            partner = c.partner(u, v)
            blocked.update(partner[i] for i in phi[u] if i in partner)
            removed_bound += len(phi[u])
        lists[v] = frozenset(range(c.size(v))) - blocked
        assert len(lists[v]) >= c.size(v) - removed_bound
    return ResidualCover(base=c.restrict(z), residual_lists=lists)


def outside_degree(g: PlaneGraph, v: int, z: Iterable[int]) -> int:
    z = frozenset(z)
    return sum(1 for u in g.neighbors(v) if u not in z)
