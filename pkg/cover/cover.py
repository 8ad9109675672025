import json
import math
import os
import random
from collections.abc import Hashable, Iterable, Mapping
from typing import NamedTuple

from error import GraphFileError
from graph.plane_graph import Edge, PlaneGraph, normalize_edge

Pair = tuple[int, int]


class Color(NamedTuple):
    owner: int
    index: int


class Cover:
    """An f-cover: L(v) = {(v, i) : i < f(v)} and, per edge, a set of index
    pairs. Pairs of an edge (u, v) with u < v are stored as (i, j) meaning
    (u, i)(v, j)."""

    def __init__(
        self,
        sizes: Mapping[int, int],
        matchings: Mapping[Edge, Iterable[Pair]],
    ) -> None:
        self.__sizes: dict[int, int] = dict(sorted(sizes.items()))
        self.__matchings: dict[Edge, frozenset[Pair]] = {}
        for (u, v), pairs in matchings.items():
            if u < v:
                key, oriented = (u, v), frozenset(pairs)
            else:
                key, oriented = (v, u), frozenset((j, i) for i, j in pairs)
            self.__matchings[key] = self.__matchings.get(key, frozenset()) | oriented
        self.__partner: dict[Edge, dict[int, int]] = {}
        self.__incident: dict[int, list[int]] = {v: [] for v in self.__sizes}
        for u, v in self.__matchings:
            self.__incident.setdefault(u, []).append(v)
            self.__incident.setdefault(v, []).append(u)

    @property
    def sizes(self) -> dict[int, int]:
        return self.__sizes

    def size(self, v: int) -> int:
        return self.__sizes[v]

    @property
    def vertices(self) -> list[int]:
        return list(self.__sizes)

    @property
    def matchings(self) -> dict[Edge, frozenset[Pair]]:
        return self.__matchings

    @property
    def edges(self) -> list[Edge]:
        return sorted(self.__matchings)

    def colors(self, v: int) -> list[Color]:
        return [Color(v, i) for i in range(self.__sizes[v])]

    def pairs(self, u: int, v: int) -> frozenset[Pair]:
        """Pairs (i, j) meaning (u, i)(v, j)."""
        if u < v:
            return self.__matchings.get((u, v), frozenset())
        return frozenset((j, i) for i, j in self.__matchings.get((v, u), frozenset()))

    def partner(self, u: int, v: int) -> dict[int, int]:
        if (u, v) not in self.__partner:
            self.__partner[(u, v)] = dict(self.pairs(u, v))
        return self.__partner[(u, v)]

    def matched_neighbors(self, v: int) -> list[int]:
        return self.__incident.get(v, [])

    def color_neighbors(self, x: Color) -> frozenset[Color]:
        result = set()
        for u in self.matched_neighbors(x.owner):
            for i, j in self.pairs(x.owner, u):
                if i == x.index:
                    result.add(Color(u, j))
        return frozenset(result)

    def is_straight(self, u: int, v: int) -> bool:
        return all(i == j for i, j in self.pairs(u, v))

    def restrict(self, vertices: Iterable[int]) -> "Cover":
        keep = frozenset(vertices)
        return Cover(
            sizes={v: f for v, f in self.__sizes.items() if v in keep},
            matchings={
                e: pairs
                for e, pairs in self.__matchings.items()
                if e[0] in keep and e[1] in keep
            },
        )

    def with_pairs(self, u: int, v: int, pairs: Iterable[Pair]) -> "Cover":
        """Copy with the matching on uv replaced; pairs are oriented from u."""
        matchings = {e: p for e, p in self.__matchings.items() if e != normalize_edge(u, v)}
        matchings[(u, v)] = frozenset(pairs)
        return Cover(sizes=self.__sizes, matchings=matchings)

    def to_dict(self) -> dict:
        """Sizes as a list indexed by vertex id when the ids are 0..n-1,
        otherwise keyed by the id; matchings keyed "u-v" with u < v."""
        if list(self.__sizes) == list(range(len(self.__sizes))):
            sizes: list[int] | dict[str, int] = list(self.__sizes.values())
        else:
            sizes = {str(v): f for v, f in self.__sizes.items()}
        return {
            "sizes": sizes,
            "matchings": {
                f"{u}-{v}": sorted([i, j] for i, j in pairs)
                for (u, v), pairs in sorted(self.__matchings.items())
            },
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cover):
            return NotImplemented
        return self.__sizes == other.sizes and {
            e: p for e, p in self.__matchings.items() if p
        } == {e: p for e, p in other.matchings.items() if p}

    def __repr__(self) -> str:
        return f"Cover(vertices={len(self.__sizes)}, edges={len(self.__matchings)})"


def validate_cover(g: PlaneGraph, c: Cover) -> list[str]:
    violations = []
    for v in g.vertices:
        if v not in c.sizes:
            violations.append(f"vertex {v} has no color list")
        elif c.size(v) < 0:
            violations.append(f"vertex {v} has negative list size {c.size(v)}")
    for (u, v), pairs in sorted(c.matchings.items()):
        if not g.has_vertex(u) or not g.has_vertex(v) or not g.has_edge(u, v):
            if pairs:
                violations.append(f"matching on non-edge {u}{v}")
            continue
        for owner, side in ((u, 0), (v, 1)):
            seen: dict[int, int] = {}
            for pair in pairs:
                index = pair[side]
                if not 0 <= index < c.sizes.get(owner, 0):
                    violations.append(f"pair {pair} on {u}{v} leaves L({owner})")
                seen[index] = seen.get(index, 0) + 1
            violations.extend(
                f"color ({owner}, {index}) is matched {count} times on {u}{v}"
                for index, count in sorted(seen.items())
                if count > 1
            )
    return violations


def straight_cover(g: PlaneGraph, size: int) -> Cover:
    assert size >= 1
    return Cover(
        sizes={v: size for v in g.vertices},
        matchings={e: [(i, i) for i in range(size)] for e in g.edges},
    )


def color_neighbors(c: Cover, x: Color) -> frozenset[Color]:
    return c.color_neighbors(x)


def random_cover(
    g: PlaneGraph, size: int, seed: int = 0, density: float = 1.0
) -> Cover:
    """Each edge gets a uniformly random matching with ceil(density * size)
    pairs."""
    assert 0 <= density <= 1
    rng = random.Random(seed)
    pair_count = math.ceil(density * size)
    matchings = {}
    for e in g.edges:
        left = rng.sample(range(size), pair_count)
        right = rng.sample(range(size), pair_count)
        matchings[e] = list(zip(left, right))
    return Cover(sizes={v: size for v in g.vertices}, matchings=matchings)


def cover_from_list_assignment(
    edges: Iterable[Edge], lists: Mapping[int, Iterable[Hashable]]
) -> tuple[Cover, dict[Color, Hashable]]:
    """The cover (u, c)(v, c) for c in F(u) & F(v); colors of a vertex are
    indexed in sorted order of their names."""
    ordered = {v: sorted(names) for v, names in lists.items()}
    position = {
        v: {name: idx for idx, name in enumerate(names)} for v, names in ordered.items()
    }
    matchings = {}
    for u, v in edges:
        shared = position[u].keys() & position[v].keys()
        matchings[(u, v)] = [(position[u][c], position[v][c]) for c in shared]
    names = {
        Color(v, idx): name
        for v, v_names in ordered.items()
        for idx, name in enumerate(v_names)
    }
    sizes = {v: len(v_names) for v, v_names in ordered.items()}
    return Cover(sizes=sizes, matchings=matchings), names


def permute_cover(c: Cover, permutation: Mapping[int, list[int]]) -> Cover:
    """Rename color (v, i) to (v, permutation[v][i])."""

    def image(v: int, i: int) -> int:
        return permutation[v][i] if v in permutation else i

    return Cover(
        sizes=c.sizes,
        matchings={
            (u, v): [(image(u, i), image(v, j)) for i, j in pairs]
            for (u, v), pairs in c.matchings.items()
        },
    )


def _parse_sizes(g: PlaneGraph, sizes: int | list | dict) -> dict[int, int]:
    if isinstance(sizes, int):
        return {v: sizes for v in g.vertices}
    if isinstance(sizes, list):
        return {v: int(f) for v, f in enumerate(sizes)}
    if isinstance(sizes, dict):
        return {int(v): int(f) for v, f in sizes.items()}
    raise TypeError(f"sizes must be an int, a list or an object, not {sizes!r}")


def _parse_edge_key(key: str) -> Edge:
    u, sep, v = key.partition("-")
    if not sep:
        raise ValueError(f"matching key {key!r} is not of the form u-v")
    edge = (int(u), int(v))
    if edge[0] >= edge[1]:
        raise ValueError(f"matching key {key!r} needs u < v")
    return edge


def _parse_matchings(matchings: dict | list) -> dict[Edge, list[Pair]]:
    if isinstance(matchings, dict):
        return {
            _parse_edge_key(key): [(int(i), int(j)) for i, j in pairs]
            for key, pairs in matchings.items()
        }
    # [[u, v, pairs], ...], pairs oriented from u
    if isinstance(matchings, list):
        return {
            (int(u), int(v)): [(int(i), int(j)) for i, j in pairs]
            for u, v, pairs in matchings
        }
    raise TypeError(f"matchings must be an object or a list, not {matchings!r}")


def cover_from_dict(g: PlaneGraph, data: dict) -> Cover:
    if not isinstance(data, dict):
        raise GraphFileError(f"malformed cover: expected an object, got {data!r}")
    try:
        if "straight" in data:
            return straight_cover(g, int(data["straight"]))
        sizes = _parse_sizes(g, data["sizes"])
        matchings = _parse_matchings(data.get("matchings", {}))
    except (AttributeError, KeyError, TypeError, ValueError) as e:
        raise GraphFileError(f"malformed cover: {e}") from e
    return Cover(sizes=sizes, matchings=matchings)


def load_cover(g: PlaneGraph, path: str) -> Cover:
    if not os.path.isfile(path):
        raise GraphFileError(f"no cover file {path}")
    with open(path, "rt", encoding="utf8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise GraphFileError(f"cover file {path} is not JSON: {e}") from e
    return cover_from_dict(g, data)


def dump_cover(c: Cover, path: str) -> None:
    with open(path, "wt", encoding="utf8") as f:
        json.dump(c.to_dict(), f)
