import itertools
import time
from collections.abc import Iterable, Mapping

from cyy_naive_lib.log import get_logger

from coloring.fold_spec import FoldSpec
from coloring.multi_coloring import MultiColoring, verify_coloring
from cover.cover import Cover
from error import BudgetExceeded, InvalidPartialColoring, SolverTooLarge

_BUDGET_CHECK_INTERVAL = 256


class _Search:
    def __init__(
        self,
        adjacency: dict[int, frozenset[int]],
        c: Cover,
        spec: FoldSpec,
        deadline: float | None,
    ) -> None:
        self.adjacency = adjacency
        self.cover = c
        self.spec = spec
        self.deadline = deadline
        self.nodes = 0
        self.available: dict[int, set[int]] = {}
        self.assignment: MultiColoring = {}

    def seed(self, fixed: Mapping[int, frozenset[int]]) -> bool:
        for v in self.adjacency:
            if v not in fixed:
                self.available[v] = set(range(self.cover.size(v)))
        for v, colors in fixed.items():
            self.assignment[v] = frozenset(colors)
            if not self.__propagate(v, colors, []):
                return False
        return True

    def __propagate(
        self, v: int, colors: Iterable[int], trail: list[tuple[int, int]]
    ) -> bool:
        ok = True
        for w in self.adjacency[v]:
            if w not in self.available:
                continue
            partner = self.cover.partner(v, w)
            for i in colors:
                j = partner.get(i)
                if j is not None and j in self.available[w]:
                    self.available[w].remove(j)
                    trail.append((w, j))
            if len(self.available[w]) < self.spec.fold(w):
                ok = False
        return ok

    def __pick(self) -> int:
        return min(
            self.available,
            key=lambda v: (
                len(self.available[v]) - self.spec.fold(v),
                -len(self.adjacency[v]),
                v,
            ),
        )

    def run(self) -> bool:
        if not self.available:
            return True
        self.nodes += 1
        if (
            self.deadline is not None
            and self.nodes % _BUDGET_CHECK_INTERVAL == 0
            and time.monotonic() > self.deadline
        ):
            raise BudgetExceeded(f"solver budget exceeded after {self.nodes} nodes")
        v = self.__pick()
        candidates = sorted(self.available.pop(v))
        for subset in itertools.combinations(candidates, self.spec.fold(v)):
            trail: list[tuple[int, int]] = []
            self.assignment[v] = frozenset(subset)
            if self.__propagate(v, subset, trail) and self.run():
                return True
            for w, j in trail:
                self.available[w].add(j)
            del self.assignment[v]
        self.available[v] = set(candidates)
        return False


def exhaustive_solve(
    g,
    c: Cover,
    spec: FoldSpec,
    fixed: Mapping[int, frozenset[int]] | None = None,
    vertices: Iterable[int] | None = None,
    budget_sec: float | None = None,
    max_vertices: int | None = None,
) -> MultiColoring | None:
    """Extend fixed to an (H, g)-coloring of g[vertices], or None if no
    extension exists.

    Vertices are branched most-constrained first and fold-subsets are tried in
    lexicographic order, so the answer is deterministic.
    """
    fixed = dict(fixed or {})
    domain = frozenset(g.vertices if vertices is None else vertices) | fixed.keys()
    violations = verify_coloring(g, c, spec, fixed, domain=fixed.keys())
    if violations:
        raise InvalidPartialColoring(f"fixed coloring is invalid: {violations}")
    free = len(domain) - len(fixed)
    if max_vertices is not None and free > max_vertices:
        raise SolverTooLarge(f"{free} free vertices exceed the limit {max_vertices}")
    adjacency: dict[int, set[int]] = {v: set() for v in domain}
    for u, v in g.edges:
        if u in domain and v in domain:
            adjacency[u].add(v)
            adjacency[v].add(u)
    deadline = None if budget_sec is None else time.monotonic() + budget_sec
    search = _Search(
        {v: frozenset(nbrs) for v, nbrs in adjacency.items()}, c, spec, deadline
    )
    found = search.seed(fixed) and search.run()
    get_logger().debug(
        "solver visited %s nodes over %s free vertices: %s",
        search.nodes,
        free,
        "SAT" if found else "UNSAT",
    )
    if not found:
        return None
    result = dict(sorted(search.assignment.items()))
    assert not verify_coloring(g, c, spec, result, domain=domain)
    return result
