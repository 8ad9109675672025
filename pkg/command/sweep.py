from cyy_naive_lib.log import get_logger

from coloring.fold_spec import FoldSpec
from coloring.solver import exhaustive_solve
from command.common import run_batch, write_json
from config import VerificationConfig
from cover.cover import random_cover
from error import LemmaViolated
from graph.generator import generate_class_graph


def sweep_graph(
    seed: int, max_n: int, covers_per_graph: int, m: int, budget_sec: float
) -> dict:
    """Solve one generated graph under several random 7m-covers; returns the
    seeds of the covers without a coloring."""
    g = generate_class_graph(max_n, seed=seed)
    unsat = []
    for k in range(covers_per_graph):
        cover_seed = seed * covers_per_graph + k
        c = random_cover(g, 7 * m, seed=cover_seed)
        if exhaustive_solve(g, c, FoldSpec(m=m), budget_sec=budget_sec) is None:
            unsat.append(cover_seed)
    return {"seed": seed, "n": g.vertex_count, "covers": covers_per_graph, "unsat": unsat}


def cmd_sweep(config: VerificationConfig) -> int:
    kwargs = config.sweep_kwargs
    args = [
        (
            config.seed + i,
            int(kwargs.get("max_n", 12)),
            int(kwargs.get("covers_per_graph", 20)),
            config.m,
            config.budget_sec,
        )
        for i in range(int(kwargs.get("count", 50)))
    ]
    results = run_batch(sweep_graph, args, config.parallel_number, "sweep")
    write_json(results, config.out)
    failed = [r for r in results if r["unsat"]]
    get_logger().info(
        "%s graph(s), %s cover(s) solved, %s without a coloring",
        len(results),
        sum(r["covers"] for r in results),
        sum(len(r["unsat"]) for r in failed),
    )
    if failed:
        raise LemmaViolated(f"covers without a (7m, 2m)-coloring: {failed}")
    return 0
