import concurrent.futures
import json
import os
from collections.abc import Callable, Sequence
from typing import Any

from cyy_naive_lib.log import get_logger
from tqdm import tqdm

from coloring.fold_spec import FoldSpec
from coloring.multi_coloring import MultiColoring, load_coloring
from coloring.solver import exhaustive_solve
from config import VerificationConfig
from cover.cover import Cover, load_cover, random_cover, straight_cover
from error import OuterExtensionUnsat, PreconditionViolated
from graph.graph_file import load_graph
from graph.plane_graph import PlaneGraph


def require(value: str | None, key: str) -> str:
    if value is None:
        raise PreconditionViolated(f"config key {key} is required")
    return value


def config_graph(config: VerificationConfig) -> PlaneGraph:
    return load_graph(require(config.graph, "graph"))


def config_cover(config: VerificationConfig, g: PlaneGraph) -> Cover:
    size = 7 * config.m
    match config.cover:
        case "straight":
            return straight_cover(g, size)
        case "random":
            return random_cover(g, size, seed=config.seed)
    return load_cover(g, config.cover)


def boundary_coloring(
    config: VerificationConfig, g: PlaneGraph, c: Cover
) -> MultiColoring:
    """The configured boundary coloring, or the first one the solver finds."""
    if config.boundary is not None:
        phi, m = load_coloring(config.boundary)
        if m != config.m:
            raise PreconditionViolated(f"boundary coloring has m={m}, run has m={config.m}")
        return phi
    phi = exhaustive_solve(
        g, c, FoldSpec(m=config.m), vertices=g.boundary_cycle(), budget_sec=config.budget_sec
    )
    if phi is None:
        raise OuterExtensionUnsat("the boundary cycle itself has no coloring")
    return phi


def write_json(data: Any, path: str | None) -> None:
    if path is None:
        return
    dirname = os.path.dirname(path)
    if dirname:
        os.makedirs(dirname, exist_ok=True)
    with open(path, "wt", encoding="utf8") as f:
        json.dump(data, f)


def run_batch(
    fun: Callable[..., Any],
    args: Sequence[tuple],
    parallel_number: int,
    desc: str,
) -> list[Any]:
    """fun(*a) for every a in args, in input order whatever order the workers
    finish in."""
    if parallel_number == 1:
        return [fun(*a) for a in tqdm(args, desc=desc)]
    results: list[Any] = [None] * len(args)
    with concurrent.futures.ProcessPoolExecutor(max_workers=parallel_number) as executor:
        futures = {executor.submit(fun, *a): idx for idx, a in enumerate(args)}
        for future in tqdm(
            concurrent.futures.as_completed(futures), total=len(futures), desc=desc
        ):
            results[futures[future]] = future.result()
    get_logger().debug("%s: %s task(s) done", desc, len(results))
    return results
