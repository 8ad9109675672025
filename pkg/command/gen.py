import os

from cyy_naive_lib.log import get_logger

from command.common import require, run_batch
from config import VerificationConfig
from graph.class_check import check_class_p45
from graph.generator import generate_class_graph
from graph.graph_file import dump_graph


def generate_one(
    out_dir: str, seed: int, target_n: int, boundary_len: int | None, max_tries: int
) -> str:
    g = generate_class_graph(
        target_n, seed=seed, boundary_len=boundary_len, max_tries=max_tries
    )
    assert check_class_p45(g).legal_instance, g
    path = os.path.join(out_dir, f"gen_n{target_n}_s{seed}.json")
    dump_graph(g, path)
    return path


def cmd_gen(config: VerificationConfig) -> int:
    out_dir = require(config.out, "out")
    kwargs = config.gen_kwargs
    count = int(kwargs.get("count", 1))
    args = [
        (
            out_dir,
            config.seed + i,
            int(kwargs.get("target_n", 12)),
            kwargs.get("boundary_len"),
            int(kwargs.get("max_tries", 2000)),
        )
        for i in range(count)
    ]
    paths = run_batch(generate_one, args, config.parallel_number, "gen")
    get_logger().info("wrote %s graph(s) to %s", len(paths), out_dir)
    return 0
