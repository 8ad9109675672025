from cyy_naive_lib.log import get_logger

from coloring.multi_coloring import dump_coloring
from command.common import boundary_coloring, config_cover, config_graph, write_json
from config import VerificationConfig
from error import UnsupportedKind
from reducible.detector import find_reducible
from reducible.reduction import execute_reduction
from reducible.reduction_plan import explain_reduction


def cmd_reduce(config: VerificationConfig) -> int:
    """Color the graph through the first configuration that has a reduction."""
    g = config_graph(config)
    c = config_cover(config, g)
    reports = [r for r in find_reducible(g) if r.has_recipe]
    for report in reports:
        try:
            plan = explain_reduction(report, g, c)
        except UnsupportedKind as e:
            get_logger().info("skipping %s: %s", report.kind.value, e)
            continue
        phi = execute_reduction(
            plan,
            g,
            c,
            boundary_coloring(config, g, c),
            m=config.m,
            budget_sec=config.budget_sec,
            max_vertices=config.max_vertices,
        )
        if config.out is not None:
            dump_coloring(phi, config.m, config.out)
            write_json(plan.to_dict(), config.out + ".plan.json")
        return 0
    raise UnsupportedKind(f"{g} has no configuration with a reduction")
