from cyy_naive_lib.log import get_logger

from coloring.fold_spec import FoldSpec
from coloring.multi_coloring import dump_coloring, load_coloring, verify_coloring
from coloring.solver import exhaustive_solve
from command.common import config_cover, config_graph
from config import VerificationConfig
from error import LemmaViolated, OuterExtensionUnsat, PreconditionViolated


def cmd_solve(config: VerificationConfig) -> int:
    g = config_graph(config)
    c = config_cover(config, g)
    fixed = {}
    if config.boundary is not None:
        fixed, m = load_coloring(config.boundary)
        if m != config.m:
            raise PreconditionViolated(f"boundary coloring has m={m}, run has m={config.m}")
    spec = FoldSpec(m=config.m)
    phi = exhaustive_solve(
        g,
        c,
        spec,
        fixed=fixed,
        budget_sec=config.budget_sec,
        max_vertices=config.max_vertices,
    )
    if phi is None:
        raise OuterExtensionUnsat(f"no (H, {2 * config.m})-coloring of {g} extends the input")
    if verify_coloring(g, c, spec, phi):
        raise LemmaViolated("solver returned an invalid coloring")
    get_logger().info("colored %s vertices of %s", len(phi), g)
    if config.out is not None:
        dump_coloring(phi, config.m, config.out)
    return 0
