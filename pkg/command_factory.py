from collections.abc import Callable

from cyy_naive_lib.log import get_logger

from command.check_class import cmd_check_class
from command.gen import cmd_gen
from command.meta_audit import cmd_meta_audit
from command.sweep import cmd_sweep
from command.reduce import cmd_reduce
from command.solve import cmd_solve
from command.tree_color import cmd_tree_color
from config import VerificationConfig
from error import DPColorError

COMMANDS: dict[str, Callable[[VerificationConfig], int]] = {
    "check_class": cmd_check_class,
    "solve": cmd_solve,
    "tree_color": cmd_tree_color,
    "meta_audit": cmd_meta_audit,
    "gen": cmd_gen,
    "reduce": cmd_reduce,
    "sweep": cmd_sweep,
}


def get_command(name: str | None) -> Callable[[VerificationConfig], int]:
    if name not in COMMANDS:
        raise RuntimeError(f"unknown command {name}")
    return COMMANDS[name]


def run_command(config: VerificationConfig) -> int:
    """Run the configured command and map its outcome onto an exit code."""
    config.apply_global_config()
    command = get_command(config.command)
    try:
        return command(config)
    except DPColorError as e:
        get_logger().error("%s: %s", type(e).__name__, e)
        return e.exit_code
    except AssertionError as e:
        get_logger().error("internal assertion failed: %s", e)
        return 4
