from cyy_naive_lib.log import get_logger

from command.common import require, write_json
from config import VerificationConfig
from cover.cover import Color, cover_from_list_assignment
from error import LemmaViolated, PreconditionViolated
from tree_colorer.dispatch import color_tree_cover
from tree_colorer.list_assignment import list_coloring_violations, load_list_assignment
from tree_colorer.tree_shape import LIST_SIZES, canonical_shape


def cmd_tree_color(config: VerificationConfig) -> int:
    kind, lists, m = load_list_assignment(require(config.shape, "shape"))
    if set(lists) != set(LIST_SIZES[kind]):
        raise PreconditionViolated(
            f"{kind.value} needs lists for {sorted(LIST_SIZES[kind])}, got {sorted(lists)}"
        )
    shape = canonical_shape(kind)
    c, names = cover_from_list_assignment(
        shape.edges, {v: lists[role] for role, v in shape.roles.items()}
    )
    phi, result = color_tree_cover(shape, c, m)
    assignment = {
        role: frozenset(names[Color(v, i)] for i in phi[v])
        for role, v in shape.roles.items()
    }
    violations = list_coloring_violations(kind, lists, m, assignment)
    if violations:
        raise LemmaViolated(f"{kind.value} list coloring is invalid: {violations}")
    get_logger().info(
        "%s colored through %s%s",
        kind.value,
        result.case,
        " after falling back to search" if result.fallback_used else "",
    )
    write_json(
        {
            "m": m,
            "shape": kind.value,
            "case": result.case,
            "fallback_used": result.fallback_used,
            "assignment": {role: sorted(colors) for role, colors in sorted(assignment.items())},
        },
        config.out,
    )
    return 0
