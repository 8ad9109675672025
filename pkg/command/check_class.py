from cyy_naive_lib.log import get_logger

from command.common import run_batch, write_json
from config import VerificationConfig
from error import InputError
from graph.class_check import check_class_p45
from graph.graph_file import list_graph_files, load_graph


def class_report(path: str) -> dict:
    try:
        report = check_class_p45(load_graph(path))
    except InputError as e:
        return {"file": path, "in_class": False, "error": str(e)}
    return {"file": path} | report.to_dict()


def cmd_check_class(config: VerificationConfig) -> int:
    """Exit 0 iff the graph (or every corpus graph) has no 4- or 5-cycle."""
    if config.graph is not None:
        paths = [config.graph]
    else:
        assert config.corpus_dir is not None
        paths = list_graph_files(config.corpus_dir)
    results = run_batch(
        class_report, [(p,) for p in paths], config.parallel_number, "check_class"
    )
    for result in results:
        if not result["in_class"]:
            get_logger().info(
                "%s is not in the class: %s",
                result["file"],
                result.get("error")
                or f"4-cycle {result['four_cycle']}, 5-cycle {result['five_cycle']}",
            )
    members = sum(1 for r in results if r["in_class"])
    get_logger().info("%s of %s graph(s) in the class", members, len(results))
    write_json(results[0] if config.graph is not None else results, config.out)
    return 0 if members == len(results) else 1
