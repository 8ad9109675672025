import os
from collections import Counter

from cyy_naive_lib.log import get_logger

from command.common import run_batch, write_json
from config import VerificationConfig
from discharging.ledger import export_ledger
from discharging.meta_audit import Verdict, meta_audit
from error import InputError
from graph.graph_file import list_graph_files, load_graph


def audit_file(path: str, ledger_dir: str | None = None) -> dict:
    try:
        result = meta_audit(load_graph(path))
    except InputError as e:
        return {"file": path, "verdict": Verdict.PreconditionViolated.value, "note": str(e)}
    if ledger_dir is not None and result.ledger is not None:
        export_ledger(
            result.ledger,
            os.path.join(ledger_dir, os.path.basename(path)),
            audit=None if result.audit is None else result.audit.to_dict(),
        )
    return {"file": path} | result.to_dict()


def cmd_meta_audit(config: VerificationConfig) -> int:
    """Nonzero iff some graph has neither a reducible configuration nor a
    failed charge claim; with strict, failed charge claims count too."""
    assert config.corpus_dir is not None
    paths = list_graph_files(config.corpus_dir)
    if not paths:
        get_logger().info("no inputs in %s", config.corpus_dir)
        write_json({"graphs": 0, "verdicts": {}, "results": []}, config.out)
        return 0
    results = run_batch(
        audit_file,
        [(p, config.ledger_dir) for p in paths],
        config.parallel_number,
        "meta_audit",
    )
    for result in results:
        match result["verdict"]:
            case Verdict.PreconditionViolated.value:
                get_logger().warning("skipped %s: %s", result["file"], result["note"])
            case Verdict.PaperCounterexample.value:
                get_logger().error("%s is a counterexample to the case analysis", result["file"])
            case Verdict.ChargeClaimFailed.value:
                get_logger().warning(
                    "%s fails charge claims: %s", result["file"], result["witnesses"]
                )
    verdicts = Counter(r["verdict"] for r in results)
    get_logger().info("%s graph(s): %s", len(results), dict(sorted(verdicts.items())))
    write_json(
        {"graphs": len(results), "verdicts": dict(verdicts), "results": results},
        config.out,
    )
    if verdicts[Verdict.PaperCounterexample.value]:
        return 4
    if config.strict and verdicts[Verdict.ChargeClaimFailed.value]:
        return 4
    return 0
