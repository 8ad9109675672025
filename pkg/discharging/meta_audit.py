from dataclasses import dataclass, field
from enum import Enum

from cyy_naive_lib.log import get_logger

from discharging.audit import AuditReport, audit_final
from discharging.ledger import ChargeLedger, initial_charges
from discharging.rule import apply_rules
from graph.plane_graph import PlaneGraph
from reducible.config_report import ConfigReport
from reducible.detector import find_reducible


class Verdict(str, Enum):
    PreconditionViolated = "PreconditionViolated"
    ReducibleFound = "ReducibleFound"
    VacuousInterior = "VacuousInterior"
    ChargeClaimFailed = "ChargeClaimFailed"
    PaperCounterexample = "PaperCounterexample"


@dataclass
class MetaAuditResult:
    verdict: Verdict
    reports: list[ConfigReport] = field(default_factory=list)
    witnesses: list[str] = field(default_factory=list)
    note: str = ""
    ledger: ChargeLedger | None = None
    audit: AuditReport | None = None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "reports": [r.to_dict() for r in self.reports],
            "witnesses": self.witnesses,
            "note": self.note,
            "case_counts": {} if self.audit is None else self.audit.case_counts(),
        }


def run_discharging(g: PlaneGraph) -> tuple[ChargeLedger, AuditReport]:
    ledger = apply_rules(g, initial_charges(g))
    return ledger, audit_final(g, ledger)


def meta_audit(g: PlaneGraph) -> MetaAuditResult:
    """Play reducible configurations against the discharging claims.

    A graph with neither a reducible configuration nor a failed charge claim
    would have positive total charge, which the conservation of charge rules
    out; it is reported as a counterexample to the case analysis.
    """
    reports = find_reducible(g)
    ledger, audit = run_discharging(g)
    if reports:
        verdict = Verdict.ReducibleFound
        result = MetaAuditResult(verdict=verdict, reports=reports)
    elif not g.internal_vertices:
        verdict = Verdict.VacuousInterior
        result = MetaAuditResult(
            verdict=verdict, note="no internal vertices, nothing to reduce"
        )
    elif not audit.passed:
        verdict = Verdict.ChargeClaimFailed
        result = MetaAuditResult(verdict=verdict, witnesses=audit.witnesses())
    else:
        verdict = Verdict.PaperCounterexample
        result = MetaAuditResult(
            verdict=verdict,
            note="no reducible configuration and every charge claim holds",
        )
        get_logger().error("%s: %s", g, result.note)
    result.ledger = ledger
    result.audit = audit
    get_logger().debug("%s: %s", g, verdict.value)
    return result
