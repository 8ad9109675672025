from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

from cyy_naive_lib.log import get_logger

from discharging.ledger import ChargeLedger, Element, face, vertex
from discharging.rule import Rule
from graph.plane_graph import PlaneGraph
from graph.profile import VertexProfile, profiles

# bound on what a 4+-vertex gives one incident triangle and its other two vertices
TRIANGLE_OUTFLOW_BOUND = 3


class AuditEntry(NamedTuple):
    element: Element
    case: str
    final: int
    claim: str
    passed: bool

    def to_dict(self) -> dict:
        return {
            "element": str(self.element),
            "case": self.case,
            "final": self.final,
            "claim": self.claim,
            "passed": self.passed,
        }


@dataclass
class AuditReport:
    entries: list[AuditEntry] = field(default_factory=list)
    observation_failures: list[str] = field(default_factory=list)
    total: int = 0

    @property
    def failures(self) -> list[AuditEntry]:
        return [e for e in self.entries if not e.passed]

    @property
    def passed(self) -> bool:
        return not self.failures and not self.observation_failures

    def case_counts(self) -> dict[str, int]:
        return dict(sorted(Counter(e.case for e in self.entries).items()))

    def witnesses(self) -> list[str]:
        return [
            f"{e.element} ({e.case}) ends with {e.final} half-units against {e.claim}"
            for e in self.failures
        ] + self.observation_failures

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "total": self.total,
            "entries": [e.to_dict() for e in self.entries],
            "observation_failures": self.observation_failures,
            "case_counts": self.case_counts(),
        }


def vertex_case(p: VertexProfile) -> str:
    if not p.is_internal:
        match p.degree:
            case 2:
                return "external-2"
            case 3:
                return "external-3-" + (
                    "triangular" if p.is_triangular else "nontriangular"
                )
            case 4:
                return f"external-4-{p.triangle_count}-triangular"
        return "external-5plus" if p.degree >= 5 else f"external-{p.degree}"
    match p.degree:
        case 3:
            if p.is_poor:
                return "internal-3-poor"
            return "internal-3-" + ("triangular" if p.is_triangular else "nontriangular")
        case 4:
            return f"internal-4-{p.triangle_count}-triangular" + (
                "-poor" if p.is_poor else ""
            )
        case 5:
            return f"internal-5-{p.triangle_count}-triangular"
    return "internal-6plus" if p.degree >= 6 else f"internal-{p.degree}"


def face_case(g: PlaneGraph, face_id: int) -> str:
    if face_id == g.outer_face_id:
        return "outer"
    length = g.face_length(face_id)
    return "face-6plus" if length >= 6 else f"face-{length}"


def _triangle_outflow(ledger: ChargeLedger, v: int, triangle: tuple[int, ...]) -> int:
    return sum(
        t.amount
        for t in ledger.sent(vertex(v))
        if t.via == triangle
        and t.rule in (Rule.R1.value, Rule.R2_1.value, Rule.R3.value)
    )


def audit_final(g: PlaneGraph, ledger: ChargeLedger) -> AuditReport:
    """Check every final charge against the claims that together make the
    total positive."""
    report = AuditReport(total=ledger.total())
    for v, p in profiles(g).items():
        final = ledger.charge(vertex(v))
        report.entries.append(
            AuditEntry(
                element=vertex(v),
                case=vertex_case(p),
                final=final,
                claim="internal vertex >= 0" if p.is_internal else "boundary vertex >= 0",
                passed=final >= 0,
            )
        )
    for face_id in range(len(g.faces)):
        final = ledger.charge(face(face_id))
        case = face_case(g, face_id)
        match case:
            case "outer":
                claim, passed = "outer face > 0", final > 0
            case "face-3":
                claim, passed = "3-face = 0", final == 0
            case _:
                claim, passed = "bounded face >= 0", final >= 0
        report.entries.append(
            AuditEntry(element=face(face_id), case=case, final=final, claim=claim, passed=passed)
        )

    for face_id in g.bounded_face_ids():
        walk = g.faces[face_id]
        if len(walk) != 3:
            continue
        triangle = tuple(sorted(walk))
        for v in triangle:
            if not g.is_internal(v) or g.degree(v) < 4:
                continue
            outflow = _triangle_outflow(ledger, v, triangle)
            if outflow > TRIANGLE_OUTFLOW_BOUND:
                report.observation_failures.append(
                    f"v{v} gives {outflow} half-units to triangle {triangle} and its vertices"
                )
    if report.total != 0:
        report.observation_failures.append(f"final charges sum to {report.total}")
    get_logger().debug(
        "audit: %s entries, %s failure(s), cases %s",
        len(report.entries),
        len(report.failures) + len(report.observation_failures),
        report.case_counts(),
    )
    return report
