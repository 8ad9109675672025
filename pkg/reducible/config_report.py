import json
import os
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum

from graph.plane_graph import Edge


class ConfigKind(str, Enum):
    InternalDeg2 = "InternalDeg2"
    CutVertex = "CutVertex"
    SeparatingGoodCycle = "SeparatingGoodCycle"
    BoundaryChord = "BoundaryChord"
    SplitPath2NonTriangle = "SplitPath2NonTriangle"
    SplitPath3 = "SplitPath3"
    L10_Claw4 = "L10_Claw4"
    L11_Adjacent4s = "L11_Adjacent4s"
    L12_TrianglePoorSmallU = "L12_TrianglePoorSmallU"
    L13_FiveStar = "L13_FiveStar"
    L14_Broom = "L14_Broom"
    L15_DoubleClaw = "L15_DoubleClaw"


TRIVIAL_KINDS = frozenset(
    (
        ConfigKind.InternalDeg2,
        ConfigKind.CutVertex,
        ConfigKind.SeparatingGoodCycle,
        ConfigKind.BoundaryChord,
    )
)

# kinds ruled out by counting alone, without a tree to color
PATH_KINDS = frozenset((ConfigKind.SplitPath2NonTriangle, ConfigKind.SplitPath3))


@dataclass(frozen=True)
class ConfigReport:
    kind: ConfigKind
    witness: tuple[int, ...]
    edges: tuple[Edge, ...] = ()
    roles: Mapping[str, int] = field(default_factory=dict)
    variant: str = ""

    @property
    def is_trivial(self) -> bool:
        return self.kind in TRIVIAL_KINDS

    @property
    def has_recipe(self) -> bool:
        return self.kind not in TRIVIAL_KINDS and self.kind not in PATH_KINDS

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "witness": list(self.witness),
            "edges": [list(e) for e in self.edges],
            "roles": dict(sorted(self.roles.items())),
            "variant": self.variant,
        }


def report_from_dict(data: Mapping) -> ConfigReport:
    return ConfigReport(
        kind=ConfigKind(data["kind"]),
        witness=tuple(int(v) for v in data["witness"]),
        edges=tuple((int(u), int(v)) for u, v in data.get("edges", [])),
        roles={role: int(v) for role, v in data.get("roles", {}).items()},
        variant=data.get("variant", ""),
    )


def dump_reports(reports: Iterable[ConfigReport], path: str) -> None:
    """One JSON object per line."""
    dirname = os.path.dirname(path)
    if dirname:
        os.makedirs(dirname, exist_ok=True)
    with open(path, "wt", encoding="utf8") as f:
        for report in reports:
            f.write(json.dumps(report.to_dict()) + "\n")


def load_reports(path: str) -> list[ConfigReport]:
    with open(path, "rt", encoding="utf8") as f:
        return [report_from_dict(json.loads(line)) for line in f if line.strip()]
