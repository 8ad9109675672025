import copy
import json
import os
from enum import Enum
from typing import NamedTuple

from cyy_naive_lib.log import get_logger

from error import EulerMismatch
from graph.plane_graph import PlaneGraph


class ElementKind(str, Enum):
    vertex = "vertex"
    face = "face"


class Element(NamedTuple):
    kind: ElementKind
    id: int

    def __str__(self) -> str:
        return f"{self.kind.value[0]}{self.id}"


def vertex(v: int) -> Element:
    return Element(ElementKind.vertex, v)


def face(face_id: int) -> Element:
    return Element(ElementKind.face, face_id)


class Transfer(NamedTuple):
    source: Element
    target: Element
    # half-units
    amount: int
    rule: str
    # the triangle, edge or face the transfer is attributed to
    via: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {
            "from": str(self.source),
            "to": str(self.target),
            "amount": self.amount,
            "rule": self.rule,
            "via": list(self.via),
        }


class ChargeLedger:
    """Charges of vertices and faces in half-units together with every
    transfer made so far."""

    def __init__(self, initial: dict[Element, int]) -> None:
        self.__initial = dict(initial)
        self.__charges = dict(initial)
        self.__transfers: list[Transfer] = []

    @property
    def initial(self) -> dict[Element, int]:
        return self.__initial

    @property
    def charges(self) -> dict[Element, int]:
        return self.__charges

    @property
    def transfers(self) -> list[Transfer]:
        return self.__transfers

    def charge(self, element: Element) -> int:
        return self.__charges[element]

    def total(self) -> int:
        return sum(self.__charges.values())

    def transfer(self, t: Transfer) -> None:
        assert t.amount > 0
        assert t.source in self.__charges and t.target in self.__charges, t
        self.__charges[t.source] -= t.amount
        self.__charges[t.target] += t.amount
        self.__transfers.append(t)

    def received(self, element: Element, rule: str | None = None) -> list[Transfer]:
        return [
            t
            for t in self.__transfers
            if t.target == element and (rule is None or t.rule == rule)
        ]

    def sent(self, element: Element) -> list[Transfer]:
        return [t for t in self.__transfers if t.source == element]

    def copy(self) -> "ChargeLedger":
        return copy.deepcopy(self)

    def to_dict(self) -> dict:
        return {
            "initial": {str(e): ch for e, ch in self.__initial.items()},
            "transfers": [t.to_dict() for t in self.__transfers],
            "final": {str(e): ch for e, ch in self.__charges.items()},
        }


def initial_charges(g: PlaneGraph) -> ChargeLedger:
    """ch(v) = 2d(v) - 6, ch(f) = d(f) - 6 and ch(f0) = d(f0) + 6, doubled."""
    charges: dict[Element, int] = {
        vertex(v): 2 * (2 * g.degree(v) - 6) for v in g.vertices
    }
    for face_id in range(len(g.faces)):
        length = g.face_length(face_id)
        if face_id == g.outer_face_id:
            charges[face(face_id)] = 2 * (length + 6)
        else:
            charges[face(face_id)] = 2 * (length - 6)
    ledger = ChargeLedger(charges)
    if ledger.total() != 0:
        raise EulerMismatch(f"initial charges of {g} sum to {ledger.total()} half-units")
    get_logger().debug("initial charges of %s elements sum to 0", len(charges))
    return ledger


def export_ledger(ledger: ChargeLedger, path: str, audit: dict | None = None) -> None:
    dirname = os.path.dirname(path)
    if dirname:
        os.makedirs(dirname, exist_ok=True)
    data = ledger.to_dict()
    if audit is not None:
        data["audit"] = audit
    with open(path, "wt", encoding="utf8") as f:
        json.dump(data, f)
