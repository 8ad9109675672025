import json
import os
from collections import Counter

import networkx as nx
import pytest

from discharging.audit import audit_final, face_case, vertex_case
from discharging.ledger import (ChargeLedger, Transfer, export_ledger, face,
                                initial_charges, vertex)
from discharging.meta_audit import Verdict, meta_audit, run_discharging
from discharging.rule import apply_rules
from error import EulerMismatch, PreconditionViolated
from graph.generator import cycle_graph
from graph.plane_graph import PlaneGraph
from graph.profile import vertex_profile


def test_initial_charges(c7) -> None:
    ledger = initial_charges(c7)
    assert ledger.charge(vertex(0)) == -4
    assert ledger.charge(face(c7.outer_face_id)) == 26
    assert ledger.charge(face(c7.bounded_face_ids()[0])) == 2
    assert ledger.total() == 0


def test_euler_mismatch(k3) -> None:
    broken = PlaneGraph(k3.rotation, [k3.outer_face], 0)
    with pytest.raises(EulerMismatch):
        initial_charges(broken)


def test_cycle_discharging(c7) -> None:
    ledger, audit = run_discharging(c7)
    assert ledger.charge(face(c7.outer_face_id)) == -2
    assert all(ledger.charge(vertex(v)) == 0 for v in c7.vertices)
    assert [t.rule for t in ledger.received(vertex(3))] == ["R4"]
    assert not audit.passed
    (failure,) = audit.failures
    assert failure.case == "outer"


def test_triangle_face_is_paid(k3) -> None:
    ledger, audit = run_discharging(k3)
    triangle = face(k3.bounded_face_ids()[0])
    assert ledger.charge(triangle) == 0
    assert len(ledger.received(triangle, "R1")) == 3
    entry = next(e for e in audit.entries if e.element == triangle)
    assert entry.case == "face-3" and entry.passed


def test_poor_3_vertex(poor_3_graph) -> None:
    g = poor_3_graph
    ledger, _ = run_discharging(g)
    donors = {t.source for t in ledger.received(vertex(1), "R2(1)")}
    assert donors == {vertex(0), vertex(2)}
    assert ledger.charge(vertex(1)) == 0
    assert ledger.charge(face(g.dart_face(0, 1))) == 0
    (t,) = ledger.received(vertex(2), "R2(2)")
    assert t.source == vertex(6) and t.amount == 2
    assert vertex_case(vertex_profile(g, 1)) == "internal-3-poor"
    assert vertex_case(vertex_profile(g, 0)) == "internal-4-1-triangular"


def test_poor_4_vertex(double_claw_graph) -> None:
    ledger, _ = run_discharging(double_claw_graph)
    donors = {t.source for t in ledger.received(vertex(0), "R3")}
    assert donors == {vertex(1), vertex(2)}
    assert vertex_case(vertex_profile(double_claw_graph, 0)) == "internal-4-1-triangular-poor"


@pytest.mark.parametrize(
    "name", ["claw4_graph", "adjacent_4_graph", "five_star_graph", "broom_graph"]
)
def test_charge_is_conserved(name, request) -> None:
    g = request.getfixturevalue(name)
    initial = initial_charges(g)
    ledger = apply_rules(g, initial)
    assert ledger.total() == 0
    assert initial.transfers == []
    assert audit_final(g, ledger).total == 0
    with pytest.raises(PreconditionViolated):
        apply_rules(g, ledger)


def test_ledger_transfer() -> None:
    ledger = ChargeLedger({vertex(0): 2, face(0): -2})
    ledger.transfer(Transfer(vertex(0), face(0), 2, "R1"))
    assert ledger.charge(face(0)) == 0
    assert ledger.sent(vertex(0))[0].amount == 2
    assert ledger.initial[vertex(0)] == 2
    with pytest.raises(AssertionError):
        ledger.transfer(Transfer(vertex(0), face(0), 0, "R1"))


def test_export_ledger(tmp_path, c7) -> None:
    ledger, audit = run_discharging(c7)
    path = os.path.join(tmp_path, "ledger", "c7.json")
    export_ledger(ledger, path, audit.to_dict())
    with open(path, encoding="utf8") as f:
        data = json.load(f)
    assert data["final"][f"f{c7.outer_face_id}"] == -2
    assert len(data["transfers"]) == 7
    assert data["audit"]["passed"] is False
    assert face_case(c7, c7.outer_face_id) == "outer"


def test_meta_audit(claw4_graph, c7) -> None:
    result = meta_audit(claw4_graph)
    assert result.verdict == Verdict.ReducibleFound
    assert any(r.kind.value == "L10_Claw4" for r in result.reports)
    vacuous = meta_audit(c7)
    assert vacuous.verdict == Verdict.VacuousInterior
    assert vacuous.ledger is not None and vacuous.audit is not None
    assert vacuous.to_dict()["verdict"] == "VacuousInterior"
    with pytest.raises(PreconditionViolated):
        meta_audit(cycle_graph(5))


def evaluate_rules(g) -> Counter:
    """The transfers every rule prescribes, read in one pass over the faces
    and vertices straight from the adjacency."""
    graph = g.nx_graph
    outer = set(g.outer_face)

    def isolated(v: int) -> list[int]:
        return [u for u in graph[v] if not set(graph[u]) & set(graph[v])]

    def poor(v: int) -> bool:
        if v in outer or nx.triangles(graph, v) == 0:
            return False
        small = [u for u in isolated(v) if u not in outer and graph.degree(u) == 3]
        return {3: len(small) >= 1, 4: len(small) >= 2}.get(graph.degree(v), False)

    expected: Counter = Counter()
    for face_id, walk in enumerate(g.faces):
        if face_id != g.outer_face_id and len(walk) == 3:
            for v in walk:
                expected[(vertex(v), face(face_id), 2, "R1")] += 1
    f0 = face(g.outer_face_id)
    for v in graph:
        degree, triangles = graph.degree(v), nx.triangles(graph, v)
        if v in outer:
            match degree:
                case 2:
                    expected[(f0, vertex(v), 4, "R4")] += 1
                case 3:
                    rule = ("R5(1)", 3) if triangles else ("R5(2)", 2)
                    expected[(f0, vertex(v), rule[1], rule[0])] += 1
                case 4 if triangles:
                    rule = ("R6(2)", 1) if triangles == 1 else ("R6(1)", 2)
                    expected[(f0, vertex(v), rule[1], rule[0])] += 1
            continue
        on_triangle = [u for u in graph[v] if u not in isolated(v)]
        if degree == 3 and triangles:
            if poor(v):
                for u in on_triangle:
                    expected[(vertex(u), vertex(v), 1, "R2(1)")] += 1
            else:
                for u in isolated(v):
                    expected[(vertex(u), vertex(v), 2, "R2(2)")] += 1
        elif degree == 4 and poor(v):
            for u in on_triangle:
                expected[(vertex(u), vertex(v), 1, "R3")] += 1
    return expected


@pytest.mark.parametrize(
    "name",
    [
        "g12a",
        "claw4_graph",
        "adjacent_4_graph",
        "five_star_graph",
        "poor_3_graph",
        "broom_graph",
        "double_claw_graph",
        "poor_4_graph",
    ],
)
def test_rules_match_independent_evaluation(name, request) -> None:
    g = request.getfixturevalue(name)
    ledger, _ = run_discharging(g)
    expected = evaluate_rules(g)
    assert Counter((t.source, t.target, t.amount, t.rule) for t in ledger.transfers) == expected
    charges = {vertex(v): 2 * (2 * g.degree(v) - 6) for v in g.vertices}
    for face_id, walk in enumerate(g.faces):
        sign = 1 if face_id == g.outer_face_id else -1
        charges[face(face_id)] = 2 * (len(walk) + 6 * sign)
    for (source, target, amount, _), count in expected.items():
        charges[source] -= amount * count
        charges[target] += amount * count
    assert ledger.charges == charges


def test_g12a_ledger(g12a) -> None:
    ledger, _ = run_discharging(g12a)

    def face_with(*vertices: int):
        (face_id,) = [
            i
            for i in g12a.bounded_face_ids()
            if sorted(g12a.faces[i]) == sorted(vertices)
        ]
        return face(face_id)

    assert Counter(t.rule for t in ledger.transfers) == {
        "R1": 3, "R2(2)": 3, "R4": 4, "R5(2)": 3
    }
    assert {(t.source, t.target) for t in ledger.transfers if t.rule == "R2(2)"} == {
        (vertex(0), vertex(7)),
        (vertex(3), vertex(8)),
        (vertex(10), vertex(9)),
    }
    nonzero = {e: ch for e, ch in ledger.charges.items() if ch}
    assert nonzero == {
        vertex(2): 2,
        vertex(10): -6,
        vertex(11): -4,
        face_with(0, 1, 2, 11, 10, 9, 7): 2,
        face_with(0, 7, 8, 3, 4, 5, 6): 2,
        face(g12a.outer_face_id): 4,
    }
    assert ledger.charge(face_with(7, 8, 9)) == 0
    assert ledger.charge(face_with(2, 3, 8, 9, 10, 11)) == 0
    assert meta_audit(g12a).verdict == Verdict.ReducibleFound
