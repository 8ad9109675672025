import json
import os

import pytest
from conftest import CORPUS
from omegaconf import OmegaConf

from command_factory import get_command, run_command
from config import VerificationConfig


def make_config(**kwargs) -> VerificationConfig:
    config = VerificationConfig()
    config.load_config_from_file(kwargs)
    return config


def corpus_file(name: str) -> str:
    return os.path.join(CORPUS, name)


def read_json(path: str):
    with open(path, encoding="utf8") as f:
        return json.load(f)


def test_config_keys(monkeypatch, tmp_path) -> None:
    with pytest.raises(RuntimeError):
        make_config(command="solve", colour="red")
    with pytest.raises(RuntimeError):
        make_config(command="solve", m=0)
    with pytest.raises(RuntimeError):
        make_config(command="solve", parallel_number=0)
    monkeypatch.setenv("DPCOLOR_CORPUS", str(tmp_path))
    assert make_config(command="meta_audit").corpus_dir == str(tmp_path)
    monkeypatch.delenv("DPCOLOR_CORPUS")
    assert os.path.basename(make_config(command="meta_audit").corpus_dir) == "corpus"
    config = VerificationConfig()
    config.load_config_from_file(OmegaConf.create({"command": "solve", "save_log": True}))
    assert config.log_file.startswith(os.path.join("log", "solve"))
    assert config.log_file.endswith(".log")


def test_flag_overrides() -> None:
    config = make_config(command="meta_audit", m=2, seed=7, budget_sec=120, out="summary.json", strict=True)
    assert (config.m, config.seed, config.budget_sec) == (2, 7, 120)
    assert config.out == "summary.json" and config.strict


def test_unknown_command() -> None:
    with pytest.raises(RuntimeError):
        get_command("color_everything")


def test_check_class() -> None:
    assert run_command(make_config(command="check_class", graph=corpus_file("c7.json"))) == 0
    assert run_command(make_config(command="check_class", graph=corpus_file("c5.json"))) == 1
    assert run_command(make_config(command="check_class", graph=corpus_file("g12a.json"))) == 0
    assert run_command(make_config(command="check_class", graph=corpus_file("poor4.json"))) == 1
    assert run_command(make_config(command="check_class", corpus_dir=CORPUS)) == 1


def test_solve(tmp_path) -> None:
    out = os.path.join(tmp_path, "k3.json")
    config = make_config(command="solve", graph=corpus_file("k3.json"), out=out)
    assert run_command(config) == 0
    data = read_json(out)
    assert data["m"] == 1


def test_solve_with_cover_file(tmp_path) -> None:
    cover = tmp_path / "k3_cover.json"
    cover.write_text(json.dumps({"sizes": [7, 7, 7], "matchings": {"0-1": [[0, 1]], "1-2": [[2, 2]]}}))
    config = make_config(command="solve", graph=corpus_file("k3.json"), cover=str(cover))
    assert run_command(config) == 0
    cover.write_text(json.dumps({"sizes": {"0": 7}, "matchings": {"2-1": [[0, 0]]}}))
    assert run_command(config) == 1


def test_solve_exit_codes() -> None:
    missing = make_config(command="solve", graph=corpus_file("missing.json"))
    assert run_command(missing) == 1
    too_large = make_config(command="solve", graph=corpus_file("c7.json"), max_vertices=3)
    assert run_command(too_large) == 3


def test_tree_color(tmp_path) -> None:
    out = os.path.join(tmp_path, "claw.json")
    config = make_config(
        command="tree_color", shape=corpus_file(os.path.join("lists", "claw_m1.json")), out=out
    )
    assert run_command(config) == 0
    data = read_json(out)
    assert data["shape"] == "claw"
    assert not data["fallback_used"]
    assert all(len(colors) == 2 for colors in data["assignment"].values())
    assert run_command(make_config(command="tree_color")) == 1


def test_meta_audit(tmp_path) -> None:
    out = os.path.join(tmp_path, "summary.json")
    ledger_dir = os.path.join(tmp_path, "ledgers")
    config = make_config(
        command="meta_audit", corpus_dir=CORPUS, out=out, ledger_dir=ledger_dir
    )
    assert run_command(config) == 0
    summary = read_json(out)
    verdicts = {os.path.basename(r["file"]): r["verdict"] for r in summary["results"]}
    assert verdicts == {
        "c5.json": "PreconditionViolated",
        "c6.json": "VacuousInterior",
        "c7.json": "VacuousInterior",
        "claw4_wrapped.json": "ReducibleFound",
        "g12a.json": "ReducibleFound",
        "k3.json": "VacuousInterior",
        "poor4.json": "PreconditionViolated",
    }
    assert os.path.isfile(os.path.join(ledger_dir, "claw4_wrapped.json"))
    assert os.path.isfile(os.path.join(ledger_dir, "g12a.json"))
    assert not os.path.exists(os.path.join(ledger_dir, "poor4.json"))
    assert not os.path.exists(os.path.join(ledger_dir, "c5.json"))


def test_meta_audit_empty_corpus(tmp_path) -> None:
    out = os.path.join(tmp_path, "summary.json")
    config = make_config(command="meta_audit", corpus_dir=str(tmp_path), out=out)
    assert run_command(config) == 0
    assert read_json(out)["graphs"] == 0


def test_reduce(tmp_path) -> None:
    out = os.path.join(tmp_path, "coloring.json")
    config = make_config(
        command="reduce",
        graph=corpus_file("claw4_wrapped.json"),
        cover="random",
        seed=1,
        out=out,
    )
    assert run_command(config) == 0
    plan = read_json(out + ".plan.json")
    assert plan["kind"] == "L10_Claw4"
    assert plan["z"] == [0, 1, 2, 3]
    assert os.path.isfile(out)


def test_gen(tmp_path) -> None:
    out_dir = os.path.join(tmp_path, "gen")
    config = make_config(
        command="gen", out=out_dir, gen_kwargs={"count": 2, "target_n": 9}
    )
    assert run_command(config) == 0
    assert sorted(os.listdir(out_dir)) == ["gen_n9_s0.json", "gen_n9_s1.json"]
    check = make_config(command="check_class", corpus_dir=out_dir)
    assert run_command(check) == 0
    assert run_command(make_config(command="gen")) == 1


def test_sweep(tmp_path) -> None:
    out = os.path.join(tmp_path, "sweep.json")
    config = make_config(
        command="sweep",
        out=out,
        sweep_kwargs={"count": 2, "covers_per_graph": 2, "max_n": 8},
    )
    assert run_command(config) == 0
    results = read_json(out)
    assert [r["seed"] for r in results] == [0, 1]
    assert all(r["unsat"] == [] for r in results)
