import json
import subprocess
import sys
from pathlib import Path

import pytest

from ringlab.cli import CliConfig, UsageError, main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


@pytest.mark.parametrize("argv,golden", [
    (("gen", "sjt", "--n", "3"), "sjt-3"),
    (("gen", "sjt", "--n", "4"), "sjt-4"),
    (("gen", "plain-hunt", "--bells", "5"), "plain-hunt-5"),
    (("gen", "plain-bob", "--bells", "4"), "plain-bob-4"),
    (("gen", "grandsire", "--bells", "5"), "grandsire-5"),
])
def test_gen_golden(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / f"{golden}.txt").read_text()


def test_gen_formats(capsys):
    code, doc = run_json(capsys, "gen", "plain-hunt", "--bells", "4", "--format", "json")
    assert code == 0 and doc["stage"] == 4 and len(doc["transitions"]) == 8
    code, out, _ = run(capsys, "gen", "plain-hunt", "--bells", "4", "--format", "csv")
    assert out.splitlines()[1] == "2,1,4,3"


def test_gen_with_composition_file(capsys, tmp_path):
    comp = tmp_path / "comp.json"
    comp.write_text(json.dumps({"scheme": "plain-bob-6", "leads": list("PPPPB") * 3}))
    code, out, _ = run(capsys, "gen", "plain-bob", "--bells", "6", "--comp", str(comp))
    rows = out.splitlines()
    assert code == 0 and len(rows) == 181 and rows[-1] == "1 2 3 4 5 6"
    code, _, err = run(capsys, "gen", "grandsire", "--bells", "7", "--comp", str(comp))
    assert code == 2 and "plain-bob-6" in err


def test_gen_inline_composition(capsys):
    code, out, _ = run(capsys, "gen", "grandsire", "--bells", "5", "--comp", "BPBPBP")
    assert code == 0 and out.splitlines()[-1] == "1 2 3 4 5" and len(out.splitlines()) == 61


@pytest.mark.parametrize("argv", [
    ("gen", "plain-bob", "--bells", "3"),
    ("gen", "grandsire", "--bells", "6"),
    ("gen", "plain-hunt"),
    ("gen", "sjt", "--n", "0"),
    ("gen", "bogus"),
])
def test_gen_bad_stage(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_validate(capsys, tmp_path):
    pb4 = tmp_path / "pb4.json"
    pb4.write_text(run(capsys, "gen", "plain-bob", "--bells", "4", "--format", "json")[1])
    code, rep = run_json(capsys, "validate", str(pb4))
    assert code == 0 and rep["passed"] and rep["is_extent"]

    sjt = tmp_path / "sjt4.txt"
    sjt.write_text((GOLDEN / "sjt-4.txt").read_text())
    code, rep = run_json(capsys, "validate", str(sjt), "--ruleset", "ringers")
    assert code == 1 and {v["rule"] for v in rep["violations"]} == {"4R"}
    code, rep = run_json(capsys, "validate", str(sjt), "--ruleset", "motel")
    assert code == 0

    short = tmp_path / "short.txt"
    short.write_text("".join((GOLDEN / "plain-bob-4.txt").read_text().splitlines(True)[:-1]))
    code, rep = run_json(capsys, "validate", str(short))
    assert code == 1 and "1" in {v["rule"] for v in rep["violations"]}


def test_validate_parse_failure(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2 3\n1 1 2\n")
    assert run(capsys, "validate", str(bad))[0] == 2
    broken = tmp_path / "bad.json"
    broken.write_text('{"stage": 3, "name": "x", "transitions": ["(1 4)"]}')
    code, _, err = run(capsys, "validate", str(broken))
    assert code == 2 and "transitions[0]" in err
    assert run(capsys, "validate", str(tmp_path / "missing.txt"))[0] == 2


def test_search(capsys):
    code, doc = run_json(capsys, "search", "hamiltonian", "--group", "S4", "--gens", "(1 2 3);(1 2 3 4)")
    assert code == 0 and doc["status"] == "found" and len(doc["word"].split(",")) == 24
    code, doc = run_json(capsys, "search", "hamiltonian", "--group", "S4", "--gens", "(3 4);(1 2 3)")
    assert code == 1 and doc["status"] == "none" and "word" not in doc
    code, doc = run_json(capsys, "search", "longest", "--scheme", "plain-bob-6")
    assert code == 0 and doc["length"] == 30 and doc["optimal"]


def test_search_budget(capsys, monkeypatch):
    argv = ("search", "hamiltonian", "--group", "S4", "--gens", "(3 4);(1 2 3)")
    code, doc = run_json(capsys, *argv, "--budget", "2")
    assert code == 3 and doc["status"] == "exhausted"
    monkeypatch.setenv("RINGLAB_BUDGET", "2")
    assert run_json(capsys, *argv)[0] == 3
    monkeypatch.setenv("RINGLAB_BUDGET", "lots")
    assert run(capsys, *argv)[0] == 2


def test_search_group_mismatch(capsys):
    code, _, err = run(capsys, "search", "hamiltonian", "--group", "A4", "--gens", "(3 4);(1 2 3)")
    assert code == 2 and "A4" in err
    assert run(capsys, "search", "hamiltonian", "--group", "Q8", "--gens", "(1 2)")[0] == 2
    assert run(capsys, "search", "hamiltonian", "--group", "S4", "--gens", "(1 2")[0] == 2


def test_prove(capsys):
    code, doc = run_json(capsys, "prove", "rankin", "--group", "A6", "--gens", "(3 4 6 7 5);(2 4 7)(3 6 5)")
    assert code == 0 and doc == {"verdict": "impossible", "order_gamma": 5, "index_x": 72, "index_y": 120}
    code, doc = run_json(capsys, "prove", "rankin", "--group", "S3", "--gens", "(1 2);(2 3)")
    assert code == 1 and doc["verdict"] == "inconclusive"
    code, doc = run_json(capsys, "prove", "feasibility", "--scheme", "grandsire-7")
    assert code == 0 and doc["verdict"] == "impossible" and doc["bound_rows"] == 4998
    code, doc = run_json(capsys, "prove", "parity-audit", "--scheme", "grandsire-7", "--steps", "50", "--seed", "7")
    assert code == 0 and doc["parity_law_held"] and doc["identities_held"]
    assert all(k % 2 == 0 for k in doc["chain_counts"])


def test_parity_audit_is_seeded(capsys):
    argv = ("prove", "parity-audit", "--group", "S4", "--gens", "(1 2 3);(3 4)", "--steps", "10", "--seed", "5")
    assert run_json(capsys, *argv) == run_json(capsys, *argv)


def test_config_rejects_bad_budget():
    with pytest.raises(UsageError):
        CliConfig("search", "hamiltonian", budget=0)


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "search", "sideways")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "ringlab", "gen", "sjt", "--n", "2"],
                         capture_output=True, text=True, check=True).stdout
    assert out == "1 2\n2 1\n1 2\n"
