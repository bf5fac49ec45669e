import json
import subprocess
import sys

import jsonschema
import pytest

from kapex.cli import main
from kapex.graph6 import from_graph6
from kapex.report import REPORT_SCHEMA


@pytest.fixture
def g6file(tmp_path):
    def write(*lines):
        p = tmp_path / "in.g6"
        p.write_text("\n".join(lines) + "\n")
        return str(p)
    return write


def test_index_values_and_line_errors(g6file, capsys):
    code = main(["index", g6file("Dhc", "Cs", "A_", "!!")])
    out, err = capsys.readouterr()
    assert out.splitlines() == ["40/1 40.0", "81/8 10.125"]
    assert "line 3" in err and "line 4" in err
    assert code == 1


def test_index_alpha_and_json(g6file, capsys):
    assert main(["index", g6file("Dhc"), "--alpha", "1"]) == 0
    assert capsys.readouterr().out.strip() == "5/2 2.5"
    assert main(["index", g6file("Cs"), "--alpha", "0.5"]) == 0
    assert capsys.readouterr().out.strip().startswith("2.449")
    assert main(["index", g6file("Dhc"), "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"graph6": "Dhc", "decimal": 40.0, "exact": "40/1"}


def test_family(capsys, tmp_path):
    assert main(["family", "A:4,4,7"]) == 0
    out, err = capsys.readouterr()
    assert from_graph6(out.strip()).n == 15
    assert json.loads(err)["roles"]["u3"] == [2]
    assert main(["family", "Q:3,3,3", "--roles", str(tmp_path / "r.json")]) == 0
    assert from_graph6(capsys.readouterr().out.strip()).n == 5
    assert main(["family", "Z:3"]) == 2
    assert "q >= 4 required" in capsys.readouterr().err
    assert main(["family", "C:4,4,7", "--dot"]) == 0
    assert capsys.readouterr().out.startswith("graph G {")


def test_apex(g6file, capsys):
    assert main(["apex", g6file("Bw", "N{CI?C@G??_@?A?A?@?")]) == 0
    recs = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    assert recs[0]["k"] == 1 and len(recs[0]["quasi_set"]) == 1
    assert recs[1]["k"] == 4
    assert main(["apex", g6file("CC")]) == 1
    assert "connected" in capsys.readouterr().err


def test_enum_and_guard(capsys):
    assert main(["enum", "--n", "5", "--c", "1"]) == 0
    assert len(capsys.readouterr().out.split()) == 5
    assert main(["enum", "--n", "8", "--c", "1", "--k", "2", "--shard", "1/2"]) == 0
    capsys.readouterr()
    assert main(["enum", "--n", "30", "--c", "1"]) == 2
    assert "guard" in capsys.readouterr().err
    assert main(["enum", "--n", "5", "--c", "1", "--shard", "2/2"]) == 2


def test_search_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["search", "--n", "15", "--c", "1", "--k", "4", "--expected", "C:4,4,7",
                 "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert doc["searches"][0]["min_value"]["exact"] == "5789/64"
    assert doc["config"]["n"] == 15 and doc["tool_version"]


def test_verify_lemma_and_exit_codes(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", "--lemma", "two_vertex_weight_constant", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["lemmas"][0]["verdict"] == "all-pass"
    assert main(["verify", "--lemma", "family_chain", "--n-range", "15:60", "--out", str(out)]) == 0
    assert main(["verify", "--lemma", "weight_difference_decreasing", "--out", str(out)]) == 1
    doc = json.loads(out.read_text())
    assert doc["lemmas"][0]["first_counterexample"] is not None
    assert main(["verify", "--lemma", "bogus"]) == 2
    assert main(["verify"]) == 2
    assert main(["verify", "--lemma", "c_shift", "--grid", "nonsense=3"]) == 2


def test_verify_property_seeded(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert main(["verify", "--property", "add_edge_increase", "--cases", "40", "--seed", "9",
                     "--out", str(p)]) == 0
    da, db = json.loads(a.read_text()), json.loads(b.read_text())
    assert da["lemmas"] == db["lemmas"]


def test_verify_theorem(tmp_path):
    out = tmp_path / "t.json"
    assert main(["verify", "--theorem", "--n", "15", "--k", "4", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert doc["theorems"][0]["searches"][0]["match"] is True


def test_workers_env_fallback(monkeypatch, tmp_path):
    monkeypatch.setenv("KAPEX_WORKERS", "2")
    out = tmp_path / "r.json"
    assert main(["search", "--n", "12", "--c", "1", "--k", "3", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["config"]["workers"] == 2
    monkeypatch.setenv("KAPEX_WORKERS", "x")
    assert main(["search", "--n", "12", "--c", "1", "--k", "3", "--out", str(out)]) == 2


def test_surgery(g6file, capsys):
    assert main(["surgery", "cycle-edge", g6file("Dhc"), "--vertex", "0"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["delta"]["exact"] == "8/1"
    assert main(["surgery", "c-shift", "--sizes", "5,5,5"]) == 0
    assert float(json.loads(capsys.readouterr().out)["delta"]["decimal"]) > 0
    assert main(["surgery", "add-edge", g6file("Ch"), "--u", "0", "--v", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["delta"]["exact"] == "-8/1"
    assert main(["surgery", "gstar", g6file("Dhc"), "--vertex", "0"]) == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "kapex", "index"], input="Dhc\n", capture_output=True,
                         text=True, check=False)
    assert res.returncode == 0 and res.stdout.strip() == "40/1 40.0"
