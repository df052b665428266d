import json
import sys

import pytest
from click.testing import CliRunner

sys.path.insert(0, "src")

from rgc import report as report_mod
from rgc.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_analyze_b3_w3():
    res = run("analyze", "B3", "w3")
    assert res.exit_code == 0, res.output
    assert "normality Normal" in res.output
    assert "smoothness Smooth" in res.output
    assert "orbits: 4" in res.output


def test_analyze_g2_w2_witness():
    res = run("analyze", "G2", "w2")
    assert res.exit_code == 0
    assert "normality NotNormal" in res.output
    assert "missing (1, 0, -1)" in res.output
    assert "2x multiple present" in res.output


def test_analyze_exit_code_on_parse_error():
    res = run("analyze", "Q7", "w1")
    assert res.exit_code == 3
    res = run("analyze", "A2", "w9")
    assert res.exit_code == 3
    res = run("analyze", "A2", "w1+??")
    assert res.exit_code == 3


def test_analyze_json_dot_outputs(tmp_path):
    jf = tmp_path / "r.json"
    df = tmp_path / "r.dot"
    cf = tmp_path / "r.txt"
    res = run("analyze", "A2", "w1", "--json", str(jf), "--dot", str(df),
              "--cones", str(cf))
    assert res.exit_code == 0
    data = json.loads(jf.read_text())
    assert data["schema"] == "rgc/1"
    assert data["overall"] == {"normal": "Normal", "smooth": "Smooth"}
    dot = df.read_text()
    assert dot.count("->") == 2  # three orbits in a chain
    assert "vertex" in cf.read_text()


def test_json_round_trip_identity():
    rep = report_mod.analyze("C2", "3*w1,2*w2")
    text = report_mod.report_to_json(rep)
    decoded = report_mod.report_from_json(text)
    assert decoded == report_mod.normalize_report(rep)
    assert report_mod.report_to_json(decoded) == text  # byte-stable re-emission


def test_cone_and_polytope_schema():
    from fractions import Fraction as F
    m = rep = report_mod.analyze("B2", "w1")["_model"]
    cone = m.local_slice(m.dominant_vertices()[0]).cone
    enc = report_mod.cone_to_jsonable(cone)
    assert enc["schema"] == "rgc/1"
    dec = report_mod.from_jsonable(enc)
    assert dec["generators"] == [[F(-1), F(0)], [F(-1), F(1)]]
    poly = report_mod.polytope_to_jsonable(m.polytope)
    assert len(poly["vertices"]) == 4 and len(poly["facets"]) == 4


def test_analyze_deterministic():
    a = report_mod.report_to_json(report_mod.analyze("B3", "w2"))
    b = report_mod.report_to_json(report_mod.analyze("B3", "w2"))
    assert a == b


def test_table_scopes():
    res = run("table", "classical-small")
    assert res.exit_code == 0, res.output
    assert "25/25 rows match" in res.output
    res = run("table", "stretch-e6")
    assert res.exit_code == 3  # gated behind --allow-heavy
    res = run("table", "stretch-e6", "--allow-heavy")
    assert res.exit_code == 0
    res = run("table", "nonsense")
    assert res.exit_code == 3


def test_tensor_command():
    res = run("tensor", "A1", "w1", "w1")
    assert res.exit_code == 0
    assert "total dim 4 = 2 * 2" in res.output
    res = run("tensor", "C2", "w2", "w2")
    assert "total dim 25 = 5 * 5" in res.output


def test_branch_command():
    res = run("branch", "B3", "w3", "w3")
    assert res.exit_code == 0
    assert "GL3" in res.output.replace(" ", "") or "SL3" in res.output
    lines = [l for l in res.output.splitlines() if l.startswith("(")]
    assert len(lines) == 4  # apex component plus the three wedge components


def test_rgc_threads_env(monkeypatch):
    monkeypatch.setenv("RGC_THREADS", "2")
    res = run("table", "classical-small")
    assert res.exit_code == 0
    assert "25/25 rows match" in res.output
