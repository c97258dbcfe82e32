import json
import subprocess
import sys

import pytest

from wienerorient import build_dk, parse_mixed_graph
from wienerorient.cli import run


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {
        "p3": "vertices 3\n0 -> 1\n1 -> 2\n",
        "p3u": "vertices 3\n0 -- 1\n1 -- 2\n",
        "k3": "vertices 3\n0 -- 1\n1 -- 2\n0 -- 2\n",
        "c5": "vertices 5\n0 -- 1\n1 -- 2\n2 -- 3\n3 -- 4\n4 -- 0\n",
        "cyc": "vertices 3\n0 -> 1\n1 -> 2\n2 -> 0\n",
        "star": "vertices 4\n0 -- 1\n0 -- 2\n0 -- 3\n",
        "mixed": "vertices 3\n0 -- 1\n1 -> 2\n",
        "bad": "vertices 2\n0 -- 0\n",
    }.items():
        p = tmp_path / f"{name}.graph"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def ok(argv):
    r = run(argv)
    assert r.exit_code == 0, r.stderr
    return r.stdout


def test_spec_examples(files):
    assert ok(["closedform", "W_TK", "3"]) == "145\n"
    assert ok(["wiener", files["p3"], "--mode", "directed"]) == "4\n"
    r = run(["gen", "tk", "4"])
    assert r.exit_code == 2
    assert "k must be a positive multiple of 3" in r.stderr


def test_usage_errors(files):
    assert run(["frobnicate"]).exit_code == 2
    assert run(["wiener", files["p3"], "--mode", "sideways"]).exit_code == 2
    assert run(["wiener", "/nonexistent/file"]).exit_code == 2
    r = run(["wiener", files["bad"]])
    assert r.exit_code == 2 and "line 2" in r.stderr
    assert run(["closedform", "NOPE", "3"]).exit_code == 2
    assert run(["orient", "max", files["k3"], "--workers", "0"]).exit_code == 2
    assert run(["hampath", files["k3"], "0", "7"]).exit_code == 2


def test_closedform_rational():
    assert ok(["closedform", "CLAIM5_A", "6"]) == "15/2\n"
    assert json.loads(ok(["closedform", "CLAIM5_A", "6", "--json"]))["value"] == "15/2"


def test_gen_matches_library():
    text = ok(["gen", "dk", "3"])
    assert parse_mixed_graph(text) == build_dk(3).graph
    assert "# label 0 w1" in text
    payload = json.loads(ok(["gen", "dk", "3", "--json"]))
    assert payload["labels"]["y1"] == "9"
    assert len(payload["arcs"]) == 9


def test_wiener_modes(files):
    assert ok(["wiener", files["p3u"]]) == "4\n"
    assert ok(["wiener", files["cyc"], "--mode", "max"]) == "6\n"
    assert json.loads(ok(["wiener", files["cyc"], "--mode", "directed", "--json"]))["value"] == 9


def test_orient(files):
    out = ok(["orient", "max", files["k3"], "--all-optima"])
    assert "value: 9" in out and out.count("witness:") == 2
    payload = json.loads(ok(["orient", "min", files["c5"], "--json"]))
    assert payload["value"] == 7 and payload["objective"] == "min"
    assert set(payload) == {"objective", "value", "witnesses", "explored", "pruned", "strategy"}
    assert payload["witnesses"][0][0] in ("0->1", "1->0")
    assert json.loads(ok(["orient", "max", files["star"], "--strategy", "bnb", "--json"]))["value"] == 7
    assert json.loads(ok(["orient", "max", files["k3"], "--strategy", "local", "--seed", "3", "--json"]))[
        "strategy"
    ] == "local"
    assert run(["orient", "min", files["k3"], "--strategy", "bnb"]).exit_code == 2


def test_zigzag_center(tmp_path):
    p = tmp_path / "dk.graph"
    p.write_text(ok(["gen", "dk", "3"]))
    assert ok(["zigzag", str(p)]) == "yes\n"
    assert ok(["zigzag", str(p), "--method", "path"]) == "yes\n"
    assert ok(["center", str(p)]) == "none\n"
    q = tmp_path / "path.graph"
    q.write_text("vertices 3\n0 -> 1\n1 -> 2\n")
    assert ok(["center", str(q)]) == "0\n"
    assert json.loads(ok(["center", str(q), "--json"])) == {"center": 0}


def test_reduction_commands(files):
    out = ok(["gadget", files["k3"], "0", "2"])
    assert out.startswith("vertices 59\n")
    assert "# label 3 a0" in out and "# label 31 b0" in out
    assert ok(["hampath", files["k3"], "0", "2"]) == "0 1 2\n"
    assert ok(["hampath", files["star"], "1", "2"]) == "none\n"
    rep = json.loads(ok(["reduction-verify", files["k3"], "0", "2", "--json"]))
    assert rep["status"] == "pass" and all(rep["checks"].values())
    assert "vacuous" in ok(["reduction-verify", files["star"], "1", "2"])


def test_transitive_command(files):
    assert ok(["transitive", files["cyc"]]) == "transitive: no\n"
    assert ok(["transitive", files["c5"]]) == "comparability: no\n"
    out = ok(["transitive", files["k3"]]).splitlines()
    assert out[0] == "comparability: yes" and len(out) == 4
    assert json.loads(ok(["transitive", files["k3"], "--json"]))["comparability"] is True
    assert run(["transitive", files["mixed"]]).exit_code == 2


def test_tournament_command():
    payload = json.loads(ok(["tournament-max", "3", "--json"]))
    assert payload["value"] == 9 and payload["bound"] == 3
    assert ok(["tournament-max", "3"]).startswith("value: 9\nbound: 3\n")
    assert run(["tournament-max", "9"]).exit_code == 2


def test_text_and_json_agree(files):
    text = ok(["orient", "max", files["k3"]])
    payload = json.loads(ok(["orient", "max", files["k3"], "--json"]))
    assert f"value: {payload['value']}" in text
    assert f"explored: {payload['explored']}" in text
    assert f"witness: {' '.join(payload['witnesses'][0])}" in text


def test_repeat_runs_identical(files):
    argv = ["orient", "max", files["c5"], "--all-optima", "--json"]
    assert ok(argv) == ok(argv) == ok(argv + ["--workers", "4"])


def test_stdin_and_module_entry(files):
    with open(files["p3"]) as fh:
        proc = subprocess.run(
            [sys.executable, "-m", "wienerorient", "wiener", "-", "--mode", "directed"],
            stdin=fh,
            capture_output=True,
            text=True,
        )
    assert proc.returncode == 0 and proc.stdout == "4\n"
    proc = subprocess.run([sys.executable, "-m", "wienerorient", "gen", "tk", "4"], capture_output=True, text=True)
    assert proc.returncode == 2
