import json
import subprocess
import sys

import pytest

from foldcat.appendix import FIXTURES
from foldcat.cli import main

from test_curves import DOT_A2_12

EX3 = json.dumps({k: v for k, v in FIXTURES[3].items() if k != "expect"})
EX7 = json.dumps({k: v for k, v in FIXTURES[7].items() if k != "expect"})
EX8 = json.dumps({k: v for k, v in FIXTURES[8].items() if k != "expect"})


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_roots_json(capsys):
    code, out, _ = run(capsys, "roots", "B", "2", "--json")
    assert code == 0
    assert json.loads(out)["positive_roots"] == [[1, 0], [0, 1], [1, 1], [1, 2]]


def test_global_flags_before_subcommand(capsys):
    code, out, _ = run(capsys, "--json", "--system", "A3", "galleries", "1,2")
    assert code == 0
    assert json.loads(out)["galleries"] == ["(e,e)", "(e,s2)", "(s1,e)", "(s1,s2)"]


def test_beta_text(capsys):
    code, out, _ = run(capsys, "beta", "1,2", "(s1,e)")
    assert code == 0
    assert out.splitlines() == ["beta_1(s1,e) = a1", "beta_2(s1,e) = -a1-a2"]


def test_moment_graph_dot(capsys, tmp_path):
    code, out, _ = run(capsys, "moment-graph", "1,2", "--dot")
    assert code == 0 and out == DOT_A2_12
    path = tmp_path / "g.dot"
    assert run(capsys, "moment-graph", "1,2", "--dot", "--out", str(path))[0] == 0
    assert path.read_text() == DOT_A2_12


def test_morphism_sign_and_extend(capsys):
    code, out, _ = run(capsys, "morphism", "sign", EX3, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["sign"] == [-1, 1] and doc["rotation"]["word"] == []
    code, out, _ = run(capsys, "--json", "morphism", "extend", EX3, "--image", "(e,s2,s1)")
    doc = json.loads(out)
    assert doc["table"]["(s1,s2)"] == "(e,s2,s1)"
    assert doc["preimage"] == "(s1,s2)"


def test_morphism_check_exit_codes(capsys):
    assert run(capsys, "morphism", "check", EX3)[0] == 0
    bad = json.loads(EX3)
    bad["p"] = [1, 2]
    code, out, _ = run(capsys, "morphism", "check", json.dumps(bad), "--json")
    assert code == 2
    assert json.loads(out)["valid"] is False


def test_compose_with_identity(capsys, tmp_path):
    ident = {"s": [1, 2, 1], "s2": [1, 2, 1], "p": [1, 2, 3], "w": {"word": []},
             "seed": {"gamma": "(e,e,e)", "delta": "(e,e,e)"}}
    path = tmp_path / "id.json"
    path.write_text(json.dumps(ident))
    code, out, _ = run(capsys, "morphism", "compose", EX3, str(path), "--json")
    assert code == 0
    assert json.loads(out)["sign"] == [-1, 1]
    assert run(capsys, "morphism", "compose", EX3)[0] == 1


def test_topological(capsys):
    code, out, _ = run(capsys, "topological", EX7)
    assert code == 0 and out.startswith("yes")
    code, out, _ = run(capsys, "topological", EX8, "--json")
    doc = json.loads(out)
    assert code == 0 and doc["topological"] == "no" and len(doc["witnesses"]) == 6


def test_gkm_member_and_basis(capsys):
    good = json.dumps({"seq": [1], "values": {"(e)": "0", "(s1)": "a1"}})
    bad = json.dumps({"seq": [1], "values": {"(e)": "0", "(s1)": "1"}})
    assert run(capsys, "gkm", "member", good)[0] == 0
    code, out, _ = run(capsys, "gkm", "member", bad, "--json")
    assert code == 2
    assert json.loads(out)["remainder"] == "-1"
    code, out, _ = run(capsys, "gkm", "basis", "1,2", "--degree", "1", "--json")
    doc = json.loads(out)
    assert doc["dimension"] == doc["expected_dimension"] == 4
    assert run(capsys, "gkm", "basis", "1,2")[0] == 1


def test_restrict(capsys):
    cls = json.dumps({"values": {g: "a1" for g in
                                 ["(e,e,e)", "(e,e,s1)", "(e,s2,e)", "(e,s2,s1)",
                                  "(s1,e,e)", "(s1,e,s1)", "(s1,s2,e)", "(s1,s2,s1)"]}})
    code, out, _ = run(capsys, "restrict", EX3, cls, "--json")
    doc = json.loads(out)
    assert code == 0 and doc["member"] is True
    assert set(doc["values"].values()) == {"a1"}


def test_chevalley(capsys):
    code, out, _ = run(capsys, "chevalley", "verify", "--n", "2", "--trials", "5", "--seed", "1", "--json")
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "chevalley", "transition", "--seq", "1", "--gallery", "(e)",
                       "--coords", "2", "--target", "(s1)", "--json")
    assert code == 0
    assert json.loads(out)["coords"] == ["1/2"]
    code, out, _ = run(capsys, "chevalley", "transition", "--seq", "1", "--gallery", "(e)",
                       "--coords", "0", "--target", "(s1)", "--json")
    assert json.loads(out) == {"in_chart": False}


def test_worked_fixtures_command(capsys):
    code, out, _ = run(capsys, "appendix")
    assert code == 0
    assert out.splitlines()[-1] == "6/6 PASS"


@pytest.mark.parametrize("argv", [
    ["roots", "Q", "2"],
    ["beta", "1,2", "(s2,e)"],
    ["morphism", "sign", "{not json"],
    ["morphism", "sign", "/no/such/file.json"],
    ["gkm", "member", '{"seq": [1], "values": {"(e)": "a9", "(s1)": "0"}}'],
    ["nonsense"],
])
def test_input_errors_exit_one(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "foldcat", "roots", "A", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.split() == ["a1", "a2", "a1+a2"]
