import json
import subprocess
import sys

import pytest

from skewpbw.cli import main, shipped_scenarios
from skewpbw.report import emit_report, make_report, run_scenario
from skewpbw.scenario import parse_scenario

EXPECTED_EXIT = {name: 0 for name in shipped_scenarios()}
# counterexamples: M2(Z2) is not (SA1), swap and d/dt are not compatible
EXPECTED_EXIT.update({"m2z2_poly": 1, "z2xz2_swap": 1, "diff_ops": 1})

Z6 = """\
name = "Z6"

[ring]
kind = "zmod"
n = 6

[[tasks]]
op = "classify"
"""


def _run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_list(capsys):
    code, out, _ = _run(["list"], capsys)
    assert code == 0 and len(out.splitlines()) == len(shipped_scenarios()) == 12


@pytest.mark.parametrize("name", sorted(EXPECTED_EXIT))
def test_shipped_scenarios_exit_codes(name, capsys):
    code, out, _ = _run(["run", name, "--format", "machine"], capsys)
    report = json.loads(out)
    assert code == EXPECTED_EXIT[name] == report["summary"]["exit_code"]
    assert "wall_time" not in out


def test_machine_output_is_byte_stable(capsys):
    first = _run(["run", "z4_poly", "f4_frobenius"], capsys)
    second = _run(["run", "z4_poly", "f4_frobenius"], capsys)
    assert first == second


def test_seeded_random_check_is_byte_stable(capsys):
    argv = ["check", "m2z2_poly", "--prop", "sa1", "--mode", "random", "--seed", "3", "--trials", "40"]
    first, second = _run(argv, capsys), _run(argv, capsys)
    assert first == second
    entry = json.loads(first[1])["tasks"][0]
    assert entry["seed"] == 3 and entry["trials"] == 40 and entry["mode"] == "random"


def test_classify_z6(tmp_path, capsys):
    path = tmp_path / "z6.toml"
    path.write_text(Z6)
    code, out, _ = _run(["classify", str(path)], capsys)
    report = json.loads(out)
    assert code == 0 and len(report["tasks"]) == 1
    assert report["tasks"][0]["ring"]["is_baer"] is True


def test_empty_report():
    sc = parse_scenario(Z6.replace('[[tasks]]\nop = "classify"\n', ""))
    report = run_scenario(sc)
    assert report["tasks"] == [] and report["summary"] == {"tasks": 0, "counts": {}, "exit_code": 0}
    assert "no tasks" in emit_report(report, "human")
    assert json.loads(emit_report(make_report("empty", []), "machine"))["summary"]["tasks"] == 0


def test_input_errors(tmp_path, capsys):
    code, _, err = _run(["run", str(tmp_path / "missing.toml")], capsys)
    assert code == 2 and "error" in err
    bad = tmp_path / "bad.toml"
    bad.write_text(Z6.replace('"zmod"', '"zmodd"'))
    code, _, err = _run(["run", str(bad)], capsys)
    assert code == 2 and "E002" in err
    code, _, err = _run(["ac", "z4_poly", "--gen-degree", "-1"], capsys)
    assert code == 2
    code, _, err = _run(["ac", "z4_poly", "--generators", "[[{"], capsys)
    assert code == 2
    code, _, err = _run(["theorems", "z4_poly", "--suite", "t_nope"], capsys)
    assert code == 2 and "E006" in err


def test_cap_exceeded_exit_code(capsys):
    code, out, _ = _run(["check", "m2z2_poly", "--prop", "sa1", "--degree", "3"], capsys)
    assert code == 3 and json.loads(out)["tasks"][0]["status"] == "cap_exceeded"


def test_ac_command(capsys):
    gens = '[[{"exp": [0], "coef": 2}], [{"exp": [1], "coef": 2}]]'
    code, out, _ = _run(["ac", "z4_poly", "--generators", gens, "--witness-degree", "1"], capsys)
    entry = json.loads(out)["tasks"][0]
    assert code == 0 and entry["result"] == "witness"
    assert entry["witness"]["terms"] == [[[0], 2]]
    assert entry["bounds"]["witness_degree"] == 1 and "bounded" in entry["claim"]


def test_theorems_command_and_out_file(tmp_path, capsys):
    out_path = tmp_path / "report.txt"
    code, out, _ = _run(["theorems", "f4_frobenius", "--suite", "t_rigid_pp", "--format", "human",
                         "--out", str(out_path), "--middle-degree", "1", "--target-degree", "1"], capsys)
    text = out_path.read_text()
    assert code == 0 and out == ""
    assert "status: pass" in text and text.rstrip().endswith("exit code 0")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "skewpbw", "list"], capture_output=True, text=True)
    assert proc.returncode == 0 and "z4_poly" in proc.stdout
