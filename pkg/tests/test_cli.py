import json
import subprocess
import sys

import pytest

from extraconn.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_graph6(capsys):
    code, out, _ = run(["gen", "hypercube:4", "--format", "g6"], capsys)
    assert code == 0 and out.strip() == "Or`HOm?OH@ABAG@C_POAJ"


def test_gen_edge_list_to_file(tmp_path, capsys):
    path = tmp_path / "k4.el"
    assert run(["gen", "K4", "-o", str(path)], capsys)[0] == 0
    assert path.read_text().splitlines()[0] == "4 6"


def test_analyze_petersen(capsys):
    code, out, _ = run(["analyze", "petersen", "--h", "2", "--rho"], capsys)
    data = json.loads(out)
    assert code == 0 and data["schema"] == "extraconn.analysis/1"
    assert [lvl["lambda_h"] for lvl in data["levels"]] == [3, 4, 5]
    assert data["girth"] == 5 and data["edge_regular"] is True
    assert data["rho"]["1"]["rho"] == 1


def test_analyze_file_input(tmp_path, capsys):
    path = tmp_path / "q4.g6"
    path.write_text("Or`HOm?OH@ABAG@C_POAJ\n")
    code, out, _ = run(["analyze", str(path), "--h", "2"], capsys)
    levels = json.loads(out)["levels"]
    assert code == 0 and levels[2]["optimal"] and not levels[2]["super"]
    assert levels[2]["violation"]["boundary_size"] == 8


def test_rho_methods_agree(capsys):
    results = []
    for extra in ([], ["--no-prune"], ["--oracle"]):
        code, out, _ = run(["rho", "hypercube:4", *extra], capsys)
        assert code == 0
        results.append(json.loads(out))
    assert {r["method"] for r in results} == {"pruned", "plain", "oracle"}
    assert {r["rho"] for r in results} == {2}
    assert len({json.dumps(r["witness"]) for r in results}) == 1


def test_rho_not_super_exit_three(capsys):
    code, _, err = run(["rho", "cycle:8"], capsys)
    assert code == 3 and "NotSuper" in err


def test_disconnected_input_exit_three(tmp_path, capsys):
    path = tmp_path / "two.el"
    path.write_text("4 2\n0 1\n2 3\n")
    code, _, err = run(["analyze", str(path)], capsys)
    assert code == 3 and "DisconnectedInput" in err


def test_budget_exit_three(capsys):
    code, _, err = run(["rho", "hypercube:5", "--oracle", "--budget", "0.2"], capsys)
    assert code == 3 and "BudgetExceeded" in err


@pytest.mark.parametrize("argv", [["gen", "nosuch:3"], ["analyze", "Z9"], ["verify", "--checks", "NOPE",
                                                                            "--builtin", "torus"],
                                  ["verify"], ["analyze", "hypercube:9"]])
def test_input_errors_exit_two(argv, capsys):
    assert run(argv, capsys)[0] == 2


def test_bad_graph_file_exit_two(tmp_path, capsys):
    path = tmp_path / "bad.el"
    path.write_text("3 2\n0 1\n")
    assert run(["analyze", str(path)], capsys)[0] == 2


def test_verify_builtin_subset(capsys):
    code, out, err = run(["verify", "--builtin", "paper-exact", "--checks", "T1.6,L4.1,T3.2"], capsys)
    data = json.loads(out)
    assert code == 0 and data["counts"]["fail"] == 0
    assert "fail=0" in err


def test_verify_corpus_file_and_timings(tmp_path, capsys):
    specs = tmp_path / "specs.txt"
    specs.write_text("petersen\nK4\n")
    code, out, _ = run(["verify", str(specs), "--checks", "T3.2", "--timings"], capsys)
    data = json.loads(out)
    assert code == 0 and set(data["timings"]) == {"petersen", "K4"}


def test_output_is_deterministic(capsys):
    outs = [run(["analyze", "remark27:2", "--h", "2", "--rho"], capsys)[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "extraconn.cli", "gen", "C4", "--format", "g6"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "Cl"
