import json
import pathlib

import pytest

from hansarg.cli import main
from hansarg.fixtures import FIXTURES


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in FIXTURES.items():
        p = tmp_path / f"{name}.hans"
        p.write_text(text)
        out[name] = str(p)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_detach_greedy_text(files, capsys):
    code, out, _ = run(capsys, "detach", "--method", "greedy", files["order"])
    assert code == 0 and out == "{h, ~o}\n"


def test_detach_json(files, capsys):
    code, out, _ = run(capsys, "detach", "--method", "reduction", "--format", "json", files["twofold"])
    assert code == 0
    assert json.loads(out) == {"method": "reduction", "extensions": [["b", "c"], ["~b"]]}


def test_detach_preorder(files, capsys):
    code, out, _ = run(capsys, "detach", "--method", "greedy-preorder", files["preorder"])
    assert code == 0 and out.splitlines() == ["{b, ~c}", "{c, ~b}"]
    code, _, err = run(capsys, "detach", "--method", "greedy", files["preorder"])
    assert code == 2 and "distinct" in err


def test_extensions_oddcycle_reports_zero(files, capsys):
    code, out, _ = run(capsys, "extensions", "--lift", "last", "--semantics", "stable", files["oddcycle"])
    assert code == 0 and out.startswith("0 stable extensions")


def test_extensions_expanded_text(files, capsys):
    code, out, _ = run(capsys, "extensions", "--expand", files["revised"])
    assert code == 0
    assert out.splitlines() == ["1 stable extension", "{A0, A5, aux} -> {~o}"]


def test_af_formats(files, capsys):
    code, out, _ = run(capsys, "af", "--expand", files["branching"])
    assert code == 0 and out.count("dashed") == 3
    code, out, _ = run(capsys, "af", "--format", "json", "--lift", "last", files["order"])
    assert json.loads(out)["defeats"] == [["A2", "A3"]]
    code, _, err = run(capsys, "af", "--lift", "last", "--expand", files["order"])
    assert code == 2


def test_show(files, capsys):
    code, out, _ = run(capsys, "show", files["order"])
    assert code == 0 and out.startswith("digraph hans")


def test_verify_file(files, capsys):
    code, out, _ = run(capsys, "verify", files["order"])
    assert code == 0
    assert [l.split()[0] for l in out.splitlines()] == ["PASS"] * 3


def test_verify_trials_reproducible(capsys):
    code, out, _ = run(capsys, "verify", "--trials", "30", "--seed", "5")
    assert code == 0 and out.strip() == "90/90 checks passed over 30 instances (seed 5)"


def test_verify_exploratory(files, capsys):
    code, out, _ = run(capsys, "verify", "--exploratory", files["order"])
    assert code == 0 and "exploratory" in out


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.hans"
    bad.write_text("norm a b rank 1\n")
    code, _, err = run(capsys, "detach", str(bad))
    assert code == 1 and ":1:8:" in err
    bad.write_text("context w, ~w\n")
    assert run(capsys, "detach", str(bad))[0] == 2
    assert run(capsys, "detach", str(tmp_path / "missing.hans"))[0] == 2


def test_verify_failure_exit_code(files, capsys, monkeypatch):
    from hansarg import cli, verify

    def broken(hans, instance="", seed=None):
        return [verify.VerifyReport("greedy", instance, frozenset(), frozenset({frozenset()}), seed)]

    monkeypatch.setattr(cli, "verify_all", broken)
    code, out, _ = run(capsys, "verify", files["order"])
    assert code == 3 and out.startswith("FAIL greedy")


def test_module_entry_point():
    import subprocess
    import sys

    root = pathlib.Path(__file__).resolve().parent.parent
    proc = subprocess.run(
        [sys.executable, "-m", "hansarg", "detach", str(root / "fixtures" / "order.hans")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "{h, ~o}\n"
