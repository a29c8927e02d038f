import json
import subprocess
import sys
from io import StringIO

import pytest

from vngroups.cli import FAILED, OK, USAGE, main


def run(*argv):
    out = StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def swap_file(tmp_path):
    path = tmp_path / "swap.txt"
    path.write_text("n = 2\n∅ -> ∅ ; (1 2)\n")
    return str(path)


def test_act(tmp_path, swap_file):
    ident = tmp_path / "id.txt"
    ident.write_text("n = 2\n∅ -> ∅ ; ()\n")
    assert run("act", str(ident), "1(2)") == (OK, "1(2)\n")
    assert run("act", swap_file, "(21)") == (OK, "(12)\n")
    assert run("act", swap_file, "2(")[0] == USAGE
    assert run("act", str(tmp_path / "missing.txt"), "(1)")[0] == USAGE


def test_transducer():
    code, dot = run("transducer", "--group", "<(1 2)>", "--R", "1", "--dot")
    assert code == OK and dot.count("->") == 4
    assert run("transducer", "--group", "<(1 2)>", "--R", "1", "--apply", "22") == (OK, "21\n")
    assert run("transducer", "--group", "<(1 2)>", "--R", "1", "--inverse", "--apply", "21") == (OK, "22\n")
    code, dot = run("transducer", "--group", "<( )>", "--dot")
    assert code == OK and dot.count("->") == 2
    code, text = run("transducer", "--group", "<(1 2 3)>", "--json")
    assert code == OK and len(json.loads(text)["states"]) == 3
    assert run("transducer", "--group", "<(1 2)>", "--n", "3")[0] == USAGE


def test_phi_round_trip(tmp_path):
    src = tmp_path / "b.txt"
    src.write_text("n = 2\n1 -> 1 ; (1 2)\n2 -> 2 ; ()\n")
    fwd, back, again = tmp_path / "f.txt", tmp_path / "g.txt", tmp_path / "h.txt"
    ctx = ["--group", "<(1 2)>", "--R", "1"]
    assert run("phi", *ctx, str(src), "-o", str(fwd))[0] == OK
    text = fwd.read_text()
    assert text.startswith("# ") and "H = <(1 2)>" in text.splitlines()[0]
    assert "11 -> 12 ; ()" in text and "12 -> 11 ; ()" in text
    assert run("phi", *ctx, "--inverse", str(fwd), "-o", str(back))[0] == OK
    assert run("phi", *ctx, str(back), "-o", str(again))[0] == OK
    assert fwd.read_bytes() == again.read_bytes()
    ident = tmp_path / "id.txt"
    ident.write_text("n = 2\n∅ -> ∅ ; ()\n")
    code, out = run("phi", *ctx, str(ident))
    assert code == OK and out.splitlines()[1:] == ["n = 2", "∅ -> ∅ ; ()"]


def test_verify():
    code, out = run("verify", "--lemmas", "--n", "3")
    assert code == OK and out.count(": ok") == 4
    code, out = run("verify", "--dynamics", "--group", "<(1 2)>", "--n", "3")
    assert code == OK and json.loads(out)["x"] == 3
    assert run("verify", "--homomorphism", "--group", "<(1 2 3)>", "--R", "1", "--G", "<(1 2)>")[0] == USAGE
    code, out = run("verify", "--homomorphism", "--group", "<(1 2 3)>", "--G", "<(2 3)>", "--samples", "10")
    assert code == OK and out.rstrip().endswith("ok")
    assert run("verify")[0] == USAGE


def test_classify(tmp_path):
    code, out = run("classify", "3")
    assert code == OK and "2 isomorphism classes" in out
    code, out = run("classify", "2", "--json")
    assert code == OK and len(json.loads(out)["classes"]) == 1
    good = tmp_path / "n3.json"
    good.write_text(json.dumps({"n": 3, "classes": [["<()>", "<(1 2 3)>"], ["<(1 2)>", "<(1 2 3), (1 2)>"]]}))
    assert run("classify", "3", "--expect", str(good))[0] == OK
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 3, "classes": [["<()>"], ["<(1 2 3)>"], ["<(1 2)>", "<(1 2 3), (1 2)>"]]}))
    assert run("classify", "3", "--expect", str(bad))[0] == FAILED
    assert run("classify", "7")[0] == USAGE


def test_console_script_exit_codes():
    cmd = [sys.executable, "-m", "vngroups.cli"]
    assert subprocess.run(cmd + ["transducer", "--group", "<(1 2)>", "--apply", "22"],
                          capture_output=True, text=True).stdout == "21\n"
    assert subprocess.run(cmd + ["bogus"], capture_output=True).returncode == USAGE
