import io
import json
import subprocess
import sys

import pytest

from ratsemi.cli import run


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    return code, buf.getvalue()


def report(*argv):
    code, text = call(*argv)
    return code, json.loads(text)


def test_compose_report_shape():
    code, doc = report("compose", "z^2", "z^3")
    assert code == 0 and doc["status"] == "ok"
    assert doc["result"]["F o G"]["expanded"] == "z^6"
    assert set(doc) >= {"tool", "version", "command", "arguments", "config", "status", "result"}


def test_negative_inputs_are_not_flags():
    code, doc = report("eq-system", "z^2", "-z^2")
    assert code == 0 and doc["arguments"]["G"] == "-z^2"


def test_invalid_input_exit_code():
    code, doc = report("special", "x+")
    assert code == 4 and doc["status"] == "invalid-input"


def test_no_witness_exit_code():
    code, doc = report("common-iterate", "2*z^2-1", "4*z^3-3*z", "--bound", "6")
    assert code == 2


def test_input_from_file(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps({"num": ["1", "0", "1"], "den": ["1"]}))
    code, doc = report("iterate", str(path), "2")
    assert code == 0 and doc["result"]["F^k"]["expanded"] == "z^4 + 2*z^2 + 2"


def test_dot_format():
    code, text = call("gamma-graph", "z^4-2*z^2", "--format", "dot")
    assert code == 0 and text.lstrip().startswith("digraph")


def test_commutant_command():
    code, doc = report("commutant", "z^3-2*z", "--bound", "7")
    assert code == 0
    assert len(doc["result"]["classes"]) == 2


def test_tame_command():
    code, doc = report("tame", "z^3")
    assert code == 0 and doc["result"]["verdict"] == "wild"


@pytest.mark.parametrize("argv", [["--help"], ["compose", "--help"]])
def test_help_exits_cleanly(argv):
    proc = subprocess.run([sys.executable, "-m", "ratsemi", *argv], capture_output=True, text=True)
    assert proc.returncode == 0 and "usage" in proc.stdout
