import io
import json
import subprocess
import sys

import pytest

from ppforge import Poly, field_of_order
from ppforge.cli import main

from conftest import get_field

PP7 = '{"field": {"p": 7, "n": 1}, "d": 2, "a": [4, 2], "r": [1, 1]}'
BAD7 = '{"field": {"p": 7, "n": 1}, "d": 2, "a": [1, 6], "r": [1, 1]}'
TB13 = '{"field": {"p": 13, "n": 1}, "d": 3, "a": [8, 1, 1], "r": [1, 1, 1]}'
C2_16 = '{"field": {"p": 2, "n": 4}, "d": 3, "a": [1, 1, 1], "r": [2, 4, 4]}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out.strip()
    return code, json.loads(out) if out.startswith("{") else out


def test_field_command(capsys):
    code, data = run(capsys, "field", "--p", "2", "--n", "4")
    assert code == 0
    assert data == {"p": 2, "n": 4, "modulus": [1, 1, 0, 0, 1], "xi": 2}
    assert main(["field", "--p", "6"]) == 2
    assert main(["field", "--p", "2", "--n", "2", "--modulus", "1,0,1"]) == 2


def test_check_command(capsys):
    code, data = run(capsys, "check", PP7)
    assert code == 0 and data["pp"] is True
    code, data = run(capsys, "check", BAD7)
    assert code == 1 and data["pp"] is False and data["reason"]
    assert main(["check", "{broken"]) == 2
    assert main(["check", "/no/such/file.json"]) == 2


def composes_to_x(data, mapping_json):
    from ppforge import CyclotomicMapping

    m = CyclotomicMapping.from_dict(json.loads(mapping_json))
    g = Poly.from_dict(data["inverse"])
    f = m.to_poly()
    x = Poly.x(m.cyc.field)
    return g.compose(f) == x and f.compose(g) == x


@pytest.mark.parametrize("method,mapping", [
    ("general", PP7),
    ("two-cosets", PP7),
    ("lagrange", PP7),
    ("general", TB13),
    ("two-branches", TB13),
    ("xr-hxs", TB13),
    ("general", C2_16),
    ("char2", C2_16),
])
def test_invert_methods(capsys, method, mapping):
    code, data = run(capsys, "invert", mapping, "--method", method)
    assert code == 0
    assert data["verified"] == "exhaustive"
    assert composes_to_x(data, mapping)


def test_invert_methods_agree(capsys):
    _, a = run(capsys, "invert", TB13, "--method", "general")
    _, b = run(capsys, "invert", TB13, "--method", "two-branches")
    _, c = run(capsys, "invert", TB13, "--method", "xr-hxs")
    assert a["inverse"] == b["inverse"] == c["inverse"]


def test_invert_rejections(capsys):
    assert main(["invert", BAD7]) == 1
    assert main(["invert", PP7, "--method", "two-branches"]) == 2
    assert main(["invert", TB13, "--method", "two-cosets"]) == 2
    assert main(["invert", TB13, "--method", "char2"]) == 2
    assert main(["invert", C2_16.replace("[2, 4, 4]", "[3, 4, 4]"),
                 "--method", "char2"]) == 2


def test_table_command(capsys):
    code, data = run(capsys, "table", PP7)
    assert code == 0
    f = Poly.from_dict(data)
    assert f == Poly(get_field(7), [(1, 3), (4, 1)])


def test_verify_command(capsys):
    f = '{"field": {"p": 7, "n": 1}, "terms": [[1, 3], [4, 1]]}'
    g = '{"field": {"p": 7, "n": 1}, "terms": [[1, 3], [4, 6]]}'
    code, data = run(capsys, "verify", f, g)
    assert code == 0 and data["ok"] and data["verified"] == "exhaustive"
    code, data = run(capsys, "verify", f, f)
    assert code == 1 and not data["ok"] and data["counterexample"] is not None
    code, data = run(capsys, "verify", f, g, "--cap", "3")
    assert code == 0 and data["verified"] == "sampled"
    mixed = '{"field": {"p": 5, "n": 1}, "terms": [[1, 1]]}'
    assert main(["verify", f, mixed]) == 2


def test_env_cap(capsys, monkeypatch):
    f = '{"field": {"p": 7, "n": 1}, "terms": [[1, 3], [4, 1]]}'
    g = '{"field": {"p": 7, "n": 1}, "terms": [[1, 3], [4, 6]]}'
    monkeypatch.setenv("PPFORGE_EXHAUSTIVE_CAP", "3")
    code, data = run(capsys, "verify", f, g)
    assert code == 0 and data["verified"] == "sampled"
    monkeypatch.setenv("PPFORGE_EXHAUSTIVE_CAP", "not-a-number")
    assert main(["verify", f, g]) == 2


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(PP7))
    code, data = run(capsys, "check", "-")
    assert code == 0 and data["pp"] is True


def test_file_input(capsys, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(PP7)
    code, data = run(capsys, "check", str(path))
    assert code == 0 and data["pp"] is True


def test_selfinv_command(capsys, tmp_path):
    out = tmp_path / "catalog.csv"
    code = main(["selfinv", "--p", "7", "--max-r", "2", "--d", "2",
                 "--out", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "q,d,s,r,a,polynomial,verified"
    assert len(lines) > 1
    row = lines[1].split(",", 3)
    assert row[0] == "7" and row[1] == "2" and row[2] == "3"
    assert main(["selfinv", "--p", "7", "--max-r", "2", "--d", "5"]) == 2
    assert main(["selfinv", "--p", "7", "--max-r", "2", "--a-set", "0,1"]) == 2


def test_selfinv_stdout(capsys):
    code = main(["selfinv", "--p", "5", "--max-r", "2", "--d", "1,2"])
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "q,d,s,r,a,polynomial,verified"


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "ppforge.cli", "field", "--p", "13"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["xi"] == 2
