import io
import json
import subprocess
import sys

import pytest

from sepcodes import codefile
from sepcodes.bounds import lower_bound_t2
from sepcodes.cli import main
from sepcodes.core import Code, CodeParams


def run(*argv):
    out = io.StringIO()
    status = main(list(argv), out=out)
    return status, out.getvalue()


@pytest.fixture
def code_file(tmp_path):
    def make(text):
        path = tmp_path / "code.txt"
        path.write_text(text)
        return str(path)

    return make


def test_verify_reports_witness(code_file):
    status, out = run("verify", code_file("2 2\n0 0\n0 1\n1 0\n"), "--t", "2")
    assert status == 1
    assert "2-separable: yes" in out
    assert "2-frameproof: no" in out
    assert "witness: X={1,2} c=0" in out
    assert "desc(X): {0,1} x {0,1}" in out


def test_verify_property_selection(code_file):
    path = code_file("2 2\n0 0\n0 1\n1 0\n")
    assert run("verify", path, "--t", "2", "--property", "separable")[0] == 0
    status, out = run("verify", path, "--t", "2", "--property", "frameproof")
    assert status == 1 and "separable" not in out


def test_verify_separability_failure(code_file):
    status, out = run(
        "verify", code_file("2 2\n0 0\n0 1\n1 0\n1 1\n"), "--t", "2", "--property", "separable",
        "--method", "naive",
    )
    assert status == 1
    assert "witness: X={0,3} X'={1,2}" in out
    assert "shared desc: {0,1} x {0,1}" in out


def test_verify_single_word(code_file):
    path = code_file("3 4\n0 1 2 0\n")
    for t in (1, 2, 3, 5):
        status, out = run("verify", path, "--t", str(t))
        assert status == 0
        assert f"{t}-separable: yes" in out and f"{t}-frameproof: yes" in out


@pytest.mark.parametrize(
    "text,line",
    [
        ("4 2\n0 7\n", 2),
        ("4 2\n0 1\n0 1\n", 3),
        ("4 2\n0  1\n", 2),
        ("4 2\n0 1", 2),
        ("4\n0 1\n", 1),
        ("4 2\n0 1 2\n", 2),
        ("4 2\n0 -1\n", 2),
        ("1 2\n0 0\n", 1),
        ("4 2\n# c\n", 2),
        ("", 1),
    ],
)
def test_codefile_errors(text, line, code_file, capsys):
    with pytest.raises(codefile.CodeFileError) as info:
        codefile.parse(text)
    assert info.value.line == line
    status, _ = run("verify", code_file(text), "--t", "2")
    assert status == 2
    assert f"line {line}" in capsys.readouterr().err


def test_codefile_roundtrip(tmp_path):
    code = Code(CodeParams(12, 3), ((0, 11, 3), (10, 0, 0)))
    assert codefile.render(code) == "12 3\n0 11 3\n10 0 0\n"
    assert codefile.parse(codefile.render(code)) == code
    path = tmp_path / "c.txt"
    codefile.write(code, path)
    assert codefile.read(path) == code


def test_missing_file_and_bad_args(tmp_path):
    assert run("verify", str(tmp_path / "nope"), "--t", "2")[0] == 2
    assert run("verify")[0] == 2
    assert run("bounds", "--q", "1", "--n", "2", "--t", "2")[0] == 2


def test_bounds_examples():
    status, out = run("bounds", "--q", "2", "--n", "3", "--t", "2")
    assert status == 0
    assert "upper_t2=5\n" in out and "upper_gao_ge=5\n" in out
    _, out = run("bounds", "--q", "3", "--n", "2", "--t", "2", "--format", "json")
    data = json.loads(out)
    assert (data["upper_t2"], data["upper_gao_ge"]) == (9, 12)
    _, out = run("bounds", "--q", "3", "--n", "4", "--t", "3")
    assert "upper_general=18\n" in out


def test_search_examples():
    status, out = run("search", "--q", "2", "--n", "2", "--t", "2")
    assert status == 0 and "optimum=3\n" in out
    _, out = run("search", "--q", "2", "--n", "2", "--t", "1", "--property", "frameproof", "--format", "json")
    data = json.loads(out)
    assert data["optimum"] == 4 and "bounds" not in data
    status, out = run("search", "--q", "4", "--n", "3", "--t", "2", "--mode", "greedy", "--seed", "5")
    assert status == 0 and out.startswith("size=")


def test_search_oversized(capsys):
    status, _ = run("search", "--q", "4", "--n", "5", "--t", "2")
    assert status == 1
    assert "greedy" in capsys.readouterr().err


def test_construct_is_reproducible_and_verifies(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    ledger = tmp_path / "events.txt"
    status, out = run("construct", "--q", "4", "--n", "3", "--t", "2", "--seed", "11", "--out", str(a),
                      "--ledger", str(ledger))
    assert status == 0
    assert "N=10\n" in out and "lower_t2=9\n" in out
    run("construct", "--q", "4", "--n", "3", "--t", "2", "--seed", "11", "--out", str(b))
    assert a.read_text() == b.read_text()
    assert ledger.read_text().startswith("# events t=2 N=10")
    assert run("verify", str(a), "--t", "2", "--property", "separable")[0] == 0


def test_construct_t3_then_verify(tmp_path):
    path = tmp_path / "c.txt"
    status, out = run("construct", "--q", "5", "--n", "3", "--t", "3", "--N", "8", "--out", str(path))
    assert status == 0
    assert "g_event_bound_valid=yes" in out
    assert run("verify", str(path), "--t", "3", "--property", "separable")[0] == 0


def test_construct_to_stdout(capsys):
    status, out = run("construct", "--q", "4", "--n", "3", "--t", "3", "--target", "3", "--seed", "1")
    assert status == 0
    assert codefile.parse(out).params == CodeParams(4, 3)
    assert "size=" in capsys.readouterr().err


def test_construct_target_unmet(tmp_path):
    path = tmp_path / "c.txt"
    status, out = run("construct", "--q", "3", "--n", "2", "--t", "2", "--N", "1", "--target", "2",
                      "--out", str(path))
    assert status == 1
    assert "target not met" in out
    assert len(codefile.read(path)) == 1


def test_construct_input_errors():
    assert run("construct", "--q", "3", "--n", "2", "--t", "3")[0] == 2
    assert run("construct", "--q", "3", "--n", "2", "--t", "1", "--N", "4")[0] == 2
    assert run("construct", "--q", "3", "--n", "2", "--t", "3", "--N", "4", "--epsilon", "0.5")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sepcodes", "bounds", "--q", "4", "--n", "3", "--t", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert f"lower_t2={lower_bound_t2(4, 3)[0]}" in proc.stdout
