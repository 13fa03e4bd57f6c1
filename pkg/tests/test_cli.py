import importlib
import io
import pkgutil
import json
import subprocess
import sys

import pytest

import algspec
from algspec import cli
from algspec.matrix import Mat
from algspec.pencil import MatPoly, Moebius
from algspec.poly import Poly
from algspec.sylvester import Quaternion
from algspec.textio import (base_field, format_value, parse_matrix, parse_moebius, parse_pencil, parse_poly,
                            parse_quaternion)

from golden_cases import CASES

MODULES = [m.name for m in pkgutil.iter_modules(algspec.__path__) if m.name != "certify"]


def run(argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def request(doc, args=()):
    opts = {"search_bound": None, "samples": None}
    return cli.parse_input(doc, None, None, opts)


def test_exit_codes():
    assert run(["det", "matrix a: [[1, 2], [3, 4]]"])[0] == 0
    assert run(["det", "matrix a: [[1, 2], [3]]"])[0] == 2
    assert run(["no-such-command"])[0] == 2
    assert run(["sylvester", "matrix a: [[1]]", "matrix b: [[2]]", "matrix c: [[1, 1]]"])[0] == 3
    assert run(["pencil-factor", "pencil P: [[[0, -1], [0, 0]], [[0, 0], [0, 0]], [[1, 0], [0, 1]]]"])[0] == 4
    assert run(["sylvester", "matrix a: [[1]]", "matrix b: [[1]]", "matrix c: [[1]]"])[0] == 4
    assert run(["rf-sqrt", "--field", "Q(t)", "scalar f: t"])[0] == 4


def test_errors_go_to_stderr():
    code, out, err = run(["det", "matrix a: [[1, 2], [3]]"])
    assert code == 2 and out == "" and err.startswith("error: ParseError")


def test_field_flag_conflict():
    assert run(["det", "--field", "GF(5)", "field: Q", "matrix a: [[1]]"])[0] == 3


def test_command_in_document_and_argument_must_agree():
    assert run(["det", "cmd: minpoly", "matrix a: [[1]]"])[0] == 2


def test_machine_format():
    code, out, _ = run(["sylvester", "--format", "machine", "matrix a: [[1, 0], [0, 2]]", "matrix b: [[3]]",
                        "matrix c: [[1], [1]]"])
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "ok" and doc["exit_code"] == 0
    assert doc["result"]["x"] == "[[-1/2], [-1]]"
    assert "ax - xb = c" in doc["certified"]


def test_machine_format_error():
    code, out, _ = run(["--format", "machine", "pencil-factor",
                        "pencil P: [[[0, -1], [0, 0]], [[0, 0], [0, 0]], [[1, 0], [0, 1]]]"])
    doc = json.loads(out)
    assert code == 4 and doc["error"]["type"] == "CannotFactor" and doc["error"]["residual"] == "x^3"


def test_search_bound_flag():
    doc = ["quad-search", "--field", "GF(2)", "matrix u: [[0, 0], [0, 0]]", "matrix v: [[0, 0], [0, 0]]",
           "matrix w: [[0, 0], [0, 0]]"]
    assert run(doc)[0] == 0
    assert run(doc + ["--search-bound", "8"])[0] == 3


def test_samples_flag():
    args = ["resolvent-extend", "scalar alpha: 0", "matrix r: [[-1, 0], [0, -1/2]]"]
    for n in (1, 4):
        _, out, _ = run(args + ["--samples", str(n)])
        assert out.count("\nr(") == n and out.count("certified: associated element:") == n


@pytest.mark.parametrize("name,doc,args,expect", CASES[:12], ids=[c[0] for c in CASES[:12]])
def test_deterministic(name, doc, args, expect):
    first = cli.run(request(doc)).text()
    for _ in range(2):
        assert cli.run(request(doc)).text() == first


def _reparse(value, ring):
    text = format_value(value)
    if isinstance(value, Mat):
        return parse_matrix(text, value.ring)
    if isinstance(value, Poly):
        return parse_poly(text, value.field, value.var)
    if isinstance(value, MatPoly):
        return parse_pencil(text, value.field)
    if isinstance(value, Moebius):
        return parse_moebius(text, value.field)
    if isinstance(value, Quaternion):
        return parse_quaternion(text)
    return None


@pytest.mark.parametrize("name,doc,args,expect", CASES, ids=[c[0] for c in CASES])
def test_emitted_values_reparse(name, doc, args, expect):
    report = cli.run(request(doc))
    for key, value in report.entries:
        again = _reparse(value, base_field(report.field))
        if again is not None:
            assert again == value, key


@pytest.fixture
def counted(monkeypatch):
    """Count every certify call made through the library modules."""
    calls = []
    certify_mod = importlib.import_module("algspec.certify")
    original = certify_mod.certify

    def counting(label, ok, *rest):
        calls.append((label, bool(ok)))
        return original(label, ok, *rest)

    for name in MODULES:
        mod = importlib.import_module(f"algspec.{name}")
        if hasattr(mod, "certify"):
            monkeypatch.setattr(mod, "certify", counting)
    return calls


@pytest.mark.parametrize("name,doc,args,expect", CASES, ids=[c[0] for c in CASES])
def test_certified_lines_match_executed_checks(counted, name, doc, args, expect):
    text = cli.run(request(doc)).text()
    lines = [ln[len("certified: "):] for ln in text.splitlines() if ln.startswith("certified: ")]
    assert lines == [label for label, ok in counted if ok]
    assert all(ok for _, ok in counted)


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "algspec.cli", "minpoly", "matrix a: [[1, 1], [-1, 1]]"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "min_poly: z^2 - 2*z + 2" in proc.stdout
