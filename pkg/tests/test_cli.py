import io
import json
import subprocess
import sys

import pytest

from _support import curve
from weierstrass import enumerate_points
from weierstrass.cli import main
from weierstrass.expr import parse_function, parse_homogeneous, parse_point
from weierstrass.function_field import from_homogeneous

C5 = ["--field", "Fp:5", "--curve", "0,0,0,1,1"]


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_documented_examples():
    assert run("info", *C5)[:2] == (0, "Delta = 4\nnonsingular\n")
    assert run("add", *C5, "--p", "(0,1)", "--q", "(2,1)")[:2] == (0, "(3,4)\n")
    assert run("val", *C5, "--point", "O", "--fn", "x")[:2] == (0, "-2\n")


def test_other_verbs():
    assert run("neg", *C5, "--point", "(0,1)")[1] == "(0,4)\n"
    assert run("dbl", *C5, "--point", "(0,1)")[1] == "(4,2)\n"
    assert run("mul", *C5, "--point", "(0,1)", "--n", "9")[1] == "O\n"
    assert run("mul", *C5, "--point", "(0,1)", "--n", "-1")[1] == "(0,4)\n"
    assert run("colinear", *C5, "--p", "(0,1)", "--q", "(2,1)", "--r", "(3,1)")[1] == "true\n"
    assert run("colinear", *C5, "--p", "(0,1)", "--q", "(2,1)", "--r", "(3,4)")[1] == "false\n"
    assert run("uniformizer", *C5, "--point", "O")[1] == "X/Y\n"
    assert run("uniformizer", *C5, "--point", "(0,1)")[1] == "X/Y\n"
    assert run("expand", *C5, "--point", "O", "--fn", "x", "--terms", "4")[1] == \
        "t^-2 + 4*t^2 + 4*t^4 + O(t^5)\n"
    assert run("expand", *C5, "--point", "O", "--fn", "X/Y", "--uniformizer", "X/Y")[1] == "t\n"
    assert run("eval", *C5, "--point", "(2,1)", "--fn", "x")[1] == "2\n"
    assert run("eval", *C5, "--point", "O", "--fn", "Z/X")[1] == "0\n"
    assert run("val", *C5, "--point", "O", "--fn", "0")[1] == "+inf\n"
    assert run("val", *C5, "--point", "O", "--fn", "x", "--uniformizer", "X/Y + (X/Y)^2")[1] == "-2\n"
    lines = run("points", *C5)[1].splitlines()
    assert lines[0] == "O" and len(lines) == 9


def test_rational_field():
    Q = ["--field", "Q", "--curve", "0,0,1,-1,0"]
    assert run("info", *Q)[1] == "Delta = 37\nnonsingular\n"
    assert run("mul", *Q, "--point", "(0,0)", "--n", "2")[1] == "(1,0)\n"
    assert run("add", *Q, "--p", "(0,0)", "--q", "(1,0)")[1] == "(-1,-1)\n"
    code, out, _ = run("mul", *Q, "--point", "(0,0)", "--n", "5")
    assert code == 0 and out == "(1/4,-5/8)\n"


@pytest.mark.parametrize("argv", [
    ["eval", *C5, "--point", "O", "--fn", "x"],
    ["add", *C5, "--p", "(1,1)", "--q", "(2,1)"],
    ["dbl", "--field", "Fp:5", "--curve", "0,0,0,0,0", "--point", "O"],
    ["val", *C5, "--point", "(1,1)", "--fn", "x"],
    ["expand", *C5, "--point", "O", "--fn", "x", "--uniformizer", "x"],
    ["expand", *C5, "--point", "O", "--fn", "x", "--uniformizer", "(X/Y)^2"],
    ["val", *C5, "--point", "O", "--fn", "1/(y^2 - x^3 - x - 1)"],
    ["points", "--field", "Q", "--curve", "0,0,1,-1,0"],
])
def test_domain_errors_exit_1(argv):
    code, _, err = run(*argv)
    assert code == 1
    assert err.startswith("error:")


@pytest.mark.parametrize("argv", [
    ["val", *C5, "--point", "O", "--fn", "X/x"],
    ["val", *C5, "--point", "O", "--fn", "x +"],
    ["val", *C5, "--point", "O", "--fn", "x^-1"],
    ["val", *C5, "--point", "O", "--fn", "(X+Y)/Z^2"],
    ["val", *C5, "--point", "P", "--fn", "x"],
    ["add", *C5, "--p", "(0,1", "--q", "(2,1)"],
    ["info", "--field", "Fp:5", "--curve", "0,0,1"],
    ["info", "--field", "Fp:6", "--curve", "0,0,0,1,1"],
    ["info", "--field", "GF(5)", "--curve", "0,0,0,1,1"],
    ["frobnicate", *C5],
    ["add", *C5, "--p", "(0,1)"],
    ["mul", *C5, "--point", "(0,1)", "--n", "two"],
    [],
])
def test_malformed_input_exit_2(argv):
    code, _, _ = run(*argv)
    assert code == 2


def test_info_singular_still_prints():
    code, out, _ = run("info", "--field", "Fp:5", "--curve", "0,0,0,0,0")
    assert code == 1 and out == "Delta = 0\nsingular\n"


def test_json_output():
    code, out, _ = run("add", *C5, "--p", "(0,1)", "--q", "(2,1)", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc == {"verb": "add", "field": "Fp:5", "curve": "0,0,0,1,1", "result": [3, 4]}
    doc = json.loads(run("info", *C5, "--json")[1])
    assert doc["result"] == {"delta": 4, "nonsingular": True}
    doc = json.loads(run("val", *C5, "--point", "O", "--fn", "0", "--json")[1])
    assert doc["result"] == "+inf"
    doc = json.loads(run("expand", *C5, "--point", "O", "--fn", "x", "--terms", "4", "--json")[1])
    assert doc["result"]["lead"] == -2
    assert doc["result"]["coeffs"] == [1, 0, 0, 0, 4, 0, 4]
    assert doc["result"]["prec"] == 5
    doc = json.loads(run("points", *C5, "--json")[1])
    assert doc["result"][0] == "O" and doc["result"][1] == [0, 1]
    doc = json.loads(run("eval", "--field", "Q", "--curve", "0,0,1,-1,0", "--point", "(0,0)",
                         "--fn", "(x+1)/2", "--json")[1])
    assert doc["result"] == "1/2"


def test_json_and_text_agree():
    for verb_args in (["neg", "--point", "(2,1)"], ["mul", "--point", "(2,1)", "--n", "4"],
                      ["val", "--point", "(0,1)", "--fn", "x"], ["eval", "--point", "(3,1)", "--fn", "x*y"]):
        verb, *rest = verb_args
        text = run(verb, *C5, *rest)[1].strip()
        doc = json.loads(run(verb, *C5, *rest, "--json")[1])
        result = doc["result"]
        if isinstance(result, list):
            result = f"({result[0]},{result[1]})"
        assert text == str(result)


def test_printed_points_reparse():
    E = curve("F11b")
    lines = run("points", "--field", "Fp:11", "--curve", "0,0,1,0,3")[1].splitlines()
    assert [parse_point(s, E.field) for s in lines] == enumerate_points(E)


def test_printed_functions_reparse():
    E = curve("F5")
    for P in enumerate_points(E):
        text = run("uniformizer", *C5, "--point", str(P))[1].strip()
        u = from_homogeneous(parse_homogeneous(text, E.field), E)
        affine = json.loads(run("uniformizer", *C5, "--point", str(P), "--json")[1])["result"]["affine"]
        assert parse_function(affine, E) == u


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "weierstrass", "add", *C5, "--p", "(0,1)", "--q", "(2,1)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "(3,4)\n"
    proc = subprocess.run([sys.executable, "-m", "weierstrass", "val", *C5, "--point", "O", "--fn", "X/x"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
