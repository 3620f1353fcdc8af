import json

import pytest

from ratsym.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE, main, parse_invocation, run
from ratsym.errors import ParseError
from ratsym.monomial import ideal_from_dict
from ratsym.parsing import parse_ideal

PATH = ["--ring", "x,y,z", "-I", "x*y, y*z"]
EX23 = ["--ring", "x,y", "-I", "x*y^5, x^2*y^2, x^4*y"]


def out(argv):
    code, text = run(parse_invocation(argv))
    assert code == EXIT_OK
    return text


def test_rsympower_text():
    inv = parse_invocation(["rsympower", *PATH, "-u", "5/2"])
    assert inv.command == "rsympower" and str(inv.u) == "5/2"
    assert out(["rsympower", *PATH, "-u", "5/2"]) == "x^3*y^3, x^2*y^3*z, x*y^3*z^2, y^3*z^3"


def test_rpower_and_rsympower_agree_on_ex23():
    for cmd in ("rpower", "rsympower"):
        I = parse_ideal(out([cmd, *EX23, "-u", "4/3"]), parse_invocation(["np", *EX23]).ring)
        assert set(I.gens) == {(3, 3), (4, 2), (2, 5)}


def test_np_output():
    lines = out(["np", *EX23]).splitlines()
    assert len(lines) == 4
    assert [line.split(">= ")[1] for line in lines] == ["8", "6", "1", "1"]
    d = json.loads(out(["np", *EX23, "--format", "structured"]))
    assert [h["rhs"] for h in d["halfspaces"]] == ["8", "6", "1", "1"]


def test_sp_output():
    assert out(["sp", *PATH]).splitlines() == ["a2 >= 1", "a1 + a3 >= 1"]


def test_malformed_rational():
    with pytest.raises(ParseError):
        parse_invocation(["rpower", *PATH, "-u", "5/0"])
    assert main(["rpower", *PATH, "-u", "5/0"]) == EXIT_USAGE
    assert main(["rpower", *PATH, "-u", "-1"]) == EXIT_USAGE


def test_usage_errors(capsys):
    assert main(["rpower", *PATH]) == EXIT_USAGE
    assert main(["rpower", "-I", "x", "-u", "1"]) == EXIT_USAGE
    assert main(["rpower", "--ring", "x,y", "-I", "x*q", "-u", "1"]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "q" in err


def test_precondition_exit_code():
    assert main(["sp", *EX23]) == EXIT_PRECONDITION
    assert main(["rsympower", *EX23, "-u", "1", "--method", "sp-scaling"]) == EXIT_PRECONDITION


def test_binomial_check_invocation(capsys):
    argv = ["check", "binomial", "--ring-a", "x,y", "--ring-b", "a,b", "-I", "x*y", "-J", "a*b", "-u", "2"]
    inv = parse_invocation(argv)
    assert inv.kind == "binomial" and inv.ideal_b.ring.variables == ("a", "b")
    assert main(argv) == EXIT_OK
    assert capsys.readouterr().out.startswith("PASS binomial")


def test_failing_check_exit_code(capsys):
    argv = ["check", "ass-star", "--ring", "x,y,z", "-I", "x*y, y*z, z*x", "--k-max", "4"]
    assert main(argv) == EXIT_CHECK_FAILED
    assert "FAIL" in capsys.readouterr().out


def test_nonradical_harness_from_cli(capsys):
    argv = ["check", "root-nonradical", "--ring", "x,y", "-I", "x^2, y^2", "-u", "1", "--format", "structured"]
    assert main(argv) == EXIT_CHECK_FAILED
    report = json.loads(capsys.readouterr().out)
    assert report["witness"] == "ordinary: x*y"


def test_structured_round_trip():
    for cmd in (["closure"], ["rpower", "-u", "3/2"], ["rsympower", "-u", "7/3"]):
        text = out([cmd[0], *PATH, "--format", "structured", *cmd[1:]])
        I = ideal_from_dict(json.loads(text))
        assert I == parse_ideal(out([cmd[0], *PATH, *cmd[1:]]), I.ring)
        # a structured ideal is accepted back as input
        assert ideal_from_dict(json.loads(out(["closure", "-I", text, "--format", "structured"]))) == I


def test_cas_format():
    assert out(["closure", *PATH, "--format", "cas"]) == "ideal(x*y, y*z)"
    assert out(["ass", *PATH, "--format", "cas"]).splitlines()[0] == "associated: ideal(y) ideal(x, z)"


def test_other_commands():
    assert out(["waldschmidt", "--ring", "x,y,z", "-I", "x*y, y*z, z*x", "-v", "1,1,1"]) == "3/2"
    assert out(["stability-e", *EX23]) == "24"
    assert out(["decompose", "--ring", "x,y", "-I", "x*y"]).splitlines() == ["x", "y"]
    assert out(["diffpower", *PATH, "-u", "1"]) == "x*y, y*z"
    assert out(["satpower", "--ring", "x,y", "-I", "x", "-K", "y", "-u", "1"]) == "x"


def test_output_is_deterministic(capsys):
    argv = ["suite", "--count", "4", "--format", "structured"]
    assert main(argv) == EXIT_OK
    first = capsys.readouterr().out
    assert main(argv + ["--jobs", "2"]) == EXIT_OK
    assert capsys.readouterr().out == first
