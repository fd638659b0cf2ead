import json

import pytest

from qzero.cli import main
from qzero.parser import ParseError, parse_expr


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_n2_suite_exit0(capsys):
    code, out = run(["qcheck", "n2-suite", "--n", "2", "--h", "4"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert all(c["status"] != "fail" for c in payload["checks"])


def test_invalid_params_exit2(capsys):
    code, _ = run(["qcheck", "nilpotency", "--n", "2", "--h", "2"], capsys)
    assert code == 2


def test_eval_normal_form(capsys):
    code, out = run(["eval", "a[2,1]*a[1,2]", "--n", "2", "--h", "4",
                     "--normal-form", "--format", "text"], capsys)
    assert code == 0
    assert "a[1,1]*a[2,2]" in out and "a[1,2]*a[2,1]" in out


def test_eval_syntax_error_exit2(capsys):
    code, _ = run(["eval", "a[1,1]*a[1,2] - ?", "--n", "2", "--h", "4"], capsys)
    assert code == 2


def test_fock_build_writes_json(tmp_path, capsys):
    out_path = tmp_path / "basis.json"
    code, _ = run(["fock", "build", "--n", "2", "--h", "3",
                   "--out", str(out_path)], capsys)
    assert code == 0
    payload = json.loads(out_path.read_text())
    assert payload["dimension"] == 9
    assert payload["complete"] is True


def test_determinism_byte_identical(capsys):
    argv = ["conjecture", "--n", "2", "--h", "4", "--max-len", "3",
            "--seed", "0"]
    _, out1 = run(argv, capsys)
    _, out2 = run(argv, capsys)
    d1, d2 = json.loads(out1), json.loads(out2)
    d1.pop("duration"), d2.pop("duration")
    assert json.dumps(d1, sort_keys=True) == json.dumps(d2, sort_keys=True)


def test_report_schema_fields(capsys):
    code, out = run(["diag", "--n", "2", "--h", "4", "--max-len", "4"], capsys)
    assert code == 0
    payload = json.loads(out)
    for key in ("schema", "tool_version", "command", "params", "checks",
                "completeness", "duration"):
        assert key in payload
    for c in payload["checks"]:
        assert c["status"] in ("pass", "fail", "info")
        if c["status"] == "fail":
            assert "witness" in c


def test_parser_roundtrip():
    corpus = [
        "a[1,2]*a[1,1]",
        "a[1,1] + a[1,2] - 2*a[2,1]",
        "abar[1,2]*abar[2,1] - 3",
        "(a[1,1] + a[1,2])*(a[2,1] - a[2,2])",
    ]
    from qzero.algebra import Algebra
    from qzero.field import FieldContext

    ctx = FieldContext(2, 4)
    for text in corpus:
        e = parse_expr(text, ctx=ctx)
        alg = e.algebra
        s = str(e)
        assert parse_expr(s, algebra=alg) == e, text


def test_parser_chirality_mixing():
    with pytest.raises(ParseError):
        parse_expr("a[1,2]*abar[1,1]", n=2, h=4)


def test_parser_position():
    with pytest.raises(ParseError) as exc:
        parse_expr("a[1,1]*a[1,2] - ?", n=2, h=4)
    assert "column 17" in str(exc.value)
