"""CLI: spec-file grammar, family parsing, report determinism, exit codes."""
import json

import pytest

from tricore.cli import (SpecError, main, parse_family, parse_spec,
                         render_spec)
from tricore.families import VariableSpec, build_truncated_poly

XY = "trunc:x:-1:2,y:1:2"


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr().out
    return code, out


def test_validate_command(capsys):
    code, out = run(capsys, "validate", "--family", XY)
    assert code == 0
    rep = json.loads(out)
    assert rep["data"]["ok"] and rep["data"]["graded_symmetric"]
    assert rep["tool"] == "tricore"


def test_core_command(capsys):
    code, out = run(capsys, "core", "--family", XY)
    assert code == 0
    data = json.loads(out)["data"]
    assert data["dim_core"] == 2 and data["self_injective"]


def test_cover_command_and_d_rejection(capsys):
    code, out = run(capsys, "cover", "--family", XY, "--d", "1")
    assert code == 0
    data = json.loads(out)["data"]
    assert data["dim_C"] == 5 and data["relations"] == ["1*ba"]
    code, _ = run(capsys, "cover", "--family", XY, "--d", "0")
    assert code == 2


def test_matrices_sl2(capsys):
    code, out = run(capsys, "matrices", "--family", "sl2:3")
    assert code == 0
    data = json.loads(out)["data"]
    assert data["verdict"] == "NOT cellular"
    assert data["cartan"] == [[2, 2, 0], [2, 2, 0], [0, 0, 1]]


def test_reports_byte_identical(capsys):
    _, out1 = run(capsys, "celldatum", "--family", XY)
    _, out2 = run(capsys, "celldatum", "--family", XY)
    assert out1 == out2


def test_text_format(capsys):
    code, out = run(capsys, "core", "--family", XY, "--format", "text")
    assert code == 0
    assert out.startswith("tricore") and "dim_core: 2" in out


def test_spec_roundtrip():
    A, tri, tau = build_truncated_poly(
        [VariableSpec("x", -1, 2), VariableSpec("y", 1, 2)])
    text = render_spec(A, tri, tau=tau)
    A2, tri2, tau2, _ = parse_spec(text)
    assert A2.table == A.table and A2.degrees == A.degrees
    assert tau2.matrix == tau.matrix
    assert render_spec(A2, tri2, tau=tau2) == text


@pytest.mark.parametrize("bad,msg", [
    ("", "header"),
    ("tricore-spec 2\n", "header"),
    ("tricore-spec 1\nfield rational\nwhatever 1\n", "unknown key"),
    ("tricore-spec 1\nfield rational\nbasis a a\n", "duplicate"),
    ("tricore-spec 1\nbasis a\ndegrees 0\nunit a\n", "field"),
    ("tricore-spec 1\nfield rational\nbasis a\ndegrees 0\nunit a\n"
     "mul a a b 1\n", "unknown basis label"),
    ("tricore-spec 1\nfield rational\nbasis a\ndegrees 0\nunit a\n"
     "mul a a a x\n", "bad scalar"),
])
def test_spec_errors(bad, msg):
    with pytest.raises(SpecError) as exc:
        parse_spec(bad)
    assert msg in str(exc.value)


def test_spec_error_reports_line_number():
    text = "tricore-spec 1\nfield rational\nbasis a\ndegrees 0\nunit a\nbogus\n"
    with pytest.raises(SpecError) as exc:
        parse_spec(text)
    assert "line 6" in str(exc.value)


def test_family_parser():
    A, tri, tau = parse_family(XY)
    assert A.dim == 4 and tau is not None
    A2, _, _ = parse_family("sl2:3")
    assert A2.dim == 27
    with pytest.raises(SpecError):
        parse_family("nope:1")
    with pytest.raises(SpecError):
        parse_family("trunc:x:-1")


def test_spec_file_input(tmp_path, capsys):
    A, tri, tau = build_truncated_poly(
        [VariableSpec("x", -1, 2), VariableSpec("y", 1, 2)])
    p = tmp_path / "xy.spec"
    p.write_text(render_spec(A, tri, tau=tau))
    code, out = run(capsys, "core", "--spec", str(p))
    assert code == 0
    assert json.loads(out)["data"]["dim_core"] == 2


def test_out_flag(tmp_path, capsys):
    p = tmp_path / "report.json"
    code = main(["core", "--family", XY, "--out", str(p)])
    assert code == 0
    assert json.loads(p.read_text())["command"] == "core"


def test_missing_input(capsys):
    assert main(["core"]) == 2
