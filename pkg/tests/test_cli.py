import json

import pytest

from conftest import CORPUS
from singknot.cli import main
from singknot.poly import LaurentPoly

T = str(CORPUS / "singular_trefoil_T.sd")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_compute_jones_indexed(capsys):
    code, out, _ = run(capsys, "compute", T, "--mode", "indexedB")
    assert code == 0
    p = LaurentPoly.parse(out, 2)
    assert p.to_text() == out
    assert len(p) == 9


def test_identify_matches_single(capsys):
    _, a, _ = run(capsys, "compute", T, "--mode", "indexedB", "--identify-B")
    _, b, _ = run(capsys, "compute", T)
    assert a == b


def test_alexander_structured(capsys):
    code, out, _ = run(capsys, "compute", T, "--invariant", "alexander",
                       "--mode", "indexedB", "--format", "structured")
    assert code == 0
    data = json.loads(out)
    assert data["diagram"] == {"crossings": 2, "double_points": 2, "faces": 6,
                               "long": True, "writhe": 2}
    p = LaurentPoly.from_records(data["result"]["records"], data["result"]["arity"])
    assert p.to_text() == data["result"]["text"]


def test_structured_output_is_byte_identical(capsys):
    args = ("compute", T, "--mode", "indexedB", "--format", "structured")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args, "--jobs", "2")
    assert a == b


def test_substitution(capsys):
    code, out, _ = run(capsys, "compute", T, "--invariant", "alexander",
                       "--mode", "indexedB", "--at", "B1=0")
    assert code == 0 and out == "1*A^-2"


def test_substitution_negative_exponent_at_zero(capsys):
    code, _, err = run(capsys, "compute", T, "--mode", "indexedB", "--at", "B1=0")
    assert code == 3 and "NegativeExponentAtZero" in err


def test_bad_at_syntax(capsys):
    code, _, _ = run(capsys, "compute", T, "--at", "C=1")
    assert code == 2


def test_alexander_on_closed_is_precondition_error(capsys):
    code, _, err = run(capsys, "compute", str(CORPUS / "trefoil.sd"), "--invariant", "alexander")
    assert code == 3 and "NotLong" in err


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.sd"
    bad.write_text("LONG 1 2\nX+ 1 2 3\n")
    code, _, err = run(capsys, "compute", str(bad))
    assert code == 2 and "line 2" in err


def test_missing_file(capsys):
    code, _, _ = run(capsys, "compute", "/nonexistent/file.sd")
    assert code == 2


def test_invertible(capsys):
    code, out, _ = run(capsys, "invertible", T)
    assert code == 0
    assert out.splitlines()[0].startswith("jones: NotInvertible")
    assert out.splitlines()[1].startswith("alexander: NotInvertible")


@pytest.mark.parametrize("name", ["long_unknot", "long_trefoil"])
def test_invertible_inconclusive(capsys, name):
    _, out, _ = run(capsys, "invertible", str(CORPUS / f"{name}.sd"))
    assert out.splitlines() == ["jones: Inconclusive", "alexander: Inconclusive"]


def test_fuzz_ok(capsys):
    code, out, _ = run(capsys, "fuzz", str(CORPUS / "singular_trefoil_1.sd"),
                       "--steps", "8", "--seed", "1")
    assert code == 0 and out.startswith("ok: 8 moves")


def test_fuzz_zero_steps(capsys):
    code, out, _ = run(capsys, "fuzz", T, "--steps", "0", "--format", "structured")
    assert code == 0
    assert json.loads(out)["records"] == []


def test_fuzz_violation_exit_code(capsys, monkeypatch):
    from dataclasses import replace

    import singknot.alexander as alex

    bad = replace(alex.QUADRANT_WEIGHTS, double_point=dict(alex.QUADRANT_WEIGHTS.double_point,
                                                           left=((1, 0, 1),)))
    monkeypatch.setattr(alex, "QUADRANT_WEIGHTS", bad)
    code, out, _ = run(capsys, "fuzz", str(CORPUS / "singular_trefoil_1.sd"),
                       "--steps", "20", "--seed", "0")
    assert code == 4 and out.startswith("violation at step")
