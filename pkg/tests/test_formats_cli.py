import json
import subprocess
import sys
from pathlib import Path

import pytest

from qaut import formats
from qaut.catalog import shipped_algebras, shipped_diagrams, shipped_hopf
from qaut.cli import main
from qaut.finite_hopf import validate_hopf

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


# formats -------------------------------------------------------------------------


@pytest.mark.parametrize("name", sorted(shipped_algebras()))
def test_algebra_round_trip(name):
    z = shipped_algebras()[name]
    assert formats.algebra_from_dict(json.loads(json.dumps(formats.algebra_to_dict(z)))) == z


@pytest.mark.parametrize("name", sorted(shipped_hopf()))
def test_hopf_round_trip(name):
    h = shipped_hopf()[name]
    back = formats.hopf_from_dict(json.loads(json.dumps(formats.hopf_to_dict(h))))
    assert validate_hopf(back)
    assert (back.mult, back.comul, back.unit, back.counit, back.antipode) == \
        (h.mult, h.comul, h.unit, h.counit, h.antipode)


@pytest.mark.parametrize("name", sorted(shipped_diagrams()))
def test_diagram_round_trip(name):
    d = shipped_diagrams()[name]
    back = formats.diagram_from_dict(json.loads(json.dumps(formats.diagram_to_dict(d))))
    assert back.objects == d.objects
    assert back.arrows == d.arrows


def test_constructor_shortcut():
    z = formats.algebra_from_dict({"constructor": "function_algebra", "n": 2, "weights": ["1/3", "2/3"]})
    assert z.measure == (formats.la.scalar("1/3"), formats.la.scalar("2/3"))
    with pytest.raises(formats.FormatError, match="needs field"):
        formats.algebra_from_dict({"constructor": "matrix_algebra"})
    with pytest.raises(formats.FormatError, match="unknown"):
        formats.algebra_from_dict({"constructor": "octonions"})


@pytest.mark.parametrize("bad, match", [
    ({"structure": [], "unit": [1], "measure": [1]}, "dim"),
    ({"dim": 1, "structure": [[0, 0, 0]], "unit": [1], "measure": [1]}, "expected"),
    ({"dim": 1, "structure": [[0, 0, 0, 0.5]], "unit": [1], "measure": [1]}, "structure"),
    ({"dim": 1, "structure": [[0, 0, 0, 1]], "unit": [1, 0], "measure": [1]}, "algebra"),
    ([1, 2], "JSON object"),
])
def test_algebra_format_errors(bad, match):
    with pytest.raises(formats.FormatError, match=match):
        formats.algebra_from_dict(bad)


def test_diagram_file_references():
    d = formats.diagram_from_dict(formats.load_json(DATA / "uniform3_diagram.json"), DATA)
    assert d.objects["0"].dim == 3


def test_malformed_json_location(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{"dim": 2,\n  "unit": [1, 1\n}')
    with pytest.raises(formats.FormatError, match=r"broken\.json:3:1"):
        formats.load_json(p)


# CLI ------------------------------------------------------------------------------


def test_validate_algebra(capsys):
    code, out, _ = run(capsys, "validate-algebra", DATA / "uniform3.json")
    assert code == 0 and "valid" in out
    code, out, _ = run(capsys, "validate-algebra", DATA / "dual_numbers.json", "--format", "json")
    assert code == 0 and json.loads(out)["ok"] is True


def test_validate_invalid_algebra(tmp_path, capsys):
    p = tmp_path / "degenerate.json"
    p.write_text(json.dumps({"dim": 2, "structure": [[0, 0, 0, 1], [1, 1, 1, 1]], "unit": [1, 1], "measure": [1, 0]}))
    code, out, _ = run(capsys, "validate-algebra", p)
    assert code == 1 and "nondegenerate" in out


def test_aut_uniform_three(capsys):
    code, out, _ = run(capsys, "aut", DATA / "uniform3_diagram.json")
    assert code == 0 and out.startswith("6 classical points")
    code, out, _ = run(capsys, "aut", DATA / "cycle3_diagram.json", "--format", "json")
    assert code == 0 and json.loads(out)["count"] == 3
    code, out, _ = run(capsys, "aut", DATA / "weighted2_diagram.json", "--format", "json")
    assert json.loads(out)["count"] == 1


def test_aut_unsupported(tmp_path, capsys):
    p = tmp_path / "m2.json"
    p.write_text(json.dumps({"objects": {"0": {"constructor": "matrix_algebra", "d": 2}}}))
    code, _, err = run(capsys, "aut", p)
    assert code == 3 and "verify_classical_point" in err


def test_haar(capsys):
    code, out, _ = run(capsys, "haar", DATA / "z2_hopf.json")
    assert code == 0
    assert "J = (1, 0)" in out and "cosemisimple: true" in out
    code, out, _ = run(capsys, "haar", DATA / "sweedler_hopf.json", "--format", "json")
    payload = json.loads(out)
    assert payload["integral"] == ["0", "0", "1", "0"] and payload["cosemisimple"] is False


def test_kappa(capsys):
    code, out, _ = run(capsys, "kappa", DATA / "sweedler_hopf.json", DATA / "regular_comodule.json")
    assert code == 0 and "dimension 16" in out


def test_kappa_invalid_comodule(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"dim": 1, "coaction": [[0, 0, 0, 2]]}))
    code, out, _ = run(capsys, "kappa", DATA / "z2_hopf.json", p)
    assert code == 1 and "counit" in out


def test_present_round_trip_through_nf_and_verify_point(tmp_path, capsys):
    pres_file = tmp_path / "pres.json"
    code, out, _ = run(capsys, "present", DATA / "uniform2_diagram.json", "--out", pres_file)
    assert code == 0 and "all checks Zero" in out
    code, out, _ = run(capsys, "nf", pres_file, "--poly", "u0_11*u0_22 - u0_22*u0_11")
    assert code == 0 and out.strip() == "Zero"
    code, out, _ = run(capsys, "nf", pres_file, "--poly", "u0_11", "--format", "json")
    assert code == 1 and json.loads(out)["verdict"] == "NonzeroWitness"
    code, out, _ = run(capsys, "verify-point", pres_file, DATA / "uniform2_swap.json")
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "verify-point", pres_file, DATA / "uniform2_bad.json")
    assert code == 1 and out.startswith("false")


def test_present_graph_json(capsys):
    code, out, _ = run(capsys, "present-graph", DATA / "cycle3.json", "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["objects"] == {"0": 3, "1": 3}
    assert payload["checks"]["ok"] is True
    assert payload["coproduct"] == "matrix" and payload["counit"] == "kronecker"


def test_present_inconclusive_exit_code(capsys):
    # the degree-4 images of the quadratic relations exceed a cap of 2 in the tensor square
    code, out, _ = run(capsys, "present", DATA / "uniform3_diagram.json", "--degree-cap", "2")
    assert code == 2 and "inconclusive: mult[0](1,1,1)" in out


def test_nf_inconclusive(tmp_path, capsys):
    pres_file = tmp_path / "pres4.json"
    p = tmp_path / "u4.json"
    p.write_text(json.dumps({"objects": {"0": {"constructor": "function_algebra", "n": 4}}}))
    run(capsys, "present", p, "--skip-checks", "--out", pres_file)
    code, out, _ = run(capsys, "nf", pres_file, "--poly", "u0_11*u0_22 - u0_22*u0_11", "--degree-cap", "4")
    assert code == 2 and out.startswith("Inconclusive")


def test_decompose_invertible(capsys):
    code, out, _ = run(capsys, "decompose-invertible", DATA / "dual_numbers.json", "--element", "0,1")
    assert code == 0
    assert out.splitlines() == ["2 term(s)", "  1 * (-1, 1)", "  1 * (1, 0)"]
    code, _, err = run(capsys, "decompose-invertible", DATA / "dual_numbers.json", "--element", "1,2,3")
    assert code == 3 and "dimension" in err


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["haar"],
    ["haar", "x.json", "--unknown-flag"],
    ["nf", "p.json"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as e:
        main(argv)
    assert e.value.code == 3


def test_missing_and_malformed_files(tmp_path, capsys):
    code, _, err = run(capsys, "haar", tmp_path / "nope.json")
    assert code == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "validate-algebra", bad)
    assert code == 3 and "bad.json:1:2" in err


def test_bad_polynomial(tmp_path, capsys):
    pres_file = tmp_path / "pres.json"
    run(capsys, "present", DATA / "uniform2_diagram.json", "--skip-checks", "--out", pres_file)
    assert run(capsys, "nf", pres_file, "--poly", "u0_11 +")[0] == 3
    assert run(capsys, "nf", pres_file, "--poly", "u7_11")[0] == 3


def test_module_entry_point_help():
    res = subprocess.run([sys.executable, "-m", "qaut", "--help"], capture_output=True, text=True)
    assert res.returncode == 0
    for name in ("validate-algebra", "present", "present-graph", "aut", "verify-point", "haar", "kappa", "nf",
                 "decompose-invertible"):
        assert name in res.stdout
