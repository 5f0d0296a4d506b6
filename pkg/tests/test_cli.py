import json

import pytest

from ptqes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fixed_points_g1(capsys):
    code, out, _ = run(capsys, "dyn", "fixed-points", "--g", "1")
    assert code == 0
    doc = json.loads(out)
    assert [f["family"] for f in doc["fixed_points"]] == ["i", "ii"]
    assert [f["class"] for f in doc["fixed_points"]] == ["Center", "Saddle"]
    assert doc["config"]["a"] == pytest.approx(2 / 3) and doc["config"]["b"] == 1
    assert doc["method"]


def test_fixed_points_complex(capsys):
    code, out, _ = run(capsys, "dyn", "fixed-points", "--g", "1", "--include-complex")
    assert code == 0
    assert len(json.loads(out)["fixed_points"]) == 4


def test_scan_csv(capsys):
    code, out, _ = run(capsys, "dyn", "scan", "--g-min", "1.40", "--g-max", "1.42", "--steps", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "g,fp,re_lambda,im_lambda,class"
    assert len(lines) == 1 + 2 + 4
    assert "\r" not in out


def test_scan_json(capsys):
    code, out, _ = run(capsys, "dyn", "scan", "--g-min", "0", "--g-max", "1", "--steps", "3", "--format", "json")
    assert code == 0
    assert "config" in json.loads(out)


def test_integrate_csv(capsys):
    code, out, _ = run(capsys, "dyn", "integrate", "--g", "0.4", "--x0", "0.8", "--y0", "0",
                       "--dt", "0.01", "--t-max", "0.05")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t,x,y,H"
    assert len(lines) == 1 + 6
    assert lines[1].startswith("0,0.80000000000000004,0,")


def test_canon_check(capsys):
    code, out, _ = run(capsys, "canon", "check", "--g", "0.5", "--samples", "20", "--seed", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["max_det_deviation"] <= 1e-8
    assert set(doc["gauge_identities"]) == {"alpha_beta", "beta_sq"}


def test_qes_g(capsys):
    code, out, _ = run(capsys, "qes", "g", "--J", "2", "--branch", "table")
    assert code == 0
    (g,) = json.loads(out)["roots"]
    assert g == pytest.approx(0.477122, abs=1e-5)


def test_qes_g_printed_none_exit2(capsys):
    code, out, err = run(capsys, "qes", "g", "--J", "2", "--branch", "printed")
    assert code == 2
    assert out == ""
    assert "NoRoot" in err


def test_qes_spectrum_methods(capsys):
    _, tri, _ = run(capsys, "qes", "spectrum", "--J", "4", "--g", "0.378671", "--method", "tri")
    _, comp, _ = run(capsys, "qes", "spectrum", "--J", "4", "--g", "0.378671", "--method", "companion")
    e_tri = json.loads(tri)["energies"]
    e_comp = json.loads(comp)["energies"]
    assert e_tri == pytest.approx(e_comp, rel=1e-8)
    assert e_tri == pytest.approx([-18.3508, -15.1846, -12.2638, -9.63704], abs=1e-3)


def test_qes_table(capsys, tmp_path):
    csv_path = tmp_path / "t.csv"
    code, out, _ = run(capsys, "qes", "table", "--csv", str(csv_path))
    assert code == 0
    doc = json.loads(out)
    assert [r["J"] for r in doc["rows"]] == list(range(1, 11))
    text = csv_path.read_text()
    assert text.splitlines()[0] == "J,g,E_index,E_paper,E_recomputed,verdict"
    assert len(text.splitlines()) == 1 + sum(range(1, 11))
    assert text.count(",mismatch") == 5


def test_qes_verify(capsys):
    code, out, _ = run(capsys, "qes", "verify", "--J", "2", "--g", "0.477122", "--k-max", "3")
    assert code == 0
    doc = json.loads(out)
    for key in ("factorization_max_residual", "reality_certificate", "flavor_equivalence", "eta_diagnostics"):
        assert key in doc
    assert doc["factorization_max_residual"] <= 1e-8


def test_unknown_flag_exit1(capsys):
    code, out, err = run(capsys, "qes", "g", "--J", "1", "--bogus")
    assert code == 1
    assert out == ""
    assert err


def test_missing_subcommand_exit1(capsys):
    assert run(capsys)[0] == 1
    assert run(capsys, "dyn")[0] == 1


def test_usage_text_deterministic(capsys):
    a = run(capsys, "qes", "nope")
    b = run(capsys, "qes", "nope")
    assert a == b and a[0] == 1


@pytest.mark.parametrize("argv", [
    ("qes", "table"),
    ("dyn", "scan", "--g-min", "-2", "--g-max", "2", "--steps", "41"),
    ("canon", "check", "--g", "0.7", "--seed", "5"),
    ("dyn", "integrate", "--g", "1", "--x0", "-0.8", "--y0", "0", "--t-max", "4"),
])
def test_byte_identical_reruns(tmp_path, capsys, argv):
    # the output path is part of the embedded config, so both runs share it
    path = tmp_path / "out"
    assert main([*argv, "--out", str(path)]) == 0
    first = path.read_bytes()
    assert main([*argv, "--out", str(path)]) == 0
    assert path.read_bytes() == first and first
    assert capsys.readouterr().out == ""


def test_float_format(capsys):
    _, out, _ = run(capsys, "qes", "g", "--J", "1")
    doc = json.loads(out)
    assert "0.58865022688308" in out
    assert doc["config"]["a"] == 0.6666666666666666
