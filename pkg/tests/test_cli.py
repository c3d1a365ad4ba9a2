import csv
import io
import json
from fractions import Fraction

import pytest

from u1kepler.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spectrum_csv(capsys):
    code, out, _ = run(capsys, "spectrum", "--n", "2", "--sigma", "0", "--levels", "3", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "I,energy_exact,energy_float,degeneracy,left_ktype,right_ktype"
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [(r["I"], float(r["energy_float"]), r["degeneracy"]) for r in rows] == [
        ("0", -0.5, "1"),
        ("1", -0.125, "4"),
        ("2", float(Fraction(-1, 18)), "9"),
    ]
    assert rows[1]["left_ktype"] == "[-1/2 -3/2]"
    assert rows[1]["right_ktype"] == "[3/2 1/2]"


def test_spectrum_json_schema(capsys):
    code, out, _ = run(capsys, "spectrum", "--n", "3", "--sigma", "-2", "--levels", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"params", "results", "failures", "version"}
    assert payload["failures"] == []
    assert payload["params"]["hw_label"] == "[-1/2 -1/2 -5/2 1/2 1/2 1/2]"
    for row in payload["results"]:
        exact = Fraction(row["energy_exact"])
        assert row["energy_float"] == float(exact)


def test_invalid_n_exits_2(capsys):
    code, _, err = run(capsys, "spectrum", "--n", "1")
    assert code == 2
    assert "n >= 2" in err


def test_unknown_flag_exits_2(capsys):
    code, _, _ = run(capsys, "spectrum", "--bogus", "1")
    assert code == 2


def test_negative_bound_rejected(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "dimension-equality", "--n", "3", "--kmax", "-1")
    assert code == 2


def test_verify_dimension_equality(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dimension-equality", "--n", "3", "--kmax", "20", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["results"]) == 21
    assert all(r["ok"] for r in payload["results"])


@pytest.mark.parametrize("suite", ["generating-function", "shell-eigenvalue", "oscillator-shell", "ktype-dimensions"])
def test_verify_parametrized_suites(capsys, suite):
    code, _, _ = run(capsys, "verify", "--suite", suite, "--n", "3", "--kmax", "8", "--levels", "4")
    assert code == 0


def test_verify_suite_without_n_parameter(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "radial", "--n", "3")
    assert code == 2


def test_verify_failure_exit_1(capsys):
    # a tolerance no residual can meet must produce a structured failure list
    code, out, _ = run(capsys, "verify", "--suite", "radial", "--tol-radial", "1e-30", "--format", "json")
    assert code == 1
    payload = json.loads(out)
    assert payload["failures"]
    assert all(f["suite"] == "radial" for f in payload["failures"])


def test_tolerance_env_override(capsys, monkeypatch):
    monkeypatch.setenv("U1KEPLER_TOL_GEOMETRY", "1e-40")
    code, _, _ = run(capsys, "verify", "--suite", "geometry")
    assert code == 1
    monkeypatch.setenv("U1KEPLER_TOL_GEOMETRY", "-1")
    code, _, _ = run(capsys, "verify", "--suite", "geometry")
    assert code == 2


def test_radial_csv(capsys):
    code, out, _ = run(capsys, "radial", "--n", "2", "--k", "2", "--points", "11", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["rho", "value"]
    assert len(rows) == 11


def test_radial_rejects_k0(capsys):
    code, _, err = run(capsys, "radial", "--k", "0")
    assert code == 2 and "k >= 1" in err


def test_oscillator_json(capsys):
    code, out, _ = run(capsys, "oscillator", "--n", "3", "--sigma", "2", "--k", "2", "--l", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["params"]["eigenvalue"] == 9
    assert payload["params"]["residual"] < 1e-7


def test_micz_check(capsys):
    code, out, _ = run(capsys, "micz-check", "--sigma", "-3", "--levels", "5", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    spectra = [r for r in payload["results"] if r.get("check") == "micz-spectrum"]
    assert len(spectra) == 5


def test_geometry_check(capsys):
    code, out, _ = run(capsys, "geometry-check", "--n", "4", "--samples", "100", "--seed", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["results"][0]["max_residual"] < 1e-12


def test_output_deterministic(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path in paths:
        assert main(["geometry-check", "--n", "3", "--samples", "50", "--format", "json", "--output", str(path)]) == 0
        assert main(["ktypes", "--n", "3", "--sigma", "1", "--format", "csv", "--output", str(path) + ".csv"]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert (tmp_path / "a.json.csv").read_bytes() == (tmp_path / "b.json.csv").read_bytes()
