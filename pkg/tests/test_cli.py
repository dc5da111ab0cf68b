import json
import subprocess
import sys

import numpy as np
import pytest

from oracle_values import EXP_T_PLUS

PAR = '{"kind":"poly1d","coeffs":[1,0,1]}'


def run(*args, env=None):
    return subprocess.run([sys.executable, "-m", "equidist", *args], capture_output=True, text=True,
                          env=env)


def read_csv(path):
    lines = path.read_text().splitlines()
    header = [l for l in lines if l.startswith("#")]
    body = [l for l in lines if not l.startswith("#")]
    cols = body[0].split(",")
    data = np.array([[float(v) for v in row.split(",")] for row in body[1:]])
    return header, cols, data


def test_curve_csv(tmp_path):
    out = tmp_path / "curve.csv"
    cp = run("curve", "--fn", PAR, "--R", "0.5", "--grid", "-1.6:1.6:101", "--out", str(out))
    assert cp.returncode == 0, cp.stderr
    header, cols, data = read_csv(out)
    assert cols == ["t", "x", "y", "s", "alpha", "g", "r", "f", "f_slope"]
    assert data.shape == (101, 9)
    assert np.all(np.diff(data[:, 1]) > 0)
    assert any('"poly1d"' in h for h in header) and "# R: 0.5" in header


def test_curve_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        assert run("curve", "--fn", PAR, "--R", "0.5", "--grid", "-1:1:21", "--out", str(p)).returncode == 0
    assert a.read_bytes() == b.read_bytes()


def test_csv_floats_round_trip(tmp_path):
    from equidist.circle import trace_curve
    from equidist.functions import Poly1D
    out = tmp_path / "c.csv"
    run("curve", "--fn", PAR, "--R", "0.5", "--grid", "-1:1:21", "--out", str(out))
    _, _, data = read_csv(out)
    c = trace_curve(Poly1D([1.0, 0.0, 1.0]), 0.5, np.linspace(-1, 1, 21))
    assert np.array_equal(data[:, 1], c.x) and np.array_equal(data[:, 2], c.y)


def test_domain_json():
    cp = run("domain", "--fn", '{"kind":"exp"}', "--R", "0.5")
    assert cp.returncode == 0, cp.stderr
    doc = json.loads(cp.stdout)
    assert doc["t_minus"] is None
    assert abs(doc["t_plus"] - EXP_T_PLUS) < 1e-6
    assert doc["provenance"]["R"] == "0.5"


def test_pathology_csv(tmp_path):
    out = tmp_path / "svc.csv"
    cp = run("pathology", "--svc", "--depth", "3", "--out", str(out))
    assert cp.returncode == 0, cp.stderr
    header, cols, data = read_csv(out)
    assert "# kept_measure: 9/16" in header and "# kept_measure_float: 0.5625" in header
    assert cols[:4] == ["t", "residual_convex", "residual_trimmed", "in_fat_cantor"]
    assert data.shape[0] == 257
    assert np.array_equal(data[:, 3], data[:, 4])


def test_critical_grid_exit_2():
    cp = run("curve", "--fn", PAR, "--R", "0.5", "--grid", "-2:2:11")
    assert cp.returncode == 2
    assert "critical" in cp.stderr


@pytest.mark.parametrize("spec,field", [('{"kind":"poly1d"}', "coeffs"), ('{"coeffs":[1]}', "kind"),
                                        ("{nope", "fn")])
def test_malformed_spec_exit_2(spec, field):
    cp = run("domain", "--fn", spec, "--R", "0.5")
    assert cp.returncode == 2
    assert repr(field) in cp.stderr


def test_bad_grid_and_radius():
    assert run("curve", "--fn", PAR, "--R", "0.5", "--grid", "1:0:5").returncode == 2
    assert run("curve", "--fn", PAR, "--R", "0.5", "--grid", "0:1:1").returncode == 2
    assert run("domain", "--fn", PAR, "--R", "-1").returncode == 2


def test_env_tolerance(tmp_path):
    import os
    env = dict(os.environ, EQUIDIST_TOL="1e-6")
    cp = run("domain", "--fn", '{"kind":"exp"}', "--R", "0.5", env=env)
    doc = json.loads(cp.stdout)
    assert doc["provenance"]["tol"] == "1e-06"
    assert abs(doc["t_plus"] - EXP_T_PLUS) < 1e-5
    env["EQUIDIST_TOL"] = "abc"
    assert run("domain", "--fn", '{"kind":"exp"}', "--R", "0.5", env=env).returncode == 2


def test_rays_table():
    q = '{"kind":"quadform","Q":[[1,10],[10,1000]],"b":[0,-30],"c":1}'
    cp = run("rays", "--fn", q, "--R", "0.3", "--ray", "1,0:6:4096")
    assert cp.returncode == 0, cp.stderr
    rows = [l for l in cp.stdout.splitlines() if not l.startswith("#")]
    assert rows[0] == "u1,u2,r_start,r_end,t_u_plus"
    assert len(rows) == 3


def test_vertical_and_minop():
    cp = run("vertical", "--fn", '{"kind":"sqrt1p"}', "--R", "0.9", "--grid", "-2:2:5")
    assert cp.returncode == 0, cp.stderr
    row = [l for l in cp.stdout.splitlines() if l.startswith("0.0,")][0].split(",")
    assert abs(float(row[1]) - 0.95) < 1e-9
    fam = ['{"kind":"shifted_parabola","center":1,"offset":1}',
           '{"kind":"shifted_parabola","center":-1,"offset":1}']
    cp = run("minop", "--fn", fam[0], "--fn", fam[1], "--R", "0.5", "--grid", "-2:2:9", "--commute")
    assert cp.returncode == 0, cp.stderr
    assert "# sandwich_ok: True" in cp.stdout and "# commute_ok: True" in cp.stdout


def test_characterize_json():
    cp = run("characterize", "--fn", '{"kind":"poly1d","coeffs":[-0.1,0,0.75]}', "--R", "0.5",
             "--grid", "-2:2:101")
    assert cp.returncode == 0, cp.stderr
    doc = json.loads(cp.stdout)
    assert doc["ok"] is False and doc["failures"]


def test_verify_only_svc(tmp_path):
    out = tmp_path / "report.json"
    cp = run("verify", "--only", "svc", "--out", str(out))
    assert cp.returncode == 0, cp.stderr
    doc = json.loads(out.read_text())
    assert [c["name"] for c in doc["checks"]] == ["svc"]


def test_verify_perturbed_exit_3():
    cp = run("verify", "--only", "compatibility", "--perturb")
    assert cp.returncode == 3
    assert "FAIL compatibility" in cp.stderr


def test_verify_unknown_check():
    assert run("verify", "--only", "bogus").returncode == 2


def test_verify_default_suite():
    cp = run("verify")
    assert cp.returncode == 0, cp.stderr
    assert cp.stderr.count("PASS") == 10


def test_main_in_process(capsys):
    from equidist.cli import main
    assert main(["domain", "--fn", '{"kind":"sqrt1p"}', "--R", "0.9"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["t_minus"] is None and doc["t_plus"] is None
