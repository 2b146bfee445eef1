import json
import subprocess
import sys

import pytest

from diophrec.certificate import build_certificate, dumps, loads, verify_certificate
from diophrec.cli import main
from diophrec.exact import UniPoly
from diophrec.pipeline import derive
from diophrec.proof import exact_expression, render_proof
from diophrec.reduction import exact_min, avoidance_region, dehomogenize

P_T = "x^3 + 2*x^2*y + x^2*z + 2*x*y^2 - 2*x*y*z - x*z^2 + 2*y^3 - 2*y*z^2 + z^3"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_derive(capsys):
    code, out, _ = run(capsys, "derive", "--coeffs", "1,1,1")
    assert code == 0 and out.strip() == P_T
    code, out, _ = run(capsys, "derive", "--coeffs", "10,3,1")
    assert out.strip() == ("x^3 + 6*x^2*y + 10*x^2*z + 19*x*y^2 + 27*x*y*z - 3*x*z^2"
                           " + 31*y^3 + 97*y^2*z - 20*y*z^2 + z^3")


def test_bad_input_exit_4(capsys):
    code, _, err = run(capsys, "derive", "--coeffs", "1,1,2")
    assert code == 4 and "must be 1" in err
    with pytest.raises(SystemExit) as e:
        main(["derive", "--coeffs", "a,b"])
    assert e.value.code == 4
    with pytest.raises(SystemExit) as e:
        main(["no-such-command"])
    assert e.value.code == 4
    code, _, _ = run(capsys, "all-solns", "--coeffs", "3,-1")
    assert code == 4


def test_all_solns(capsys):
    code, out, _ = run(capsys, "all-solns", "--coeffs", "1,1,1")
    assert code == 0
    assert "up to 5" in out and "{[0, 0, 1]}" in out
    code, out, _ = run(capsys, "all-solns", "--coeffs", "2,3,1")
    assert code == 0
    assert "up to 17" in out and "{[0, 0, 1], [0, 1, 3], [0, 2, 5], [1, 1, 4]}" in out


def test_inadmissible_exit_2(capsys):
    code, _, err = run(capsys, "all-solns", "--coeffs", "1,3,1")
    assert code == 2
    assert "reducible" in err and "rational root -1" in err
    code, out, _ = run(capsys, "prove", "--coeffs", "1,3,1")
    assert code == 2 and "not admissible" in out


def test_method_failure_exit_3(capsys):
    code, _, err = run(capsys, "all-solns", "--coeffs", "1,4,1")
    assert code == 3 and "method fails" in err


def test_verify(capsys, tmp_path):
    path = tmp_path / "v.json"
    code, out, _ = run(capsys, "--json", str(path), "verify", "--coeffs", "1,1,1", "--radius", "5")
    assert code == 0 and out.startswith("11 solutions")
    report = json.loads(path.read_text())
    assert report["ok"] and len(report["solutions"]) == 11
    code, out, _ = run(capsys, "verify", "--coeffs", "1,1,1", "--radius", "0")
    assert code == 0 and out.startswith("0 solutions")
    code, _, _ = run(capsys, "verify", "--coeffs", "2,3,1", "--radius", "12")
    assert code == 0


def test_verify_failure_exit_5(capsys):
    code, _, err = run(capsys, "verify", "--coeffs", "2,3,1", "--radius", "6", "--generators", "0,0,1")
    assert code == 5 and "(0, 1, 3)" in err


def test_orbit(capsys):
    code, out, _ = run(capsys, "orbit", "--coeffs", "1,1,1", "--seed", "0,0,1", "--back", "2")
    assert out.splitlines() == ["(-1, 1, 0)", "(1, 0, 0)", "(0, 0, 1)"]
    code, out, _ = run(capsys, "orbit", "--coeffs", "1,1,1", "--seed", "0,0,1")
    assert out.splitlines() == ["(0, 0, 1)"]
    code, out, _ = run(capsys, "orbit", "--coeffs", "1,1,1", "--seed", "0,0,1", "--forward", "7")
    assert out.splitlines()[-1] == "(13, 24, 44)"


def test_quiet(capsys):
    code, out, _ = run(capsys, "--quiet", "derive", "--coeffs", "1,1,1")
    assert code == 0 and out == ""
    code, out, _ = run(capsys, "derive", "--quiet", "--coeffs", "1,1,1")
    assert out == ""


def test_plot_data(capsys, tmp_path):
    path = tmp_path / "field.csv"
    code, _, _ = run(capsys, "plot-data", "--coeffs", "1,1,1", "--grid", "5", "--out", str(path))
    lines = path.read_text().splitlines()
    assert code == 0 and lines[0] == "t,s,dt,ds"
    assert lines[1] == "0,0,0,1"
    assert len(lines) == 1 + 25 + 1
    tag, ft, fs = lines[-1].split(",")
    assert tag == "# fixed_point"
    assert float(ft) == pytest.approx(0.2956, abs=1e-3) and float(fs) == pytest.approx(0.5437, abs=1e-3)
    code, out, _ = run(capsys, "plot-data", "--coeffs", "2,3,1", "--grid", "2")
    tag, ft, fs = out.splitlines()[-1].split(",")
    assert float(ft) == pytest.approx(0.1054, abs=1e-3) and float(fs) == pytest.approx(0.3247, abs=1e-3)
    # dt, ds on a row follow the plane map exactly to 12 digits
    t, s, dt, ds = (float(v) for v in out.splitlines()[2].split(","))
    assert dt == pytest.approx(s / (2 + 3 * s + t) - t, rel=1e-11)
    assert ds == pytest.approx(1 / (2 + 3 * s + t) - s, rel=1e-11)


def test_plot_data_rejects_small_grid(capsys):
    code, _, _ = run(capsys, "plot-data", "--coeffs", "1,1,1", "--grid", "1")
    assert code == 4


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "diophrec", "derive", "--coeffs", "1,1,1"],
                       capture_output=True, text=True, timeout=60)
    assert r.returncode == 0 and r.stdout.strip() == P_T


# -- certificates --------------------------------------------------------------

@pytest.mark.parametrize("coeffs", [(1, 1, 1), (2, 3, 1), (1, 3, 1), (1, 4, 1)])
def test_certificate_round_trip(coeffs):
    text = dumps(build_certificate(derive(coeffs)))
    assert text == dumps(build_certificate(derive(coeffs)))
    verdicts = verify_certificate(loads(text))
    assert verdicts and all(verdicts.values())


def test_certificate_schema(tmp_path, capsys):
    path = tmp_path / "c.json"
    code, _, _ = run(capsys, "--json", str(path), "all-solns", "--coeffs", "2,3,1")
    cert = json.loads(path.read_text())
    assert cert["recurrence"] == {"order": 3, "coeffs": [2, 3, 1]}
    assert cert["polynomial"]["vars"] == ["x", "y", "z"]
    assert cert["invariance_verified"] is True
    assert set(cert["admissibility"]["dominant_root"]) == {"defining", "interval", "approx"}
    reg = cert["reduction"]["regions"][0]
    assert {"constraints", "min", "inv_cuberoot_approx"} <= set(reg)
    assert all("/" in e for e in reg["min"]["interval"])
    assert cert["reduction"]["search_limit"] == 17 and cert["reduction"]["method_ok"]
    assert cert["generators"] == [[0, 0, 1], [0, 1, 3], [0, 2, 5], [1, 1, 4]]
    assert "tool_version" in cert


def test_tampered_certificate_fails():
    cert = build_certificate(derive((2, 3, 1)))
    cert["generators"] = [[0, 0, 1]]
    cert["reduction"]["search_limit"] = 16
    cert["polynomial"]["terms"][0]["coeff"] = "2"
    v = verify_certificate(cert)
    assert not v["generators"] and not v["search_limit"] and not v["polynomial"]


def test_certificate_ignores_approximations():
    cert = build_certificate(derive((1, 1, 1)))
    cert["admissibility"]["dominant_root"]["approx"] = 99.0
    for r in cert["reduction"]["regions"]:
        r["min"]["approx"] = -1.0
        r["inv_cuberoot_approx"] = 0.0
    assert all(verify_certificate(cert).values())


# -- proofs --------------------------------------------------------------------

def test_proof_tribonacci():
    text = render_proof(derive((1, 1, 1)))
    assert text.startswith("THEOREM.") and text.rstrip().endswith("Q.E.D.")
    assert "(398 - 68*sqrt(34))/27" in text
    assert "2.623501217 <= z" in text
    assert "P - P(shift) is 0" in text


def test_proof_23_structure(tmp_path, capsys):
    path = tmp_path / "proof.txt"
    code, _, _ = run(capsys, "prove", "--coeffs", "2,3,1", "--out", str(path))
    text = path.read_text()
    assert code == 0
    order = ["THEOREM.", "PROOF.", "P - P(shift) is 0", "z - 3*x - 2*y",
             "7*s^3 + 11*s^2*t + 6*s*t^2 + t^3 + s^2 + 3*s*t + 2*t^2 - 4*s - 3*t + 1 = 1/z^3",
             "(50371 - 1718*sqrt(859))/81675", "(3703 - 106*sqrt(1219))/4968",
             "We only need to look for solutions with z < 16.3606", "Q.E.D."]
    pos = [text.index(s) for s in order]
    assert pos == sorted(pos)


def test_proof_method_failure_is_not_a_theorem():
    text = render_proof(derive((1, 4, 1)))
    assert text.startswith("CONJECTURE.") and "Q.E.D." not in text


def test_exact_expression_falls_back_to_root_description():
    m = exact_min(dehomogenize(derive((1, 1, 1)).polynomial), avoidance_region(1, 1, 1)).minimum
    assert exact_expression(m) == "(398 - 68*sqrt(34))/27"
    from diophrec.exact import isolate_real_roots
    (alpha,) = isolate_real_roots(UniPoly((-1, -1, -1, 1)))
    assert exact_expression(alpha).startswith("the root of X^3 - X^2 - X - 1")


def test_proof_23_contains_reference_constants():
    # the reference decimals disagree with their own radicals in the 7th digit;
    # this property is kept as stated and is expected to fail
    text = render_proof(derive((2, 3, 1)))
    assert "16.36065936" in text and "13.33123227" in text
