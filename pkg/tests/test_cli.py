import json

import pytest

from germdyn.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out) if out else None


def test_curve_coeffs(capsys):
    code, data = run_json(capsys, "curve", "coeffs", "--seq", "0", "--n", "5")
    assert code == 0
    vals = [c["value"] for c in data["coefficients"]]
    assert vals == ["1", "-1/2^1", "-1/2^3", "-1/2^4", "-5/2^7", "57/2^8"]
    # large integers are emitted as decimal strings
    assert all(isinstance(c["num"], str) for c in data["coefficients"])


def test_curve_mult(capsys):
    code, data = run_json(capsys, "curve", "mult", "--a", "0", "--b", "001")
    assert code == 0
    assert data["formula"] == "22" and data["coefficientwise"] == "22"
    assert data["agree"] is True


def test_verify_pass_and_fail_exit_codes(capsys):
    code, data = run_json(capsys, "verify", "functoriality", "--seq", "0",
                          "--n", "200")
    assert code == 0 and data["result"] == "PASS"
    code2, data2 = run_json(capsys, "verify", "lemma", "--n", "500")
    assert code2 == 0 and data2["result"] == "PASS"
    code3, data3 = run_json(capsys, "verify", "section3", "--a", "0",
                            "--b", "01")
    assert code3 == 0


def test_arnold(capsys):
    code, data = run_json(capsys, "arnold", "--nu", "pow:2", "--witnesses", "2")
    assert code == 0 and data["result"] == "PASS"
    assert all(isinstance(w["M"], str) for w in data["witnesses"])


def test_mu_seq_and_pipeline(capsys):
    code, data = run_json(capsys, "mu-seq", "--map", "(x^2 - y^4, y^4)",
                          "--ideal", "x, y", "--nmax", "4")
    assert code == 0 and data["mu"] == ["1", "2", "4", "8", "16"]
    code2, data2 = run_json(capsys, "pipeline", "--map", "(x^2 - y^4, y^4)",
                            "--ideal", "x, y", "--nmax", "5")
    assert code2 == 0 and data2["result"] == "PASS"
    assert data2["recursion"]["coeffs"] == ["2"]
    assert data2["asymptotic_rate"]["value"] == "2"
    assert data2["envelope"]["ratio_min"] == "1"
    assert data2["envelope"]["ratio_max"] == "1"


def test_samuel_and_mixed(capsys):
    code, data = run_json(capsys, "samuel", "--ideal", "x^2, y^3, x y")
    assert code == 0 and data["samuel"] == "5"
    code2, data2 = run_json(capsys, "mixed", "--ideal-a", "x, y",
                            "--ideal-b", "x^2, y^3")
    assert code2 == 0
    assert data2["e_mixed"] == "2" and data2["minkowski_ok"] is True


def test_c_seq_and_c_inf(capsys):
    code, data = run_json(capsys, "c-seq", "--map", "(x^2 - y^4, y^4)",
                          "--nmax", "4")
    assert code == 0 and data["rates"] == ["2", "4", "8", "16"]
    code2, data2 = run_json(capsys, "c-inf", "--map", "(y, x y)", "--nmax", "8")
    assert code2 == 0
    assert data2["certificate"]["char_poly"] == ["1", "-1", "-1"]


def test_skewness(capsys, tmp_path):
    chart = tmp_path / "chart.json"
    chart.write_text(json.dumps(
        {"points": 2, "proximate": [[2, 1]], "axis": "y"}
    ))
    code, data = run_json(capsys, "skewness", "--chart", str(chart),
                          "--i", "2", "--j", "2")
    assert code == 0 and data["skewness"] == "2"


def test_recursion_command(capsys):
    code, data = run_json(capsys, "recursion", "--terms",
                          "1,1,2,3,5,8,13,21,34")
    assert code == 0 and data["coeffs"] == ["1", "1"]
    code2, _ = run(capsys, "recursion", "--terms",
                   "2,3,5,7,11,13,17,19,23,29")
    assert code2 == 1


def test_usage_errors(capsys):
    code, _ = run(capsys, "no-such-command")
    assert code == 2
    code2, _ = run(capsys, "curve", "mult", "--a", "0bad", "--b", "1")
    assert code2 == 2
    code3, _ = run(capsys, "mu-seq", "--map", "bogus(", "--ideal", "x, y",
                   "--nmax", "2")
    assert code3 == 2


def test_budget_exit_code(capsys):
    code, _ = run(capsys, "--budget", "2", "pipeline",
                  "--map", "(x^2 - y^4, y^4)", "--ideal", "x, y", "--nmax", "5")
    assert code == 3


def test_global_flags_both_positions_and_out(capsys, tmp_path):
    out = tmp_path / "a.json"
    code, text = run(capsys, "--format", "json", "--out", str(out),
                     "samuel", "--ideal", "x, y")
    assert code == 0 and text == ""
    assert json.loads(out.read_text())["samuel"] == "1"
    code2, text2 = run(capsys, "samuel", "--ideal", "x, y",
                       "--format", "csv")
    # samuel has no csv rendering; ValueError maps to usage error
    assert code2 == 2


def test_deterministic_output(capsys):
    _, a = run(capsys, "pipeline", "--map", "(x^2 - y^4, y^4)",
               "--ideal", "x, y", "--nmax", "4")
    _, b = run(capsys, "pipeline", "--map", "(x^2 - y^4, y^4)",
               "--ideal", "x, y", "--nmax", "4")
    assert a == b
