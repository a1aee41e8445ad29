import json

import pytest

from hassewitt import cli

SEXTIC_ARGS = ["plane-curve", "--p", "2", "--ext", "2",
               "--poly", "x^3*y^3 + x^3*z^3 + y^3*z^3 + lambda*z^6",
               "--param", "lambda=t"]


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_plane_curve_json(capsys):
    code, out, _ = run(capsys, SEXTIC_ARGS)
    assert code == 0
    rep = json.loads(out)
    assert (rep["p"], rep["k"], rep["degree"]) == (2, 2, 6)
    assert (rep["pa"], rep["sigma"], rep["a_number"]) == (10, 8, 2)
    assert len(rep["hasse_witt"]["matrix"]) == 10
    assert len(rep["images"]) == 10
    assert all(line.startswith("F(b") for line in rep["images"])


def test_plane_curve_with_cartier(capsys):
    code, out, _ = run(capsys, SEXTIC_ARGS + ["--cartier"])
    rep = json.loads(out)
    assert code == 0
    assert rep["cartier_rank"] == 8
    assert rep["rank_duality_holds"]


def test_cartier_command(capsys):
    code, out, _ = run(capsys, ["cartier", "--p", "7",
                                "--poly", "x^5 + y^3*z^2 + A*x*y*z^3 + B*x*z^4",
                                "--param", "A=2", "--param", "B=3"])
    rep = json.loads(out)
    assert code == 0
    assert rep["cartier_rank"] == rep["hasse_witt_rank"]
    assert rep["rank_duality_holds"]


def test_table_format(capsys):
    code, out, _ = run(capsys, SEXTIC_ARGS + ["--format", "table"])
    assert code == 0
    assert "sigma: 8" in out
    assert "F(b1)" in out


def test_fermat_command(capsys):
    code, out, _ = run(capsys, ["fermat", "--m", "3", "--n", "3", "--p", "2",
                                "--lambda", "t,t+1"])
    rep = json.loads(out)
    assert code == 0
    assert rep["a_number"] == 4 and rep["anum_formula"] == 4
    assert rep["genus"] == rep["h1_dim"] == 10
    assert rep["genericity"]["all_nonzero"]
    assert rep["S_cardinalities"]["0,0"] == 10
    assert rep["T_cardinalities"]["0,0"] == 4


def test_fermat_ext_autodetect(capsys):
    code, out, _ = run(capsys, ["fermat", "--m", "3", "--n", "2", "--p", "7",
                                "--lambda", "3"])
    rep = json.loads(out)
    assert code == 0 and rep["k"] == 1


def test_fermat_strict_mode_flags(capsys):
    argv = ["fermat", "--m", "3", "--n", "4", "--p", "2",
            "--lambda", "t,t+1,t^2+t", "--ext", "4", "--strict"]
    code, out, err = run(capsys, argv)
    assert code == cli.EXIT_DISCREPANCY
    rep = json.loads(out)
    assert rep["flags"]


def test_dims_command(capsys):
    code, out, _ = run(capsys, ["dims", "--m", "5", "--n", "3"])
    rep = json.loads(out)
    assert code == 0
    assert rep["genus"] == rep["h1_dim"] == rep["complete_intersection_h1"] == 76
    assert rep["dimensions_agree"] and rep["binom_identity_ok"]


def test_jacobian_command(capsys):
    code, out, _ = run(capsys, ["jacobian", "--pa", "10", "--sigma", "8",
                                "--anum", "2", "--sing", "ordinary:3:2"])
    rep = json.loads(out)
    assert code == 0
    assert rep["sigma_smooth"] == 4 and rep["ordinary"] is True


def test_jacobian_bad_sing(capsys):
    code, _, err = run(capsys, ["jacobian", "--pa", "10", "--sigma", "8",
                                "--anum", "2", "--sing", "weird:3"])
    assert code == cli.EXIT_VERIFY
    assert "sing" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, ["plane-curve", "--p", "2", "--poly", "x + "])
    assert code == cli.EXIT_PARSE
    assert "position 4" in err


def test_unbound_param_exit_code(capsys):
    code, _, err = run(capsys, ["plane-curve", "--p", "2",
                                "--poly", "x^3 + lambda*z^3"])
    assert code == cli.EXIT_PARSE


def test_usage_error_exit_code(capsys):
    code, _, err = run(capsys, ["plane-curve", "--p", "6", "--poly", "x^3"])
    assert code == cli.EXIT_USAGE


def test_unknown_flag_is_an_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["dims", "--m", "3", "--n", "3", "--wat"])
    assert exc.value.code == 2


def test_selftest_deterministic_and_honest(capsys):
    code1, out1, _ = run(capsys, ["selftest", "--format", "json"])
    code2, out2, _ = run(capsys, ["selftest", "--format", "json"])
    assert out1 == out2  # byte identical
    rep = json.loads(out1)
    by_name = {f["name"]: f for f in rep["fixtures"]}
    assert by_name["sextic_p2_lambda_t"]["ok"]
    assert by_name["fermat_33_basis_and_anumber"]["ok"]
    assert by_name["jacobian_sextic_chain"]["ok"]
    # the published p=7 image table cannot be reproduced from its own
    # curve (see the acceptance suite); the fixture reports the mismatch
    # and selftest exits nonzero rather than hiding it
    assert not by_name["quintic_p7_paper_table"]["ok"]
    assert code1 == code2 == cli.EXIT_VERIFY


def test_selftest_table_output(capsys):
    code, out, _ = run(capsys, ["selftest", "--format", "table"])
    assert "PASS sextic_p2_lambda_t" in out
    assert "FAIL quintic_p7_paper_table" in out
