import io
import json

import pytest

from burnside_beta.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_marks_rows_are_gsets():
    code, out, _ = call("marks", "--group", "S2", "--json")
    assert code == 0
    assert json.loads(out)["marks_by_set"] == [[2, 0], [1, 1]]


def test_theta_prints_both_routes():
    code, out, _ = call("theta", "--group", "S2", "--op", "[S2/e]", "--elem", "t")
    assert code == 0
    assert out.count("(= 2t)") == 2


def test_power_of_three_points():
    code, out, _ = call("pow", "--group", "e", "--elem", "3", "--degree", "2")
    assert code == 0
    assert "(= 3t + 3)" in out


def test_power_of_minus_one():
    code, out, _ = call("pow", "--group", "e", "--elem", "-1", "--degree", "2")
    assert code == 0 and "(= t - 1)" in out


def test_gaussian_square():
    code, out, _ = call("mul", "--group", "S2", "--elem", "(1-i)/2*t + i", "--elem", "(1-i)/2*t + i")
    assert code == 0 and "(= t - 1)" in out


@pytest.mark.parametrize("n", [2, 3])
def test_obstruct_exits_zero(n):
    code, out, _ = call("obstruct", "zmod", str(n))
    assert code == 0
    assert "verdict: obstructed" in out


def test_restrict_and_deflate():
    assert "(= t + 1)" in call("restrict", "--group", "S3", "--from", "S2", "--elem", "[H2_1]")[1]
    assert "(= t)" in call("deflate", "--group", "S3", "--to", "S2", "--hom", "sign", "--elem", "[H1_1]")[1]


def test_checks_pass_with_exit_zero():
    assert call("check", "oracle", "--group", "S3")[0] == 0
    assert call("check", "morphism", "--group", "S2", "--from", "e")[0] == 0


def test_failing_check_exits_two():
    # the literal product axiom of the pairing fails, so the suite reports failures
    code, out, _ = call("check", "pairing")
    assert code == 2
    assert "v-external" in out


@pytest.mark.parametrize("argv", [["frobnicate"], ["marks"], ["marks", "--group", "T9"],
                                  ["mul", "--group", "S2", "--elem", "[H9_1]", "--elem", "t"],
                                  ["obstruct", "zmod"]])
def test_usage_errors(argv):
    code, _, err = call(*argv)
    assert code == 64
    assert err


def test_computation_errors_exit_one():
    code, _, err = call("mul", "--group", "S2", "--elem", "1/2", "--elem", "t", "--coeff", "Z")
    assert code == 1 and err


def test_cache_store_and_list(tmp_path):
    assert call("cache", "store", "--group", "S4", "--cache-dir", str(tmp_path))[0] == 0
    code, out, _ = call("cache", "list", "--cache-dir", str(tmp_path))
    assert code == 0 and ".btom" in out
