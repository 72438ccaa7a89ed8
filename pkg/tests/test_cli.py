import csv
import io
import json
from math import gcd

import pytest

from dedekind_lab.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from dedekind_lab.core import parse_rational


def run_cli(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out


def test_eval_s_prints_known_value(capsys):
    status, out = run_cli(capsys, "eval-s", "37", "40")
    assert status == EXIT_OK
    assert out == "-13/16\n"


def test_eval_s_fast_method(capsys):
    status, out = run_cli(capsys, "eval-s", "37", "40", "--method", "fast")
    assert status == EXIT_OK
    assert out == "-13/16\n"


def test_eval_r_prints_known_value(capsys):
    status, out = run_cli(capsys, "eval-r", "6", "3", "23")
    assert status == EXIT_OK
    assert out == "-3/92\n"


def test_eval_s_rejects_non_coprime(capsys):
    status, out = run_cli(capsys, "eval-s", "5", "10")
    assert status == EXIT_FAILURE
    assert out == ""


def test_wrong_arity_is_usage_error(capsys):
    status, _ = run_cli(capsys, "eval-s", "5")
    assert status == EXIT_USAGE


def test_unknown_subcommand_is_usage_error(capsys):
    status, _ = run_cli(capsys, "frobnicate")
    assert status == EXIT_USAGE


def test_eval_s_csv_and_json(capsys):
    status, out = run_cli(capsys, "--format", "csv", "eval-s", "33", "40")
    assert status == EXIT_OK
    assert out == "a,b,value\n33,40,-5/16\n"

    status, out = run_cli(capsys, "eval-s", "33", "40", "--format", "json")
    assert status == EXIT_OK
    assert json.loads(out) == [{"a": 33, "b": 40, "value": "-5/16"}]


def test_recip_check(capsys):
    status, out = run_cli(capsys, "recip-check", "37", "40", "--format", "csv")
    assert status == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0]["lhs"] == rows[0]["rhs"]
    assert rows[0]["equal"] == "true"


def test_recip_check_r(capsys):
    status, out = run_cli(capsys, "recip-check-r", "6", "3", "23", "--format", "json")
    assert status == EXIT_OK
    assert json.loads(out)[0]["equal"] is True


def test_recip_check_r_outside_range(capsys):
    status, _ = run_cli(capsys, "recip-check-r", "0", "3", "23")
    assert status == EXIT_FAILURE


def test_classes(capsys):
    status, out = run_cli(capsys, "classes", "5", "--format", "csv")
    assert status == EXIT_OK
    assert out == "b,value,size,members\n5,-1/5,1,4\n5,0,2,2 3\n5,1/5,1,1\n"


def test_count(capsys):
    status, out = run_cli(capsys, "count", "40", "-13/16", "--format", "json")
    assert status == EXIT_OK
    row = json.loads(out)[0]
    assert row["c"] == "-13/16"
    assert row["count"] >= 1


def test_count_accepts_sign_on_both_parts(capsys):
    status, out = run_cli(capsys, "count", "40", "-13/-16", "--format", "json")
    assert status == EXIT_OK
    row = json.loads(out)[0]
    assert row["c"] == "13/16"


def test_count_rejects_malformed_value(capsys):
    status, _ = run_cli(capsys, "count", "40", "abc")
    assert status == EXIT_USAGE


def test_verify_fixtures(capsys):
    status, out = run_cli(capsys, "verify", "fixtures", "--format", "csv")
    assert status == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 2
    assert all(row["holds"] == "true" for row in rows)


def test_verify_thm1(capsys):
    status, out = run_cli(capsys, "verify", "thm1", "--b-max", "40", "--format", "csv")
    assert status == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "b,a1,a2,s1,s2,sums_equal,divisible,verdict"
    assert all(line.endswith(",consistent") for line in lines[1:])


def test_verify_thm3(capsys):
    status, out = run_cli(capsys, "verify", "thm3", "--b-max", "25", "--n-max", "6", "--format", "csv")
    assert status == EXIT_OK
    assert out.splitlines()[0] == "n,b,a1,a2,s1,s2,sums_equal,divisible,verdict"


def test_verify_requires_bounds(capsys):
    status, _ = run_cli(capsys, "verify", "thm3", "--b-max", "25")
    assert status == EXIT_USAGE


def test_verify_corollaries(capsys):
    status, out = run_cli(capsys, "verify", "cor1", "--p-max", "30", "--format", "json")
    assert status == EXIT_OK
    rows = json.loads(out)
    assert [row["p"] for row in rows] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

    status, out = run_cli(capsys, "verify", "cor2", "--p-max", "23", "--n-max", "6", "--format", "json")
    assert status == EXIT_OK
    rows = json.loads(out)
    assert all(row["holds"] for row in rows)
    assert any(row["p"] == 23 and row["n"] == 6 and row["converse_failures"] > 0 for row in rows)


def test_verify_identity_sweeps(capsys):
    for argv in (
        ("verify", "recip", "--b-max", "25"),
        ("verify", "recip-r", "--b-max", "8"),
        ("verify", "integrality", "--b-max", "25", "--n-max", "4"),
    ):
        status, out = run_cli(capsys, *argv, "--format", "json")
        assert status == EXIT_OK
        assert json.loads(out)[0]["failures"] == 0


def test_census_output_is_byte_identical(capsys):
    argv = ("census", "--b-min", "2", "--b-max", "100", "--format", "csv")
    status, first = run_cli(capsys, *argv)
    assert status == EXIT_OK
    status, second = run_cli(capsys, *argv)
    assert first == second

    rows = list(csv.DictReader(io.StringIO(first)))
    assert len(rows) == 99
    for row in rows:
        b = int(row["b"])
        assert int(row["phi"]) == sum(1 for a in range(1, b) if gcd(a, b) == 1)


def test_census_requires_ordered_range(capsys):
    status, _ = run_cli(capsys, "census", "--b-min", "9", "--b-max", "3")
    assert status == EXIT_USAGE


def test_bench(capsys):
    argv = ("bench", "--bits", "12", "--trials", "5", "--seed", "7", "--format", "json")
    status, out = run_cli(capsys, *argv)
    assert status == EXIT_OK
    naive, fast = json.loads(out)
    assert naive["checksum"] == fast["checksum"]
    assert parse_rational(fast["checksum"]) == parse_rational(naive["checksum"])


def test_bench_rejects_zero_trials(capsys):
    status, _ = run_cli(capsys, "bench", "--bits", "12", "--trials", "0", "--seed", "1")
    assert status == EXIT_USAGE


def test_table_format_renders(capsys):
    status, out = run_cli(capsys, "classes", "7")
    assert status == EXIT_OK
    assert "members" in out
