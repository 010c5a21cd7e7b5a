import io
import json
import subprocess
import sys

import pytest

from monoqsp.cli import main
from monoqsp.qsp import PhaseSchedule, monomial_phases


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


# angles


def test_angles_csv_n3():
    code, out, _ = run("angles", "--degree", "3", "--format", "csv")
    assert code == 0
    assert PhaseSchedule.from_csv(out) == monomial_phases(3)
    rows = out.splitlines()[1:]
    assert [r.split(",")[0] for r in rows] == ["1", "2", "3"]
    assert float(rows[2].split(",")[1]) == 0.0


def test_angles_json_round_trip():
    code, out, _ = run("angles", "-n", "7")
    assert code == 0
    sched = PhaseSchedule.from_json(out)
    assert sched == monomial_phases(7)
    assert sched.to_json() + "\n" == out


def test_angles_n1_single_row():
    code, out, _ = run("angles", "--degree", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["index,angle", "1,0.0"]


@pytest.mark.parametrize("n", ["4", "0"])
def test_angles_invalid(n):
    code, out, err = run("angles", "--degree", n)
    assert code == 2 and out == ""
    assert "odd" in err


def test_usage_errors_exit_2():
    assert run()[0] == 2
    assert run("angles")[0] == 2
    assert run("angles", "-n", "3", "--format", "xml")[0] == 2
    assert run("verify-exact", "--min", "5", "--max", "3")[0] == 2


# verify-exact


def test_verify_exact_range():
    code, out, _ = run("verify-exact", "--min", "1", "--max", "21")
    recs = records(out)
    assert code == 0
    assert [r["degree"] for r in recs[:-1]] == list(range(1, 22, 2))
    assert all(r["verdict"] == "pass" for r in recs)
    assert recs[-1]["summary"] and recs[-1]["checked"] == 11


def test_verify_exact_even_fails_with_witness():
    code, out, _ = run("verify-exact", "--min", "2", "--max", "2", "--include-even")
    rec = records(out)[0]
    assert code == 1
    assert rec["verdict"] == "fail"
    assert rec["witness"] == "(0,2):[-1]; (2,0):[-1]"


def test_verify_exact_skips_even_by_default():
    code, out, _ = run("verify-exact", "--min", "2", "--max", "2")
    assert code == 0
    assert records(out)[-1]["checked"] == 0


def test_verify_exact_n51():
    code, out, _ = run("verify-exact", "--min", "51", "--max", "51")
    assert code == 0
    assert records(out)[0]["seconds"] < 10


# verify-numeric


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("-n", "3", "--samples", "1000", "--seed", "42", "--tol", "1e-10"), 0),
        (("-n", "101", "--samples", "200", "--seed", "7", "--tol", "1e-9"), 0),
        (("-n", "3", "--samples", "1000", "--seed", "42", "--tol", "1e-18"), 1),
    ],
)
def test_verify_numeric(argv, expected):
    code, out, _ = run("verify-numeric", *argv)
    rec = records(out)[0]
    assert code == expected
    assert rec["verdict"] == ("pass" if expected == 0 else "fail")
    assert "argmax_x" in rec and "max_error" in rec


def test_verify_numeric_even_is_usage_error():
    assert run("verify-numeric", "-n", "4")[0] == 2


def test_verify_numeric_stable_across_runs():
    argv = ("verify-numeric", "-n", "9", "--samples", "50", "--seed", "3")
    a, b = records(run(*argv)[1])[0], records(run(*argv)[1])[0]
    a.pop("seconds"), b.pop("seconds")
    assert a == b


# check-lemmas


def test_check_lemmas_n5():
    code, out, _ = run("check-lemmas", "-n", "5")
    recs = records(out)
    assert code == 0
    assert recs[-1]["a0_checked"] == 16
    assert all(r["verdict"] == "pass" for r in recs if "verdict" in r)


def test_check_lemmas_n3_orbit_sums():
    code, out, _ = run("check-lemmas", "-n", "3")
    recs = {r.get("check"): r for r in records(out)}
    assert code == 0
    assert recs["orbit_sum_vanishes"]["checked"] == 3
    assert recs["orbit_sum_vanishes"]["verdict"] == "pass"


def test_check_lemmas_n4_degeneracy():
    code, out, _ = run("check-lemmas", "-n", "4")
    recs = records(out)
    assert code == 0
    degenerate = [r for r in recs if r.get("heading") == "known even-n degeneracy"]
    assert len(degenerate) == 1
    assert "+-+-" in degenerate[0]["big_f_zero_witnesses"]


def test_check_lemmas_small_n():
    assert run("check-lemmas", "-n", "2")[0] == 2


def test_records_round_trip():
    _, out, _ = run("check-lemmas", "-n", "5")
    for line in out.splitlines():
        assert json.dumps(json.loads(line)) == line


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "monoqsp", "angles", "-n", "5", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert PhaseSchedule.from_csv(proc.stdout) == monomial_phases(5)
