from fractions import Fraction

import pytest

from supercong import (
    Status,
    SweepReport,
    run_check,
    status_summary,
    summarise,
    sweep,
    verify_all,
)
from supercong.src.data_loader import get_check_ids
from supercong.src.hypersum import CheckResult
from supercong.src.suite import OracleMismatch, half_full_sweep


def test_skip_below_the_prime_bound():
    result = run_check("st2", 5)
    assert result.passed is None
    assert result.skipped == "p>5"


def test_skip_reason_names_the_largest_excluded_prime():
    assert run_check("st1", 3).skipped == "p>3"
    assert run_check("J2", 3).skipped == "p>3"


def test_skip_above_the_sampling_bound():
    result = run_check("M1[2]", 211)
    assert result.skipped == "sampled for p<=200"


def test_oracle_route_when_z_is_not_a_unit():
    result = run_check("3F2-zu5", 3)
    assert result.route == "oracle"
    assert result.passed
    assert result.lhs == 9


def test_lemma_check_result():
    result = run_check("st5", 7)
    assert result.passed
    assert result.route == "modular"
    assert result.modulus == "7^2"


def test_full_range_sweep():
    report = sweep("J1a", 3, 100)
    assert report.n_attempted == 24
    assert report.n_pass == 24
    assert report.ok
    assert report.status == Status.PROVEN
    assert [r.p for r in report.results][:3] == [3, 5, 7]


def test_parallel_sweep_matches_serial():
    serial = sweep("J4", 3, 60)
    parallel = sweep("J4", 3, 60, parallel=True, num_thread=2)
    assert [r.to_dict() for r in parallel.results] == [
        r.to_dict() for r in serial.results
    ]


def test_empty_range():
    report = sweep("J1", 90, 96)
    assert report.n_attempted == 0
    assert report.ok
    assert report.to_dataframe().empty


def test_oracle_mismatch_is_raised(mocker):
    mocker.patch("supercong.src.suite.sum_exact", return_value=Fraction(0))
    with pytest.raises(OracleMismatch):
        run_check("J1a", 5)


def test_double_entry_only_for_small_primes(mocker):
    spy = mocker.patch("supercong.src.suite.sum_exact", return_value=Fraction(0))
    assert run_check("J1a", 37).passed
    spy.assert_not_called()


def test_sweep_report_counts():
    report = sweep("st2", 3, 20)
    assert report.counts == {"pass": 5, "fail": 0, "skipped": 2}
    df = report.to_dataframe()
    assert list(df["p"]) == [3, 5, 7, 11, 13, 17, 19]
    assert "5 pass, 0 fail, 2 skipped" in str(report)


def test_verbose_sweep_logs_to_stderr(capsys):
    sweep("J1", 3, 11, verbose=True)
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err.startswith("[SWEEP] J1 [PROVEN]")


def test_verify_all_needs_a_prime():
    with pytest.raises(ValueError):
        verify_all(2)


def test_summaries():
    reports = verify_all(13, check_ids=["J1a", "J2", "st4"])
    df = summarise(reports)
    assert list(df["check"]) == ["J1a", "J2", "st4"]
    assert list(df["kind"]) == ["hypergeometric", "hypergeometric", "lemma"]
    assert list(df["fail"]) == [0, 0, 0]
    lines = status_summary(reports)
    assert lines[0] == "PROVEN: 3 checks, 14 passes, failing: none"
    assert lines[1].startswith("CONJECTURAL: 0 checks")


def test_failing_check_is_named():
    failing = SweepReport("J2", 3, 3, Status.PROVEN)
    failing.results.append(CheckResult("J2", 5, 3, 1, 2, False))
    assert not failing.ok
    assert status_summary([failing])[0].endswith("failing: ['J2']")


def test_every_check_matches_the_exact_sum_up_to_31():
    # every prime here is also recomputed in exact rationals
    reports = verify_all(31)
    assert [r.check_id for r in reports] == get_check_ids()
    assert all(r.ok for r in reports), [str(r) for r in reports if not r.ok]


def test_half_and_full_ranges_agree():
    reports = half_full_sweep(3, 200)
    assert {r.check_id for r in reports} == {
        "half-full[J1]",
        "half-full[J2]",
        "half-full[3F2-zu3-half]",
        "half-full[3F2-zu2-half]",
        "half-full[5F4-zu2-half]",
    }
    for report in reports:
        assert report.kind == "half-full"
        assert report.ok, str(report)
        assert report.n_pass > 0


def test_verify_all_can_append_half_full_reports():
    reports = verify_all(13, check_ids=["J1"], half_full=True)
    assert len(reports) == 6
    assert reports[0].kind == "hypergeometric"
    assert all(r.kind == "half-full" for r in reports[1:])
