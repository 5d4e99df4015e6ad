import pytest

from focklab.checks import CheckResult
from focklab.suites import (
    SuiteReport,
    central_identity,
    fixed_point_certificates,
    morse_indices,
    run_suite,
)


def test_run_suite_unknown_name():
    with pytest.raises(ValueError):
        run_suite("everything")


def test_run_suite_identity_with_profile():
    report = run_suite("identity", order=4, betti=[1, 0, 1, 0, 1])
    assert report.all_passed
    assert report.params["profiles"] == [(1, 0, 1, 0, 1)]


def test_suite_report_aggregation():
    report = SuiteReport(
        "demo",
        {},
        [CheckResult("a", True), CheckResult("b", False, "boom")],
    )
    assert not report.all_passed
    blob = report.to_dict()
    assert blob["checks"][1] == {"name": "b", "passed": False, "detail": "boom"}


def test_individual_suites_pass_quickly():
    assert all(c.passed for c in central_identity(order=4))
    assert all(c.passed for c in fixed_point_certificates(nmax=3))
    assert all(c.passed for c in morse_indices(nmax=2))
