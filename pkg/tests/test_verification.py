# Copyright (c) 2026 extended-oloid contributors
# SPDX-License-Identifier: MIT

# @file    test_verification.py
# @author  extended-oloid contributors
# @date    2026-03-21

import math

import pytest

from extended_oloid.geometry import verification
from extended_oloid.geometry.common import DomainError


@pytest.mark.parametrize("name", list(verification.SUITES))
def test_suite_passes(name):
    checks = verification.run_suite(name)
    assert checks
    failed = [c for c in checks if not c.passed]
    assert not failed, failed


def test_check_passed():
    assert verification.Check("s", "n", 1e-12, 1e-10).passed
    assert not verification.Check("s", "n", math.nan, 1e-10).passed


def test_run_suite_turns_errors_into_failures(monkeypatch):
    def broken(tol):
        raise DomainError("out of range")
    monkeypatch.setitem(verification.SUITES, "golden", broken)
    (check,) = verification.run_suite("golden")
    assert not check.passed
    assert "out of range" in check.name


def test_run_suite_survives_unexpected_errors(monkeypatch):
    def broken(tol):
        raise TypeError("unsupported operand")
    monkeypatch.setitem(verification.SUITES, "golden", broken)
    (check,) = verification.run_suite("golden")
    assert not check.passed
    assert "TypeError" in check.name
    failed = [c.suite for c in verification.run_all() if not c.passed]
    assert failed == ["golden"]


def test_unknown_suite():
    with pytest.raises(KeyError):
        verification.run_suite("everything")


def test_report():
    checks = [verification.Check("a", "x", 0., 1.), verification.Check("a", "y", 2., 1.)]
    df = verification.report(checks)
    assert list(df.columns) == ["suite", "name", "residual", "limit", "passed"]
    assert df["passed"].tolist() == [True, False]
