"""Acceptance criteria, one test per criterion.

Each test prints a PASS/FAIL line (visible without ``-s``) and then asserts.
"""

import pytest

from mustrata.acceptance import CRITERIA


@pytest.mark.parametrize("check", CRITERIA, ids=[f.__name__ for f in CRITERIA])
def test_criterion(check, capsys):
    result = check()
    with capsys.disabled():
        status = "PASS" if result.ok else "FAIL"
        label = f"criterion {result.ident}" if result.ident.isdigit() else "examples"
        print(f"\n[{status}] {label}: {result.title}: {result.detail}")
    assert result.ok, result.detail
