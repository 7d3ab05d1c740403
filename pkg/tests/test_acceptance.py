"""Acceptance gate: one test per top-level criterion.

Each test prints a single PASS/FAIL line (visible with ``pytest -v -s`` or in
the captured output on failure) and asserts the criterion's verdict.
"""

import sys

import pytest

from hcfam.acceptance import ALL_CRITERIA


@pytest.mark.parametrize(
    "criterion", ALL_CRITERIA, ids=[f"criterion_{i}" for i in range(1, len(ALL_CRITERIA) + 1)]
)
def test_criterion(criterion):
    name, ok, details = criterion()
    line = f"{'PASS' if ok else 'FAIL'}  {name}: {details}"
    print(line, file=sys.stderr)
    assert ok, line
