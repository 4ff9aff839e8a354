"""The twelve acceptance criteria, one test each.

Each test prints a single PASS/FAIL line (visible with ``pytest -s`` or in
the summary of ``pytest -v -rA``).
"""

import pytest

from subposet_lab.verify import SUITES, run_suite

CRITERIA = [
    "sperner-erdos",
    "chain-in-chain",
    "easy",
    "profile-finite",
    "diamond",
    "antichain-profile",
    "level-weight",
    "engine-oracle",
    "level-dp",
    "constants",
    "d2-collapse",
    "bplusplus",
]


def test_every_suite_listed():
    assert sorted(CRITERIA) == sorted(SUITES)


@pytest.mark.parametrize("name", CRITERIA)
def test_criterion(name):
    result = run_suite(name)
    print(result.line())
    assert result.passed, result.line()
