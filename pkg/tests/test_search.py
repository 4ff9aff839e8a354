from fractions import Fraction
from math import comb

import pytest

from subposet_lab import posets as P
from subposet_lab.counting import count_copies, is_free
from subposet_lab.families import full_level
from subposet_lab.search import (
    INFINITY,
    antichain_max_beta,
    antichain_max_gamma,
    conjecture_ratio,
    iter_antichains,
    la_exact,
    la_levels,
)

from conftest import brute_la

CASES = [
    ([P.chain(2)], P.chain(1)),
    ([P.vee(2)], P.chain(2)),
    ([P.chain(3)], P.chain(2)),
    ([P.chain(3)], P.wedge(2)),
    ([P.butterfly()], P.chain(2)),
    ([P.diamond(2)], P.chain(3)),
    ([P.vee(2), P.wedge(2)], P.chain(2)),
    ([P.n_poset()], P.antichain(2)),
]


@pytest.mark.parametrize("forbidden, q", CASES, ids=lambda x: str(x))
def test_exact_matches_brute_force(forbidden, q):
    for n in range(0, 3):
        assert la_exact(n, forbidden, q).value == brute_la(n, forbidden, q)
    assert la_exact(3, forbidden, q).value == brute_la(3, forbidden, q)


def test_exclude_extremes_matches_brute_force():
    for forbidden, q in CASES[:4]:
        assert la_exact(3, forbidden, q, exclude_empty_and_full=True).value == brute_la(3, forbidden, q, True)


def test_known_values():
    assert la_exact(3, [P.vee(2)], P.chain(2)).value == 3
    assert la_exact(4, [P.chain(3)], P.chain(2)).value == 12
    assert la_exact(4, [P.chain(2)], P.chain(1)).value == 6


def test_witnesses_are_valid():
    res = la_exact(3, [P.chain(3)], P.chain(2), witnesses=3)
    assert res.exact and 1 <= len(res.witnesses) <= 3
    for fam in res.witnesses:
        assert is_free([P.chain(3)], fam)
        assert count_copies(P.chain(2), fam) == res.value
    # first witness is the lexicographically smallest optimal family
    assert res.witnesses[0].members == tuple(sorted(res.witnesses[0].members))


def test_exact_budget_and_range():
    res = la_exact(5, [P.chain(3)], P.chain(2), budget=20)
    assert not res.exact
    with pytest.raises(ValueError):
        la_exact(6, [P.chain(2)], P.chain(1))
    with pytest.raises(ValueError):
        la_exact(3, [], P.chain(1))


def test_levels():
    res = la_levels(6, [P.chain(3)], P.chain(2))
    assert res.value == 90 and res.levels == (2, 4)
    assert la_levels(4, [P.diamond(2)], P.chain(3)).value == 0
    assert la_levels(20, [P.chain(2)], P.chain(1)).value == comb(20, 10)
    assert la_levels(4, [P.butterfly()], P.chain(2)).value <= la_exact(4, [P.butterfly()], P.chain(2)).value


def test_iter_antichains():
    # Dedekind numbers count antichains of 2^[n]
    assert [sum(1 for _ in iter_antichains(n)) for n in range(4)] == [2, 3, 6, 20]
    assert sum(1 for _ in iter_antichains(4)) == 168


def test_antichain_max():
    res = antichain_max_beta(3, 2)
    assert res.value == 3 and res.witnesses[0] == full_level(3, 1)
    assert antichain_max_beta(4, 2).value == 6
    assert antichain_max_gamma(3, 2).value == 1
    assert antichain_max_gamma(4, 2).value == 3


def test_ratio():
    assert conjecture_ratio(3, [P.vee(2)], P.chain(2)) == 1
    assert conjecture_ratio(4, [P.diamond(2)], P.chain(3)) == INFINITY
    assert isinstance(conjecture_ratio(3, [P.chain(3)], P.chain(2)), Fraction)
