import random

import pytest
from hypothesis import given, settings, strategies as st

from subposet_lab import posets as P
from subposet_lab.counting import Budget, BudgetExceeded, contains_copy, count_copies, embeddings, is_free
from subposet_lab.families import SetFamily, full_level, level_union, power_set

from conftest import brute_count

SMALL = [P.chain(1), P.chain(2), P.chain(3), P.antichain(2), P.antichain(3), P.vee(2), P.wedge(2),
         P.vee(3), P.diamond(2), P.n_poset(), P.butterfly(), P.butterfly_plus(), P.butterfly_plusplus(),
         P.multilevel(1, 2, 2)]


def test_power_set_counts():
    b2 = power_set(2)
    assert count_copies(P.chain(2), b2) == 5
    assert count_copies(P.chain(3), b2) == 2
    assert count_copies(P.diamond(2), b2) == 1
    assert count_copies(P.antichain(2), b2) == 6


def test_counts_subfamilies_not_maps():
    # two equal-size middle sets under one top: a single copy of the wedge
    f = SetFamily.from_sets(2, [[1], [2], [1, 2]])
    assert count_copies(P.wedge(2), f) == 1
    assert len(embeddings(P.wedge(2), f)) == 2


def test_weak_containment():
    # a chain contains the antichain-free poset V2 weakly? No: V2 needs two sets above one
    chain = SetFamily.from_sets(3, [[], [1], [1, 2], [1, 2, 3]])
    assert count_copies(P.vee(2), chain) == 4
    assert count_copies(P.antichain(2), chain) == 6


def test_level_formulas():
    n = 5
    assert count_copies(P.chain(2), level_union(n, {1, 3})) == 5 * 6
    assert count_copies(P.antichain(2), full_level(n, 2)) == 45


@pytest.mark.parametrize("q", SMALL, ids=str)
def test_matches_brute_force_random(q):
    rng = random.Random(11)
    for _ in range(40):
        fam = SetFamily(4, tuple(m for m in range(16) if rng.random() < 0.45))
        assert count_copies(q, fam) == brute_count(q, fam)
        assert contains_copy(q, fam) == (brute_count(q, fam) > 0)


@settings(max_examples=60, deadline=None)
@given(st.sets(st.integers(0, 15), max_size=9), st.sampled_from(SMALL))
def test_matches_brute_force_hypothesis(masks, q):
    fam = SetFamily(4, tuple(masks))
    assert count_copies(q, fam) == brute_count(q, fam)


def test_is_free():
    mid = full_level(4, 2)
    assert is_free([P.chain(2)], mid)
    assert not is_free([P.chain(2), P.vee(2)], power_set(2))


def test_budget():
    with pytest.raises(BudgetExceeded):
        count_copies(P.antichain(3), full_level(6, 3), Budget(10))
