from itertools import combinations
from math import comb

import pytest

from subposet_lab import posets as P
from subposet_lab.counting import count_copies
from subposet_lab.families import full_level, level_union, power_set
from subposet_lab.profiles import (
    beta,
    beta_level,
    chain_profile,
    count_multilevel_on_levels,
    gamma,
    gamma_kernel,
    gamma_level,
    maximize_level_weight,
    profile,
    union_profile,
)


def _brute_beta_gamma(fam, r):
    n, full = fam.n, (1 << fam.n) - 1
    b = [0] * n  # distinct sets meet in fewer than n points
    g = {}
    for combo in combinations(fam.members, r):
        inter, union = full, 0
        for s in combo:
            inter &= s
            union |= s
        b[inter.bit_count()] += 1
        key = (inter.bit_count(), union.bit_count())
        g[key] = g.get(key, 0) + 1
    return b, g


def test_profile():
    assert profile(power_set(3)) == [1, 3, 3, 1]
    assert profile(level_union(4, {1, 3})) == [0, 4, 0, 4, 0]


def test_chain_profile_matches_chain_count():
    f = level_union(4, {0, 1, 3, 4})
    cp = chain_profile(f, 3)
    assert sum(cp.values()) == count_copies(P.chain(3), f)
    assert cp[(1, 3, 4)] == 4 * 3


@pytest.mark.parametrize("r", [2, 3])
def test_beta_gamma_against_brute(r):
    for n in range(2, 6):
        for k in range(n + 1):
            fam = full_level(n, k)
            want_b, want_g = _brute_beta_gamma(fam, r)
            assert beta(fam, r) == want_b
            assert gamma(fam, r) == {key: v for key, v in want_g.items() if v}


@pytest.mark.parametrize("r", [2, 3, 4])
def test_level_formulas_against_brute(r):
    for n in range(1, 7):
        for m in range(n + 1):
            b, g = _brute_beta_gamma(full_level(n, m), r)
            for i in range(n):
                assert beta_level(n, m, r, i) == b[i]
                for j in range(max(i + 1, m), n + 1):
                    if i <= m:
                        assert gamma_level(n, m, r, i, j) == g.get((i, j), 0)


def test_gamma_kernel_paths_agree():
    # enumeration and inclusion-exclusion give the same numbers
    for u in range(1, 8):
        for k in range(u + 1):
            for r in (3, 4):
                assert gamma_kernel(u, k, r, enumerate_limit=10**9) == gamma_kernel(u, k, r, enumerate_limit=0)


def test_beta_level_r2_closed_form():
    for n in range(2, 10):
        for k in range(n + 1):
            assert beta_level(n, k, 2, 0) == comb(n, k) * comb(n - k, k) // 2


def test_union_profile():
    up = union_profile(4, 2, 2)
    assert up == {3: 12, 4: 3}


def test_maximize_level_weight_middle():
    levels, value = maximize_level_weight(5, 1, 1, lambda s: 1)
    assert value == comb(5, 2) and levels in ((2,), (3,))


def test_multilevel_dp_against_engine():
    for parts in [(1, 2), (2, 1), (2, 2), (1, 1, 1), (1, 2, 1), (3, 1)]:
        q = P.multilevel(*parts)
        for n in range(len(parts) - 1, 6):
            for levels in combinations(range(n + 1), len(parts)):
                assert count_multilevel_on_levels(parts, n, levels) == count_copies(q, level_union(n, levels))


def test_multilevel_dp_chain_count():
    # chains through levels 0 < 2 < 4 of [4]: choose a 2-set, then the top is forced
    assert count_multilevel_on_levels((1, 1, 1), 4, (0, 2, 4)) == 6
