import math
from fractions import Fraction
from math import comb

import pytest

from subposet_lab import posets as P
from subposet_lab.counting import count_copies
from subposet_lab.families import level_union
from subposet_lab.formulas import (
    BoundPair,
    beta2_level,
    beta2_level_bound,
    c_p,
    chain_chain_value,
    compose_oplus_bound,
    compose_otimes_bound,
    diamond_bounds,
    easy_value,
    h,
    la_chain_chain,
    la_p3_fork,
    la_p4_diamond,
    multi1_value,
    n_two_level_bounds,
    numeric_constants,
    rtuples_bounds,
    sperner_erdos,
)
from subposet_lab.profiles import beta_level, count_multilevel_on_levels
from subposet_lab.search import la_exact, la_levels


def test_sperner_erdos_small():
    assert sperner_erdos(4, 1) == 6
    assert sperner_erdos(4, 2) == 10
    assert sperner_erdos(3, 4) == 8
    assert sperner_erdos(0, 1) == 1
    with pytest.raises(ValueError):
        sperner_erdos(2, 4)


def test_sperner_erdos_is_best_level_union():
    for n in range(0, 9):
        for k in range(1, n + 2):
            assert sperner_erdos(n, k) == la_levels(n, [P.chain(k + 1)], P.chain(1)).value


def test_chain_chain():
    assert la_chain_chain(4, 2).value == 12
    assert la_chain_chain(4, 2).arg == (1, 2)  # ties go to the smallest tuple
    assert la_chain_chain(3, 2).arg == (1, 2)
    assert la_chain_chain(6, 3).value == math.factorial(6) // 4  # gaps 1,1,2,2
    assert chain_chain_value(1, 2).value == 1
    assert chain_chain_value(0, 2).value == 0
    assert chain_chain_value(5, 0).value == 1


def test_chain_chain_matches_level_dp():
    for n in range(1, 10):
        for k in range(1, min(n, 4) + 1):
            v = la_chain_chain(n, k)
            assert count_multilevel_on_levels((1,) * k, n, v.arg) == v.value
            assert v.value == la_levels(n, [P.chain(k + 1)], P.chain(k)).value


def test_easy_values_against_search():
    for n in range(1, 5):
        assert easy_value("a", n) == la_exact(n, [P.vee(2)], P.chain(2)).value
        assert easy_value("a", n) == la_exact(n, [P.wedge(2)], P.chain(2)).value
        assert easy_value("b", n) == la_exact(n, [P.vee(2), P.wedge(2)], P.chain(2)).value
    for n in (2, 3):
        assert easy_value("c", n, 2) == la_exact(n, [P.butterfly()], P.diamond(2)).value
        assert easy_value("d", n, 2) == la_exact(n, [P.vee(2)], P.wedge(2)).value
    with pytest.raises(ValueError):
        easy_value("e", 3)


def test_fork_and_diamond_profiles():
    assert la_p3_fork(3, 2).value == 3
    assert la_p3_fork(3, 1).value == la_exact(3, [P.chain(3)], P.chain(2)).value
    assert la_exact(4, [P.chain(3)], P.wedge(2)).value == la_p3_fork(4, 2).value
    assert la_exact(4, [P.chain(4)], P.diamond(2)).value == la_p4_diamond(4, 2).value
    i, j = la_p4_diamond(10, 2).arg
    assert 0 <= i < j <= 10


def test_fork_argmax_ratio():
    for r in (1, 2, 3):
        i = la_p3_fork(400, r).arg[0]
        assert abs(i / 400 - 2 ** r / (2 ** r + 1)) <= 0.05


def test_diamond_bounds_bracket_search():
    for k, l in ((2, 1), (3, 1), (3, 2)):
        for n in range(k, 5):
            b = diamond_bounds(n, k, l)
            assert b.lower <= la_exact(n, [P.diamond(k)], P.diamond(l)).value <= b.upper


def test_bound_pair_validates():
    with pytest.raises(ValueError):
        BoundPair(3, 2)


def test_beta2_level():
    assert [beta2_level(n) for n in range(1, 9)] == [0, 1, 1, 1, 2, 2, 2, 3]
    for n in range(2, 9):
        best = max(beta_level(n, m, 2, 0) for m in range(n + 1))
        assert beta_level(n, beta2_level(n), 2, 0) == best


def test_beta2_level_bound_is_best_level():
    for n in range(2, 9):
        for i in range(n - 1):
            v = beta2_level_bound(n, i)
            assert v.value == max(beta_level(n, m, 2, i) for m in range(n + 1))


def test_rtuples():
    out = rtuples_bounds(4, 2)
    assert out["beta0"] == 6 and out["beta0_closed_form"] == 6
    assert out["gamma0n"] == 3 and out["gamma0n_kind"] == "sharp"
    assert rtuples_bounds(3, 2)["gamma0n"] == 1
    assert rtuples_bounds(5, 3)["gamma0n_kind"] == "polynomial"
    # the single-binomial form undercounts when n = 2 mod 3
    five = rtuples_bounds(5, 2)
    assert five["beta0"] == 15 and five["beta0_closed_form"] == Fraction(10)


def test_compose_bounds_dominate_search():
    p1, p2 = P.chain(1), P.chain(2)
    for n in range(1, 5):
        d = P.otimes(p1, 2, p1)
        assert compose_otimes_bound(n, p1, 2, p1) >= la_exact(n, [P.chain(4)], d).value
        v = P.oplus(p1, 2)
        assert compose_oplus_bound(n, p1, 2) >= la_exact(n, [P.chain(3)], v).value
        assert compose_otimes_bound(n, p1, 1, p1) == la_chain_chain(n, 3).value if n >= 3 else True
    with pytest.raises(ValueError):
        compose_oplus_bound(3, P.vee(2), 2)
    assert compose_oplus_bound(4, p2, 1) == max(comb(4, j) * chain_chain_value(j, 2).value for j in range(5))


def test_multi1_attained_on_levels():
    for n in range(2, 12):
        for mid in (1, 2, 3):
            for r, s in ((1, 1), (2, 1), (1, 2), (2, 2)):
                v = multi1_value(n, mid, r, s)
                if v.value:
                    parts = (r,) + (1,) * mid + (s,)
                    assert count_multilevel_on_levels(parts, n, v.levels) == v.value


def test_n_two_level_bounds():
    for n in range(2, 7):
        for i in range(n):
            for j in range(i + 1, n + 1):
                b = n_two_level_bounds(n, i, j)
                got = count_copies(P.n_poset(), level_union(n, (i, j)))
                assert got <= b.upper


def test_constants():
    k = numeric_constants()
    assert abs(7 * k["c0"] ** 3 - 10 * k["c0"] ** 2 + 5 * k["c0"] - 1) < 1e-9
    assert abs(k["c0"] - 0.69922) <= 1e-4
    assert abs(k["c"] - 2.9502) <= 1e-3
    assert abs(k["bb"] - 2.3219) <= 1e-3
    assert k["bb"] < k["c2"] == c_p(2)
    assert h(0) == h(1) == 0 and h(0.5) == 1


def test_invariants_large_n():
    for n in range(0, 101):
        assert sperner_erdos(n, 1) == comb(n, n // 2)
        if n:
            assert la_chain_chain(n, 1).value == sperner_erdos(n, 1)
        assert easy_value("c", n, 1) == easy_value("d", n, 1) == comb(n, n // 2)
    for n in range(2, 31):
        for k in range(2, 7):
            for l in range(1, k):
                if n >= k:
                    b = diamond_bounds(n, k, l)
                    assert b.lower <= b.upper
    for t in range(101):
        x = t / 100
        assert abs(h(x) - h(1 - x)) <= 1e-12


def test_argvalues_reproduce():
    v = la_p4_diamond(9, 2)
    i, j = v.arg
    assert v.value == comb(9, j) * comb(j, i) * comb(comb(j - i, (j - i) // 2), 2)
    v = la_p3_fork(9, 3)
    (i,) = v.arg
    assert v.value == comb(9, i) * comb(comb(i, i // 2), 3)
    v = multi1_value(8, 1, 2, 1)
    assert v.levels[0] == v.levels[1] // 2
