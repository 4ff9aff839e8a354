import pytest

from subposet_lab import posets as P
from subposet_lab.posets import Poset


def test_named_shapes():
    assert P.chain(3).relations() == {(0, 1), (1, 2), (0, 2)}
    assert P.antichain(4).relations() == set()
    assert P.vee(2).relations() == {(0, 1), (0, 2)}
    assert P.wedge(2).relations() == {(0, 2), (1, 2)}
    assert P.n_poset().relations() == {(0, 2), (1, 2), (1, 3)}
    assert len(P.butterfly().relations()) == 4
    assert P.diamond(2).m == 4 and P.height(P.diamond(2)) == 3


def test_butterfly_variants_are_closed():
    assert (1, 4) in P.butterfly_plus().relations()
    bpp = P.butterfly_plusplus().relations()
    assert (0, 4) in bpp and (1, 4) in bpp
    assert not P.is_isomorphic(P.butterfly_plus(), P.butterfly_plusplus())


def test_multilevel_identities():
    assert P.is_isomorphic(P.vee(3), P.multilevel(1, 3))
    assert P.is_isomorphic(P.wedge(2), P.multilevel(2, 1))
    assert P.is_isomorphic(P.butterfly(), P.multilevel(2, 2))
    assert P.is_isomorphic(P.diamond(3), P.multilevel(1, 3, 1))
    assert P.multilevel_parts(P.diamond(2)) == (1, 2, 1)
    assert P.multilevel_parts(P.n_poset()) is None


def test_otimes_and_oplus():
    d = P.otimes(P.chain(1), 2, P.chain(1))
    assert P.is_isomorphic(d, P.diamond(2))
    assert d.render() == "otimes(P1,2,P1)"
    assert P.height(P.otimes(P.chain(2), 3, P.n_poset())) == 2 + 1 + 2
    v = P.oplus(P.chain(1), 3)
    assert P.is_isomorphic(v, P.vee(3))
    assert P.oplus(P.empty(), 2).relations() == set()


def test_invalid_relations_rejected():
    with pytest.raises(ValueError):
        Poset(2, (0b10, 0b01))  # cycle
    with pytest.raises(ValueError):
        Poset(1, (0b1,))  # reflexive
    with pytest.raises(ValueError):
        Poset(3, (0b010, 0b100, 0))  # not closed
    with pytest.raises(ValueError):
        P.chain(0)


def test_automorphisms():
    assert P.automorphism_count(P.butterfly()) == 4
    assert P.automorphism_count(P.antichain(3)) == 6
    assert P.automorphism_count(P.n_poset()) == 1


def test_named_lookup():
    assert P.named("P", 3) == P.chain(3)
    assert P.named("Bplusplus") == P.butterfly_plusplus()
    with pytest.raises(ValueError):
        P.named("X")


def test_equality_ignores_label():
    assert Poset.from_relations(2, [(0, 1)]) == P.chain(2)
