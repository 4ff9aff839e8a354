import pytest

from subposet_lab import posets as P
from subposet_lab.dsl import PosetSyntaxError, parse_poset


@pytest.mark.parametrize("text", [
    "P1", "P4", "AC3", "V2", "A5", "D3", "N", "B", "B+", "B++", "K(1,2,1)",
    "otimes(P1,2,N)", "oplus(K(2,2),1)", "otimes(0,3,P2)", "oplus(0,2)",
])
def test_round_trip(text):
    p = parse_poset(text)
    assert p.render() == text
    assert parse_poset(p.render()) == p


def test_whitespace_ignored():
    assert parse_poset(" K( 1 , 2 ) ") == P.multilevel(1, 2)


def test_prefix_disambiguation():
    assert parse_poset("A2") == P.wedge(2)
    assert parse_poset("AC2") == P.antichain(2)
    assert parse_poset("B++") == P.butterfly_plusplus()


@pytest.mark.parametrize("text, pos", [
    ("", 0), ("P0", 1), ("Q3", 0), ("P3x", 2), ("K(1,", 4), ("0", 0), ("otimes(P1,0,P1)", 10),
])
def test_errors_report_position(text, pos):
    with pytest.raises(PosetSyntaxError) as info:
        parse_poset(text)
    assert info.value.pos == pos
