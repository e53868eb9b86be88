import pytest
from hypothesis import given, strategies as st

from crystalkit import multisegment as ms
from crystalkit.core import UsageError, ValidationError
from crystalkit.multisegment import Multisegment
from crystalkit.tableau import (
    Tableau,
    check_partition,
    embed,
    enumerate_ssyt,
    f_closure,
    highest_weight_tableau,
    partition_weight,
    tab_bracket_string,
    tab_e,
    tab_eps,
    tab_f,
    tab_pairing,
)

from . import oracles

SAMPLE_YT = Tableau(4, [[0, 0, 0, 1, 1, 2, 2, 3, 4], [1, 1, 2, 2, 3, 3, 4], [2, 3, 4], [4]])
SAMPLE_TOP = Tableau(3, [[0, 1, 2, 3], [1, 2, 3], [2, 3]])
SAMPLE_BOTTOM = Tableau(3, [[0, 1, 2, 2], [1, 2, 3], [2, 3]])


def test_sample_bracket_string():
    s = tab_bracket_string(SAMPLE_YT, 2)
    assert s.symbols() == ") ( ) ( ("
    assert tab_eps(SAMPLE_YT, 2) == 2


def test_sample_f_changes_rightmost_one_in_second_row():
    out = tab_f(SAMPLE_YT, 2)
    assert out.rows[1] == (1, 2, 2, 2, 3, 3, 4)
    assert out.rows[0] == SAMPLE_YT.rows[0] and out.rows[2:] == SAMPLE_YT.rows[2:]


def test_embedding_sample():
    top = embed(SAMPLE_TOP)
    assert top == Multisegment(3, [(3, 3), (2, 2), (1, 1), (2, 3), (1, 2), (1, 3)])
    assert tab_e(SAMPLE_TOP, 3) == SAMPLE_BOTTOM
    assert ms.e(top, 3) == embed(SAMPLE_BOTTOM)
    assert embed(SAMPLE_BOTTOM) == Multisegment(3, [(3, 3), (2, 2), (1, 1), (2, 3), (1, 2), (1, 2)])


def test_sample_multisegment_bracket_string():
    s = ms.build_bracket_string(embed(SAMPLE_TOP), 3)
    assert [(b.site, b.symbol) for b in s.entries] == [
        ((3, 3), "("), ((2, 2), ")"), ((2, 3), "("), ((1, 2), ")"), ((1, 3), "(")
    ]


def test_tableau_validation():
    with pytest.raises(ValidationError):
        Tableau(2, [[0, 3]])
    with pytest.raises(ValidationError):
        Tableau(2, [[1, 0]])
    with pytest.raises(ValidationError):
        Tableau(2, [[0, 1], [0, 2]])
    with pytest.raises(UsageError):
        check_partition((1, 1, 1), 2)
    with pytest.raises(ValidationError):
        check_partition((1, 2), 3)


def test_highest_weight_and_pairing():
    hw = highest_weight_tableau((2, 1), 2)
    assert hw.rows == ((0, 0), (1,))
    assert all(tab_e(hw, i) is None for i in (1, 2))
    assert [tab_pairing(hw, i) for i in (1, 2)] == [1, 1]


def test_partition_weight():
    assert partition_weight((9, 7, 3, 1), 6) == (2, 4, 2, 1, 0, 0)


def test_weak_morphism_witness():
    hw = highest_weight_tableau((1,), 2)
    assert tab_f(hw, 2) is None
    assert ms.f(embed(hw), 2) is not None


SHAPES = [((1,), 2), ((2,), 2), ((1, 1), 2), ((2, 1), 2), ((2, 2), 2), ((3, 1), 2), ((1,), 3), ((2, 1), 3)]


@pytest.mark.parametrize("parts,n", SHAPES)
def test_counts_match_hook_content_and_brute_force(parts, n):
    tabs = enumerate_ssyt(parts, n)
    assert len(tabs) == oracles.hook_content(parts, n) == oracles.brute_ssyt(parts, n)
    assert set(tabs) == f_closure(parts, n)


def test_hook_content_example():
    assert len(enumerate_ssyt((2, 1), 2)) == 8


@pytest.mark.parametrize("parts,n", SHAPES)
def test_brackets_match_oracle(parts, n):
    for b in enumerate_ssyt(parts, n):
        for i in range(1, n + 1):
            assert tab_bracket_string(b, i).symbols().split() == oracles.tableau_brackets(
                [list(r) for r in b.rows], i
            )


@pytest.mark.parametrize("parts,n", SHAPES)
def test_embedding_commutes_with_e(parts, n):
    for b in enumerate_ssyt(parts, n):
        for i in range(1, n + 1):
            lhs = tab_e(b, i)
            rhs = ms.e(embed(b), i)
            assert (lhs is None) == (rhs is None)
            if lhs is not None:
                assert embed(lhs) == rhs
            assert tab_eps(b, i) == ms.eps(embed(b), i)


@given(st.sampled_from(SHAPES), st.data())
def test_e_f_inverse(shape, data):
    parts, n = shape
    b = data.draw(st.sampled_from(enumerate_ssyt(parts, n)))
    i = data.draw(st.integers(1, n))
    up = tab_f(b, i)
    if up is not None:
        assert tab_e(up, i) == b
    down = tab_e(b, i)
    if down is not None:
        assert tab_f(down, i) == b
