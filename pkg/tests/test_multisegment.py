import pytest
from hypothesis import given, settings

from crystalkit import multisegment as ms
from crystalkit.core import IntegrityError, UsageError, ValidationError
from crystalkit.multisegment import EXAMPLE_RANK5, Multisegment

from . import oracles
from .strategies import ms_and_index, multisegments


def segs(M):
    return sorted(M)


def test_example_segments():
    drawn = [(1, 1), (2, 2), (2, 2), (3, 3), (1, 2), (1, 2), (2, 3), (3, 4), (3, 4), (2, 4), (2, 5)]
    assert EXAMPLE_RANK5 == Multisegment(5, drawn)
    assert EXAMPLE_RANK5.size == 21


def test_constructor_validation():
    with pytest.raises(ValidationError):
        Multisegment(2, [(1, 3)])
    with pytest.raises(ValidationError):
        Multisegment(2, [(2, 1)])
    with pytest.raises(ValidationError):
        Multisegment(2, {(1, 1): -1})
    assert Multisegment(2, {(1, 1): 0}) == Multisegment(2)


def test_text_form():
    assert Multisegment(3, [(2, 3), (1, 1), (1, 1)]).text() == "[1,1]^2 [2,3]"
    assert Multisegment(3).text() == "∅"


def test_bracket_string_normal_on_example():
    s = ms.build_bracket_string(EXAMPLE_RANK5, 1)
    assert [(b.site, b.symbol) for b in s.entries] == [((1, 1), "(")]


def test_bracket_string_star_on_example():
    s = ms.build_bracket_string(EXAMPLE_RANK5, 1, ms.STAR)
    opens = sorted(b.site for b in s.entries if b.symbol == "(")
    closes = sorted(b.site for b in s.entries if b.symbol == ")")
    assert opens == [(1, 1), (1, 2), (1, 2)]
    assert closes == [(2, 2), (2, 2), (2, 3), (2, 4), (2, 5)]
    assert s.count(")") == 2 and s.count("(") == 0
    # left to right by height, then start
    assert s.symbols() == "( ) ) ( ( ) ) )"


def test_bracket_string_empty():
    for kind in (ms.NORMAL, ms.STAR):
        assert len(ms.build_bracket_string(Multisegment(3), 2, kind)) == 0


def test_bracket_string_bad_index():
    with pytest.raises(UsageError):
        ms.build_bracket_string(Multisegment(3), 4)


def test_f_examples():
    assert ms.f(Multisegment(3), 2) == Multisegment(3, [(2, 2)])
    twice = ms.f(ms.f(EXAMPLE_RANK5, 1), 1)
    assert twice == EXAMPLE_RANK5.replace(add=(1, 1)).replace(add=(1, 1))
    assert ms.f(Multisegment(2, [(1, 1)]), 2) == Multisegment(2, [(1, 2)])


def test_e_examples():
    assert ms.e(Multisegment(3), 1) is None
    assert ms.e(Multisegment(3, [(1, 3), (2, 2)]), 3) == Multisegment(3, [(1, 2), (2, 2)])


def test_star_examples():
    assert ms.f_star(Multisegment(4), 3) == Multisegment(4, [(3, 3)])
    top = ms.sigma_chain_trace(EXAMPLE_RANK5).stages[-1]
    step = ms.e_star(ms.e_star(top, 2), 2)
    assert top.mult(2, 5) == 2 and step.mult(2, 5) == 0 and step.mult(3, 5) == top.mult(3, 5) + 2


def test_eps_examples():
    assert ms.eps(Multisegment(4), 2) == 0
    assert ms.eps(EXAMPLE_RANK5, 1) == 1
    assert ms.eps_star(EXAMPLE_RANK5, 1) == 0
    assert ms.eps(Multisegment(2, {(1, 1): 3, (1, 2): 1, (2, 2): 2}), 1) == 3


def test_ur_examples():
    assert ms.ur(Multisegment(3), 1) == 0
    assert ms.ur(EXAMPLE_RANK5, 1) == 0
    assert ms.ur_star(EXAMPLE_RANK5, 1) == 2
    with pytest.raises(UsageError):
        ms.ur_by_height(EXAMPLE_RANK5, 1, 0)


def test_weight_examples():
    assert ms.weight(Multisegment(2)) == (0, 0)
    assert ms.weight(Multisegment(2, [(1, 2)])) == (-1, -1)
    assert EXAMPLE_RANK5.weight() == (-3, -7, -6, -4, -1)


def test_sigma_examples():
    assert ms.sigma(Multisegment(3), 2) == Multisegment(3)
    assert ms.jump(EXAMPLE_RANK5, 1) == 2
    for n in (1, 2, 4):
        assert ms.sigma(Multisegment(n, [(1, 1)]), 1, check=True) == Multisegment(n)


def test_sigma_chain_examples():
    assert ms.sigma_chain(Multisegment(3)) == Multisegment(3)
    assert ms.sigma_chain(Multisegment(3, [(2, 3)])) == Multisegment(3, [(1, 2)])


def test_sigma_chain_trace_on_worked_example():
    trace = ms.sigma_chain_trace(EXAMPLE_RANK5, check=True)
    assert trace.a == (2, 1, 3, 2, 4)
    assert trace.stages[0] == EXAMPLE_RANK5.replace(add=(1, 1)).replace(add=(1, 1))
    assert trace.stages[-1] == Multisegment(
        5, {(1, 1): 2, (2, 2): 1, (1, 2): 1, (2, 3): 2, (3, 5): 3, (1, 3): 1, (1, 4): 1, (2, 5): 2}
    )
    assert trace.result == Multisegment(
        5, {(1, 1): 2, (2, 2): 1, (1, 2): 1, (2, 3): 2, (1, 3): 1, (1, 4): 1}
    )
    # first e* step does nothing, the second removes the two bottom 2s
    top = trace.stages[-1]
    assert ms.eps_star(top, 1) == 0 and ms.eps_star(top, 2) == 2


def test_flip_examples():
    assert ms.flip(Multisegment(3)) == Multisegment(3)
    assert ms.flip(Multisegment(3, [(1, 2)])) == Multisegment(3, [(2, 3)])


def test_replace_missing_segment_is_integrity_failure():
    with pytest.raises(IntegrityError):
        Multisegment(2).replace(remove=ms.Segment(1, 1))


@given(ms_and_index())
def test_operators_match_independent_bracket_oracle(case):
    M, i = case
    L = segs(M)
    for star in (False, True):
        fx = ms.f_star(M, i) if star else ms.f(M, i)
        ex = ms.e_star(M, i) if star else ms.e(M, i)
        assert segs(fx) == oracles.f(L, i, star)
        want = oracles.e(L, i, star)
        assert (None if ex is None else segs(ex)) == want
        assert (ms.eps_star(M, i) if star else ms.eps(M, i)) == oracles.eps(L, i, star)
        assert (ms.ur_star(M, i) if star else ms.ur(M, i)) == oracles.ur(L, i, star)


@given(ms_and_index())
def test_inverse_pairs(case):
    M, i = case
    assert ms.e(ms.f(M, i), i) == M
    assert ms.e_star(ms.f_star(M, i), i) == M
    x = ms.e(M, i)
    if x is not None:
        assert ms.f(x, i) == M
    assert ms.f(M, i).size == M.size + 1


@given(ms_and_index())
def test_ur_by_height_partitions_ur(case):
    M, i = case
    assert sum(ms.ur_by_height(M, i, h) for h in range(1, M.rank + 1)) == ms.ur(M, i)


@given(multisegments())
def test_flip_is_involution_and_conjugates(M):
    assert ms.flip(ms.flip(M)) == M
    n = M.rank
    for i in range(1, n + 1):
        assert ms.flip(ms.f(ms.flip(M), i)) == ms.f_star(M, n + 1 - i)


@settings(max_examples=60)
@given(multisegments(max_rank=5, max_mult=2))
def test_sigma_chain_is_shift_down(M):
    assert ms.sigma_chain(M, check=True) == ms.shift_down(M)


@given(ms_and_index())
def test_bracket_count_identity(case):
    M, i = case
    assert ms.eps(M, i) + ms.eps_star(M, i) + M.pairing(i) == ms.ur(M, i) + ms.ur_star(M, i)
