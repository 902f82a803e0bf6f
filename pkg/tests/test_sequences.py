import pytest
from hypothesis import given, strategies as st

from avkit.poly import binom
from avkit.sequences import (
    CONSTANT,
    UNKNOWN,
    IntSequence,
    first_half,
    is_differentiable,
    is_finite,
    is_O_sequence,
    is_SI_sequence,
    is_symmetric,
    is_unimodal,
    macaulay_growth,
    macaulay_rep,
)


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
def test_macaulay_rep_reconstructs_every_a_up_to_10k(d):
    for a in range(0, 10_001):
        rep = macaulay_rep(a, d)
        assert sum(binom(k, i) for k, i in rep) == a
        ks = [k for k, _ in rep]
        assert ks == sorted(ks, reverse=True) and len(set(ks)) == len(ks)
        assert all(k >= i >= 1 for k, i in rep)


@given(st.integers(1, 10**6), st.integers(1, 12))
def test_macaulay_rep_property(a, d):
    rep = macaulay_rep(a, d)
    assert sum(binom(k, i) for k, i in rep) == a
    assert [i for _, i in rep] == list(range(d, d - len(rep), -1))


def test_growth_values():
    assert macaulay_growth(3, 1) == 6
    assert macaulay_growth(4, 2) == 5
    assert macaulay_growth(6, 2) == 10


@given(st.integers(1, 8), st.integers(1, 8))
def test_polynomial_ring_is_extremal(n, d):
    # h(d) = C(n-1+d, d) grows to exactly C(n+d, d+1)
    assert macaulay_growth(binom(n - 1 + d, d), d) == binom(n + d, d + 1)


@pytest.mark.parametrize(
    "seq,ok",
    [((1, 3, 6, 10, 12, 13, 13), True), ((1, 2, 4), False), ((1, 3, 6, 10, 15, 21, 28), True),
     ((1, 2, 1), True), ((0, 1), False), ((1, 1, 2), False)],
)
def test_o_sequence_examples(seq, ok):
    assert bool(is_O_sequence(seq)) is ok


def test_o_sequence_reports_position():
    chk = is_O_sequence((1, 2, 3, 5))
    assert not chk and chk.index == 3


@pytest.mark.parametrize(
    "seq,si",
    [(IntSequence.finite((1, 2, 1)), True), (IntSequence.finite((1, 2)), False),
     (IntSequence((1, 3, 4, 4), 0, CONSTANT, 4), False), (IntSequence.finite((1, 4, 7, 8, 5)), False),
     (IntSequence.finite((0, 1, 3, 3, 1, 0)), True), (IntSequence.finite((1, 3, 1)), True), (IntSequence.finite((1, 4, 3, 4, 1)), False)],
)
def test_si_examples(seq, si):
    assert is_SI_sequence(seq)[0] is si


def test_si_undetermined_tail():
    verdict, why = is_SI_sequence(IntSequence((1, 2, 2), 0, UNKNOWN))
    assert verdict is None and "undetermined" in why
    assert is_finite(IntSequence((1,), 0, UNKNOWN)) is None


def test_shape_helpers():
    assert is_unimodal((1, 3, 3, 2, 1)) and not is_unimodal((1, 3, 1, 3))
    assert is_symmetric(IntSequence.finite((0, 1, 2, 1, 0)))
    assert not is_symmetric((1, 4, 7, 8, 5))
    assert first_half((1, 2, 3, 2, 1)) == (1, 2, 3)
    assert is_differentiable((1, 3, 6, 10))
    assert not is_differentiable((1, 3, 4, 4, 5))


@given(st.lists(st.integers(0, 30), max_size=12))
def test_positive_support_trims_zeros(vals):
    sup = IntSequence.finite(vals).positive_support()
    assert not sup or (sup[0] > 0 and sup[-1] > 0)
    assert sum(sup) == sum(vals)


def test_negative_entries_rejected():
    with pytest.raises(ValueError):
        IntSequence.finite((1, -1))
