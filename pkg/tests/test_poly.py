import pytest
from hypothesis import given, strategies as st

from _strategies import forms, polys
from avkit.errors import DimensionError, ParseError
from avkit.field import GF, QQ
from avkit.poly import (
    DEGREVLEX,
    LEX,
    LinearChange,
    Polynomial,
    apply_linear_change,
    binom,
    from_x0_coefficients,
    monomials_of_degree,
    parse_polynomial,
    x0_coefficients,
)


@pytest.mark.parametrize("nvars,d", [(1, 4), (3, 0), (3, 6), (4, 5)])
def test_monomial_count_and_lex_order(nvars, d):
    mons = monomials_of_degree(nvars, d)
    assert len(mons) == binom(d + nvars - 1, nvars - 1)
    assert list(mons) == sorted(mons, reverse=True)


def test_binom_vanishes_off_range():
    assert binom(2, 3) == 0 and binom(-1, 0) == 0 and binom(5, -1) == 0


def test_parse_aliases_and_rationals():
    f = parse_polynomial("x^3*y - 1/2 x y^3 + 3z^4", 3, QQ)
    assert f.coefficient((1, 3, 0)) == QQ(-1) / 2
    assert f.coefficient((0, 0, 4)) == 3
    assert parse_polynomial("x0^2 - x2*x1", 3) == parse_polynomial("x^2 - y z", 3)


@pytest.mark.parametrize(
    "text,col",
    [("x^", 2), ("x + + y", 5), ("x + y )", 7), ("x + ", 3), ("3x8", 2), ("x ^ y", 3)],
)
def test_parse_error_columns(text, col):
    with pytest.raises(ParseError) as err:
        parse_polynomial(text, 3, line=7)
    assert err.value.line == 7
    assert err.value.column == col


@given(polys(3, 4, QQ))
def test_print_parse_round_trip(f):
    assert parse_polynomial(f.to_str(), 3, QQ) == f


@given(polys(3), polys(3), polys(3))
def test_ring_axioms(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f - f == Polynomial.zero(3)


@given(polys(3), polys(3), st.tuples(*[st.integers(-20, 20)] * 3))
def test_evaluation_is_multiplicative(f, g, pt):
    assert (f * g).evaluate(pt) == GF.mul(f.evaluate(pt), g.evaluate(pt))


@given(forms(4, 3), st.integers(0, 10**6))
def test_linear_change_inverse(f, seed):
    L = LinearChange.random(4, GF, seed)
    assert apply_linear_change(apply_linear_change(f, L), L.inverse()) == f


@given(forms(4, 4))
def test_x0_coefficient_strips(f):
    if f.is_zero():
        return
    cs = x0_coefficients(f)
    assert all(c.is_zero() or (c.degree() == k and not any(m[0] for m in c.terms)) for k, c in enumerate(cs))
    assert from_x0_coefficients(cs, 4, GF) == f


def test_with_first_column_moves_point_to_e0():
    P = (3, 1, 4, 1)
    L = LinearChange.with_first_column(P, GF, 5)
    assert tuple(row[0] for row in L.matrix) == tuple(GF(c) for c in P)


def test_orders_disagree_where_expected():
    f = parse_polynomial("x*z^2 + y^3", 3)
    assert f.leading_monomial(LEX) == (1, 0, 2)
    assert f.leading_monomial(DEGREVLEX) == (0, 3, 0)


def test_embed_restrict():
    f = parse_polynomial("x^2 - y z", 3)
    g = f.embed(5, 1)
    assert g.restrict(3, 1) == f
    with pytest.raises(DimensionError):
        g.restrict(2, 1)
