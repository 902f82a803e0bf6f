from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from avkit.errors import FieldMismatchError, ParseError
from avkit.field import GF, QQ, FieldSpec, derive_seed, parse_scalar, rng_for

P = GF.p
elements = st.integers(0, P - 1)


def test_labels_round_trip():
    assert FieldSpec.from_label(GF.label) == GF
    assert FieldSpec.from_label("rationals") == QQ
    assert FieldSpec.from_label("fp:1048583").p == 1048583
    with pytest.raises(ValueError):
        FieldSpec.from_label("reals")


def test_small_or_composite_primes_rejected():
    with pytest.raises(ValueError):
        FieldSpec.prime(1000)
    with pytest.raises(ValueError):
        FieldSpec.prime(2**31)


@given(elements.filter(bool))
def test_inverse(a):
    assert GF.mul(a, GF.inv(a)) == 1


@given(elements, elements, elements)
def test_distributive(a, b, c):
    assert GF.mul(a, GF.add(b, c)) == GF.add(GF.mul(a, b), GF.mul(a, c))


@given(st.fractions(max_denominator=50))
def test_rational_coercion(q):
    assert QQ(q) == q
    if q.denominator % P:
        assert GF.mul(GF(q), q.denominator) == GF(q.numerator)


def test_signed_representatives():
    assert GF.signed(GF(-3)) == -3
    assert GF.signed(GF(7)) == 7


@given(elements)
def test_sqrt_squares(a):
    r = GF.sqrt(GF.mul(a, a))
    assert r is not None and GF.mul(r, r) == GF.mul(a, a)


def test_seed_derivation_is_deterministic_and_label_sensitive():
    assert derive_seed(0, "a", 1) == derive_seed(0, "a", 1)
    assert derive_seed(0, "a", 1) != derive_seed(0, "a", 2)
    assert rng_for(3, "x").integers(0, 10**9) == rng_for(3, "x").integers(0, 10**9)


def test_parse_scalar_location():
    assert parse_scalar("3/4", QQ) == Fraction(3, 4)
    with pytest.raises(ParseError) as err:
        parse_scalar("3/0", QQ, line=4, column=7)
    assert (err.value.line, err.value.column) == (4, 7)


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        GF.check_same(QQ)
