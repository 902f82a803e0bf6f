import pytest
from hypothesis import given, settings, strategies as st

from avkit.errors import AvkitError
from avkit.field import GF, derive_seed
from avkit.geometry import build_fixture
from avkit.gin import gin, is_borel_fixed, is_lex_segment, lex_segment_ideal_for, monomial_colon_by_power
from avkit.groebner import initial_ideal
from avkit.hilbert import hilbert_value, standard_monomial_count
from avkit.ideal import Ideal
from avkit.monomial_ideal import MonomialIdeal
from avkit.poly import LEX, LinearChange, apply_linear_change

G1 = "(x^4, x^3*y, x^3*z, x^2*y^3, x^2*y^2*z, x^2*y*z^3, x*y^5)"


@pytest.fixture(scope="module")
def X1():
    return build_fixture("X1", GF)


def test_thirteen_point_gin(X1):
    g = gin(X1, 2, 0, 6)
    assert g.monomial_ideal.to_text() == G1
    assert g.borel_certified and g.probabilistic
    assert not is_lex_segment(g.monomial_ideal, 6)
    assert is_lex_segment(g.monomial_ideal, 4)


def test_gin_piece_beyond_cap_rejected(X1):
    with pytest.raises(AvkitError):
        gin(X1, 2, 0, 6).piece(7)


@pytest.mark.parametrize("gens,nvars,cap", [
    (["x*z - y^2", "y*w - z^2", "x*w - y*z"], 4, 4),
    (["y^3*z - y*z^3", "x^3*z - x*z^3", "x^3*y - x*y^3"], 3, 6),
])
def test_gin_matches_buchberger_after_same_change(gens, nvars, cap):
    """Pivot-based gin against the lex initial ideal of the explicitly transformed generators."""
    I = Ideal.parse(gens, nvars, GF)
    g = gin(I, 2, 7, cap)
    L = LinearChange.random(nvars, GF, derive_seed(7, "gin", 0))
    J = Ideal([apply_linear_change(f, L) for f in I.generators], nvars, GF)
    M = initial_ideal(J, LEX)
    for t in range(cap + 1):
        assert set(M.piece(t)) == set(g.piece(t))


def test_gin_preserves_hilbert_function(X1):
    g = gin(X1, 2, 0, 8)
    for t in range(9):
        assert standard_monomial_count(g.monomial_ideal, t) == hilbert_value(X1, t)


def test_borel_fixed_detects_failure():
    assert is_borel_fixed(MonomialIdeal(3, [(2, 0, 0), (1, 1, 0)]))
    assert not is_borel_fixed(MonomialIdeal(3, [(0, 1, 0)]))


def test_colon_by_x0_power():
    M = MonomialIdeal.from_text(G1, 3)
    C = monomial_colon_by_power(M, 2)
    for m in [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 3, 0), (0, 2, 1), (0, 1, 3)]:
        assert C.contains(m)
    assert not C.contains((0, 0, 4))


hf_strategy = st.integers(1, 3).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 12), min_size=2, max_size=6))
)


@settings(max_examples=40)
@given(hf_strategy)
def test_lex_segment_ideal_realizes_o_sequences(args):
    from avkit.sequences import is_O_sequence

    n, tail = args
    h = [1] + [min(v, n) if k == 0 else v for k, v in enumerate(tail)]
    if not is_O_sequence(h) or h[1] > n:
        with pytest.raises(ValueError):
            lex_segment_ideal_for(h, n, len(h) - 1)
        return
    L = lex_segment_ideal_for(h, n, len(h) - 1)
    assert [standard_monomial_count(L, t) for t in range(len(h))] == h
    assert all(is_lex_segment(L, t) for t in range(len(h)))
