import pytest
from hypothesis import given, settings

from _strategies import projective_points
from avkit.field import GF
from avkit.geometry import complete_intersection, points_ideal
from avkit.hilbert import alpha, h_vector, hilbert_function, hilbert_value, initial_ideal_upto
from avkit.ideal import Ideal
from avkit.poly import DEGREVLEX, binom


def test_thirteen_points():
    I = Ideal.parse(["y^3*z - y*z^3", "x^3*z - x*z^3", "x^3*y - x*y^3"], 3)
    hf = hilbert_function(I, 8)
    assert hf.values[:7] == (1, 3, 6, 10, 12, 13, 13)
    assert hf.stable_from == 5
    assert tuple(h_vector(I)) == (1, 2, 3, 4, 2, 1)
    assert alpha(I) == 4


def test_orders_give_same_hilbert_function():
    I = Ideal.parse(["x*z - y^2", "y*w - z^2", "x*w - y*z"], 4)
    assert hilbert_function(I, 7).values == hilbert_function(I, 7, DEGREVLEX).values
    assert hilbert_function(I, 7).values == tuple(3 * t + 1 for t in range(8))


@settings(max_examples=20)
@given(projective_points(3, 1, 10))
def test_points_hilbert_function_is_bounded_and_stabilizes(pts):
    I = points_ideal(pts, GF)
    vals = [hilbert_value(I, t) for t in range(len(pts) + 1)]
    assert vals[0] == 1
    assert all(v <= min(len(pts), binom(t + 2, 2)) for t, v in enumerate(vals))
    assert vals[-1] == len(pts)
    assert sum(h_vector(I)) == len(pts)


@pytest.mark.parametrize("degrees,nvars", [((2, 2), 3), ((3, 3), 4), ((2, 3, 3), 4)])
def test_complete_intersection_koszul(degrees, nvars):
    X = complete_intersection(degrees, nvars, GF, seed=1)
    from avkit.geometry import koszul_hilbert

    assert [hilbert_value(X, t) for t in range(9)] == [koszul_hilbert(degrees, nvars, t) for t in range(9)]


def test_initial_ideal_upto_pieces():
    I = Ideal.parse(["x^2", "y^3"], 3)
    M = initial_ideal_upto(I, 4)
    assert M.contains((2, 0, 0)) and M.contains((0, 3, 0)) and not M.contains((1, 2, 1))
