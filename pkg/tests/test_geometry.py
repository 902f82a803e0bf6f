import pytest
from hypothesis import given, settings

from _strategies import projective_points
from avkit.errors import AvkitError
from avkit.field import GF
from avkit.geometry import (
    FIXTURE_NAMES,
    ProjPoint,
    build_fixture,
    cone_over,
    distraction,
    fat_point_ideal,
    intersect_ideals,
    named_fixture,
    point_ideal,
    points_ideal,
    points_on_variety,
    twisted_cubic,
)
from avkit.groebner import ideal_intersection, same_ideal
from avkit.hilbert import h_vector, hilbert_value
from avkit.ideal import Ideal
from avkit.monomial_ideal import MonomialIdeal
from avkit.poly import binom


def test_projective_points_are_normalized():
    assert ProjPoint((2, 4, 6), GF) == ProjPoint((1, 2, 3), GF)
    with pytest.raises(AvkitError):
        ProjPoint((0, 0, 0), GF)


def test_duplicates_rejected():
    with pytest.raises(AvkitError):
        points_ideal([(1, 2, 3), (2, 4, 6)], GF)


def test_thirteen_points_match_the_quartics():
    X = build_fixture("X1", GF)
    Q = Ideal.parse(["y^3*z - y*z^3", "x^3*z - x*z^3", "x^3*y - x*y^3"], 3)
    assert same_ideal(X, Q)


@settings(max_examples=15)
@given(projective_points(3, 1, 5), projective_points(3, 1, 5))
def test_linear_algebra_union_matches_buchberger_intersection(a, b):
    A, B = points_ideal(a, GF), points_ideal(b, GF)
    U = intersect_ideals(A, B)
    G = ideal_intersection(A, B)
    for t in range(6):
        assert hilbert_value(U, t) == hilbert_value(G, t)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_fat_point_hilbert_function(m):
    I = fat_point_ideal((1, 2, 3, 4), m, GF)
    for t in range(m + 3):
        assert hilbert_value(I, t) == min(binom(t + 3, 3), binom(m - 1 + 3, 3))


def test_vanishing_on_sampled_points():
    C = twisted_cubic(GF)
    for P in points_on_variety(C, 5, seed=3):
        assert all(f.evaluate(P) == 0 for f in C.generators)


def test_distraction_keeps_h_vector():
    M = MonomialIdeal(2, [(3, 0), (2, 1), (0, 3)])
    X = distraction(M, GF)
    assert tuple(h_vector(X)) == tuple(len(M.standard_monomials(t)) for t in range(4) if M.standard_monomials(t))


def test_cone_has_same_hilbert_function_as_base_section():
    base = build_fixture("B3_dual_points", GF)
    X = cone_over(base, (3, 5, 7, 1))
    # h_cone = partial sums of h_base
    for t in range(7):
        assert hilbert_value(X, t) == sum(hilbert_value(base, s) for s in range(t + 1))
    assert all(f.evaluate((3, 5, 7, 1)) == 0 for f in X.generators)


@pytest.mark.parametrize("name,e,g,t0", [
    ("twisted_cubic", 3, 0, 1), ("plane_cubic", 3, 1, 1), ("linked_8_7", 8, 7, 3), ("linked_7_4", 7, 4, 4),
    ("linked_15_28", 15, 28, 8),
])
def test_curves_have_linear_hilbert_polynomial(name, e, g, t0):
    C = build_fixture(name, GF)
    for t in range(t0, t0 + 3):
        assert hilbert_value(C, t) == e * t - g + 1


def test_example_configurations_share_an_h_vector():
    for name in ("twisted18_plus6", "lines_6_7_7_plus4", "plane17_plus7", "plane17_lines43"):
        assert tuple(h_vector(build_fixture(name, GF))) == (1, 3, 6, 6, 3, 3, 2), name


def test_point_ideal_and_recipes():
    assert point_ideal((1, 0, 0), GF).max_generator_degree() == 1
    r = named_fixture("root_An", 0, n=4)
    assert r.to_json() == {"kind": "PointSet", "name": "root_An", "params": {"n": 4}, "seed": 0}
    assert hilbert_value(r.build(GF), 2) == binom(6, 2)
    with pytest.raises(AvkitError):
        named_fixture("nope")
    assert "X1" in FIXTURE_NAMES and "quartics_triple_point" in FIXTURE_NAMES


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_root_points_have_initial_degree_three(n):
    from avkit.hilbert import alpha

    X = build_fixture("root_An", GF, n=n)
    assert len(X.meta["points"]) == binom(n + 2, 2)
    assert alpha(X) == 3
