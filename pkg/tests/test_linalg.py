"""Hand-written elimination checked against sympy's exact rank (independent oracle)."""
import numpy as np
import sympy
from hypothesis import given, strategies as st

from avkit.field import GF, QQ
from avkit.linalg import echelon, intersect_rowspaces, inverse, matmul, nullspace, rank, rref

small = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(small)
def test_rank_matches_sympy_over_q(rows):
    assert rank(QQ.array(rows), QQ) == sympy.Matrix(rows).rank()


@given(small)
def test_prime_rank_equals_rational_rank_for_small_entries(rows):
    # all minors are far below p, so no rank drop modulo p
    assert rank(GF.array(rows), GF) == sympy.Matrix(rows).rank()


@given(small)
def test_nullspace_dimension_and_kernel(rows):
    A = GF.array(rows)
    N = nullspace(A, GF)
    assert N.shape[0] + rank(A, GF) == A.shape[1]
    if N.shape[0]:
        assert not matmul(A, N.T, GF).any()


@given(small)
def test_echelon_pivots_increase(rows):
    E, piv = echelon(GF.array(rows), GF)
    assert piv == sorted(piv) and len(piv) == E.shape[0]
    R, _ = rref(GF.array(rows), GF)
    for k, j in enumerate(piv):
        assert R[k, j] == 1 and np.count_nonzero(R[:, j]) == 1


@given(st.lists(st.lists(st.integers(0, GF.p - 1), min_size=4, max_size=4), min_size=3, max_size=3),
       st.lists(st.lists(st.integers(0, GF.p - 1), min_size=2, max_size=2), min_size=4, max_size=4))
def test_matmul_matches_python_ints(a, b):
    ref = [[sum(x * y for x, y in zip(r, c)) % GF.p for c in zip(*b)] for r in a]
    assert matmul(GF.array(a), GF.array(b), GF).tolist() == ref


def test_inverse_round_trip():
    A = GF.array([[2, 1, 0], [0, 1, 5], [7, 0, 1]])
    assert (matmul(A, inverse(A, GF), GF) == np.eye(3, dtype=A.dtype)).all()


@given(small, small)
def test_intersection_dimension_formula(u, v):
    if len(u[0]) != len(v[0]):
        return
    U, V = GF.array(u), GF.array(v)
    W = intersect_rowspaces(U, V, GF)
    both = rank(np.vstack([U, V]), GF)
    assert (W.shape[0] if W.size else 0) == rank(U, GF) + rank(V, GF) - both
