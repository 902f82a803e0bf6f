"""Exact dense linear algebra over Q or F_p.

Matrices are numpy arrays: int64 residues for F_p (p < 2^31, so a product of
two residues fits in int64) and object arrays of Fractions for Q.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .field import FieldSpec


def echelon(A: np.ndarray, field: FieldSpec, reduced: bool = False) -> tuple[np.ndarray, list[int]]:
    """Row echelon form with unit pivots; zero rows dropped.

    Pivots are leftmost, so with columns sorted by a monomial order the pivot
    columns are the leading monomials of a basis of the row space.
    """
    A = np.array(A, dtype=field.dtype, copy=True)
    if A.ndim != 2:
        raise ValueError("echelon expects a 2-d array")
    nrows, ncols = A.shape
    p = field.p
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        piv = A[r, c]
        if p is None:
            if piv != 1:
                A[r, c:] = A[r, c:] * (1 / Fraction(piv))
        elif piv != 1:
            A[r, c:] = A[r, c:] * pow(int(piv), -1, p) % p
        lo = 0 if reduced else r + 1
        rows = lo + np.flatnonzero(A[lo:, c])
        rows = rows[rows != r]
        if rows.size:
            f = A[rows, c]
            if p is None:
                A[rows, c:] = A[rows, c:] - np.outer(f, A[r, c:])
            else:
                A[rows, c:] = (A[rows, c:] - np.outer(f, A[r, c:]) % p) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rref(A: np.ndarray, field: FieldSpec) -> tuple[np.ndarray, list[int]]:
    return echelon(A, field, reduced=True)


def rank(A: np.ndarray, field: FieldSpec) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(echelon(A, field)[1])


def nullspace(A: np.ndarray, field: FieldSpec, ncols: int | None = None) -> np.ndarray:
    """Rows spanning {v : A v = 0}."""
    A = np.asarray(A, dtype=field.dtype)
    n = A.shape[1] if A.ndim == 2 and A.shape[1] else (ncols or 0)
    if A.size == 0:
        out = field.zeros((n, n))
        for i in range(n):
            out[i, i] = field.one()
        return out
    R, piv = rref(A, field)
    free = [c for c in range(n) if c not in set(piv)]
    out = field.zeros((len(free), n))
    p = field.p
    for k, fcol in enumerate(free):
        out[k, fcol] = field.one()
        for i, pc in enumerate(piv):
            v = R[i, fcol]
            if v != 0:
                out[k, pc] = -v if p is None else (p - v) % p
    return out


def inverse(A: np.ndarray, field: FieldSpec) -> np.ndarray:
    A = field.array(A)
    n = A.shape[0]
    aug = field.zeros((n, 2 * n))
    aug[:, :n] = A
    for i in range(n):
        aug[i, n + i] = field.one()
    R, piv = rref(aug, field)
    if piv[:n] != list(range(n)) or len(piv) < n:
        from .errors import SingularMatrixError

        raise SingularMatrixError("matrix is not invertible")
    return R[:, n:]


def matmul(A: np.ndarray, B: np.ndarray, field: FieldSpec) -> np.ndarray:
    """Exact product.  Over F_p the operands are split into 16-bit limbs so
    every partial product sum stays below 2^53 and BLAS float64 is exact."""
    if field.p is None:
        if A.shape[0] == 0 or B.shape[1] == 0:
            return field.zeros((A.shape[0], B.shape[1]))
        return np.dot(A, B)
    p = field.p
    if A.shape[1] == 0 or A.shape[0] == 0 or B.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    if A.shape[1] > 2**20:
        raise ValueError("inner dimension too large for exact limb product")
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    a1, a0 = (A >> 16).astype(np.float64), (A & 0xFFFF).astype(np.float64)
    b1, b0 = (B >> 16).astype(np.float64), (B & 0xFFFF).astype(np.float64)
    hh = (a1 @ b1).astype(np.int64) % p
    mid = ((a1 @ b0).astype(np.int64) % p + (a0 @ b1).astype(np.int64) % p) % p
    ll = (a0 @ b0).astype(np.int64) % p
    s16 = (1 << 16) % p
    s32 = (1 << 32) % p
    return (hh * s32 % p + mid * s16 % p + ll) % p


def reduce_against(C: np.ndarray, R: np.ndarray, pivots: list[int], field: FieldSpec) -> np.ndarray:
    """Rows of C reduced modulo the row space of the reduced echelon matrix R."""
    if R.shape[0] == 0 or C.shape[0] == 0:
        return np.array(C, dtype=field.dtype, copy=True)
    coeffs = C[:, pivots]
    prod = matmul(coeffs, R, field)
    if field.p is None:
        return C - prod
    return (C - prod) % field.p


def intersect_rowspaces(U: np.ndarray, V: np.ndarray, field: FieldSpec) -> np.ndarray:
    """Echelon basis of rowspace(U) ∩ rowspace(V)."""
    if U.shape[0] == 0 or V.shape[0] == 0:
        return field.zeros((0, U.shape[1]))
    # a U = b V  <=>  (a, -b) in the left kernel of [U; V]
    stacked = np.concatenate([U, V], axis=0)
    K = nullspace(stacked.T, field)
    if K.shape[0] == 0:
        return field.zeros((0, U.shape[1]))
    W = matmul(K[:, : U.shape[0]], U, field)
    return echelon(W, field)[0]


def complement_rows(P: np.ndarray, S: np.ndarray, field: FieldSpec) -> np.ndarray:
    """Echelon rows extending rowspace(S) to rowspace(S) + rowspace(P).

    The returned rows lie in rowspace(S) + rowspace(P) and are independent
    modulo rowspace(S).
    """
    if P.shape[0] == 0:
        return P
    if S.shape[0] == 0:
        return echelon(P, field)[0]
    R, piv = rref(S, field)
    C = reduce_against(np.asarray(P, dtype=field.dtype), R, piv, field)
    return echelon(C, field)[0]
