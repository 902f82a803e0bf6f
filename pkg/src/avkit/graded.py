"""Graded pieces [I]_t as matrices.

Every degree-t form is a row vector on the lex-descending monomial basis of
R_t.  [I]_t is stored as an echelon basis; because columns are sorted by
lex, the pivot columns of that basis are exactly the degree-t part of the
lex initial ideal.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .errors import AvkitError, DimensionError
from .field import FieldSpec
from .ideal import Ideal
from .linalg import complement_rows, echelon, intersect_rowspaces, matmul, nullspace
from .poly import Polynomial, binom, monomial_index, monomials_of_degree


def ndim(nvars: int, t: int) -> int:
    """dim R_t for R = K[x0..x_{nvars-1}]."""
    return binom(t + nvars - 1, nvars - 1) if t >= 0 else 0


@lru_cache(maxsize=None)
def _mul_index(nvars: int, t: int, u: tuple) -> np.ndarray:
    """Column of m*u in degree t+|u| for each degree-t monomial m."""
    idx = monomial_index(nvars, t + sum(u))
    return np.array([idx[tuple(a + b for a, b in zip(m, u))] for m in monomials_of_degree(nvars, t)], dtype=np.int64)


def _var(nvars: int, i: int) -> tuple:
    return tuple(int(k == i) for k in range(nvars))


def poly_vector(f: Polynomial, t: int) -> list:
    return f.to_vector(t)


def vectors_to_polys(M: np.ndarray, nvars: int, t: int, field: FieldSpec) -> list[Polynomial]:
    return [Polynomial.from_vector(row, nvars, t, field) for row in M]


def empty(field: FieldSpec, nvars: int, t: int) -> np.ndarray:
    return field.zeros((0, ndim(nvars, t)))


def multiply_by_variables(B: np.ndarray, nvars: int, t: int, field: FieldSpec) -> np.ndarray:
    """Rows x_i * b for every row b of B (degree t) and every variable."""
    N1 = ndim(nvars, t + 1)
    if B.shape[0] == 0:
        return field.zeros((0, N1))
    blocks = []
    for i in range(nvars):
        out = field.zeros((B.shape[0], N1))
        out[:, _mul_index(nvars, t, _var(nvars, i))] = B
        blocks.append(out)
    return np.concatenate(blocks, axis=0)


def multiplication_matrix(g: Polynomial, t: int) -> np.ndarray:
    """Matrix of f -> f*g from R_t to R_{t+deg g} (rows indexed by monomials)."""
    F, n = g.field, g.nvars
    d = g.degree()
    N0, N1 = ndim(n, t), ndim(n, t + d)
    M = F.zeros((N0, N1))
    rows = np.arange(N0)
    for u, c in g.terms.items():
        cols = _mul_index(n, t, u)
        if F.p is None:
            M[rows, cols] = M[rows, cols] + c
        else:
            M[rows, cols] = (M[rows, cols] + c) % F.p
    return M


def _generator_rows(I: Ideal, t: int) -> np.ndarray:
    gens = [g for g in I.generators if g.degree() == t]
    if not gens:
        return empty(I.field, I.nvars, t)
    return I.field.array([g.to_vector(t) for g in gens])


def graded_piece(I: Ideal, t: int) -> np.ndarray:
    """Echelon basis of [I]_t (cached on the ideal)."""
    if not I.is_homogeneous:
        raise AvkitError("graded pieces need a homogeneous ideal")
    if t < 0:
        return empty(I.field, I.nvars, 0)[:, :0]
    with I._lock:
        if t in I._pieces:
            return I._pieces[t]
        if I._oracle is not None:
            P = I._oracle(t)
            I._pieces[t] = echelon(P, I.field)[0] if P.shape[0] else P
            return I._pieces[t]
        start = max([s for s in I._pieces if s < t], default=None)
        if start is None:
            start = -1
        for s in range(start + 1, t + 1):
            prev = I._pieces.get(s - 1)
            rows = [_generator_rows(I, s)]
            if prev is not None and prev.shape[0]:
                rows.insert(0, multiply_by_variables(prev, I.nvars, s - 1, I.field))
            stacked = np.concatenate(rows, axis=0)
            I._pieces[s] = echelon(stacked, I.field)[0] if stacked.shape[0] else stacked
        return I._pieces[t]


def dim_graded(I: Ideal, t: int) -> int:
    return int(graded_piece(I, t).shape[0])


def lex_leading_monomials(B: np.ndarray, nvars: int, t: int) -> list:
    """Pivot monomials of an echelon basis on lex-sorted columns."""
    mons = monomials_of_degree(nvars, t)
    out = []
    for row in B:
        nz = np.flatnonzero(row)
        if nz.size:
            out.append(mons[int(nz[0])])
    return out


# ------------------------------------------------------- changes of variables


def linear_change_matrices(matrix: Sequence[Sequence], nvars: int, tmax: int, field: FieldSpec) -> list:
    """[M_0, ..., M_tmax]: row e of M_t is the coefficient vector of (A x)^e."""
    A = [[field(x) for x in r] for r in matrix]
    if len(A) != nvars:
        raise DimensionError("matrix size does not match nvars")
    Ms = [field.array([[1]])]
    for t in range(1, tmax + 1):
        prev = Ms[-1]
        mons = monomials_of_degree(nvars, t)
        prev_idx = monomial_index(nvars, t - 1)
        M = field.zeros((len(mons), ndim(nvars, t)))
        groups: dict = {}
        for r, e in enumerate(mons):
            k = next(i for i, x in enumerate(e) if x)
            parent = e[:k] + (e[k] - 1,) + e[k + 1:]
            groups.setdefault(k, ([], []))
            groups[k][0].append(r)
            groups[k][1].append(prev_idx[parent])
        for k, (rows, parents) in groups.items():
            rows = np.array(rows)
            P = prev[np.array(parents)]
            acc = field.zeros((len(rows), M.shape[1]))
            for j in range(nvars):
                a = A[k][j]
                if a == 0:
                    continue
                cols = _mul_index(nvars, t - 1, _var(nvars, j))
                if field.p is None:
                    acc[:, cols] = acc[:, cols] + P * a
                else:
                    acc[:, cols] = (acc[:, cols] + P * a % field.p) % field.p
            M[rows] = acc
        Ms.append(M)
    return Ms


class ChangedPieces:
    """Echelon bases of [I∘A]_t for one substitution x -> A x, computed on demand."""

    def __init__(self, I: Ideal, matrix, tmax_hint: int = 0):
        self.I = I
        self.matrix = tuple(tuple(r) for r in matrix)
        self._M: list = []
        self._pieces: dict = {}

    def _change(self, t: int) -> np.ndarray:
        if len(self._M) <= t:
            self._M = linear_change_matrices(self.matrix, self.I.nvars, t, self.I.field)
        return self._M[t]

    def piece(self, t: int) -> np.ndarray:
        if t not in self._pieces:
            B = graded_piece(self.I, t)
            if B.shape[0] == 0:
                self._pieces[t] = B
            else:
                self._pieces[t] = echelon(matmul(B, self._change(t), self.I.field), self.I.field)[0]
        return self._pieces[t]


# ------------------------------------------------------------ point conditions


def evaluation_matrix(points: Sequence[Sequence], nvars: int, t: int, field: FieldSpec) -> np.ndarray:
    """E[k, e] = P_k^e (rows: points, columns: degree-t monomials)."""
    mons = monomials_of_degree(nvars, t)
    E = field.zeros((len(points), len(mons)))
    if not mons:
        return E
    expo = np.array(mons, dtype=np.int64)
    for k, P in enumerate(points):
        P = [field(x) for x in P]
        if field.p is None:
            pw = [[x**d for d in range(t + 1)] for x in P]
            E[k] = [np.prod([pw[i][e[i]] for i in range(nvars)]) for e in mons]
        else:
            p = field.p
            pw = np.array([[pow(int(x), d, p) for d in range(t + 1)] for x in P], dtype=np.int64)
            row = np.ones(len(mons), dtype=np.int64)
            for i in range(nvars):
                row = row * pw[i][expo[:, i]] % p
            E[k] = row
    return E


def points_piece(points: Sequence[Sequence], nvars: int, t: int, field: FieldSpec) -> np.ndarray:
    """Echelon basis of the degree-t forms vanishing at every point."""
    N = ndim(nvars, t)
    if not points:
        return nullspace(field.zeros((0, N)), field, N)
    K = nullspace(evaluation_matrix(points, nvars, t, field), field, N)
    return echelon(K, field)[0] if K.shape[0] else K


def _falling(e: int, b: int) -> int:
    out = 1
    for i in range(b):
        out *= e - i
    return out


def derivative_conditions(point: Sequence, nvars: int, t: int, order: int, field: FieldSpec) -> np.ndarray:
    """D[e, beta] = (d^beta x^e)(P) for |e| = t, |beta| = order.

    A degree-t form is singular of multiplicity > order at P iff f D = 0
    (valid over Q and over F_p with p > t).
    """
    mons = monomials_of_degree(nvars, t)
    betas = monomials_of_degree(nvars, order)
    P = [field(x) for x in point]
    if field.p is not None and field.p <= t:
        raise AvkitError("derivative conditions need characteristic larger than the degree")
    D = field.zeros((len(mons), len(betas)))
    if field.p is None:
        for r, e in enumerate(mons):
            for c, b in enumerate(betas):
                if all(x >= y for x, y in zip(e, b)):
                    v = 1
                    for i in range(nvars):
                        v *= _falling(e[i], b[i]) * P[i] ** (e[i] - b[i])
                    D[r, c] = v
        return D
    p = field.p
    E = np.array(mons, dtype=np.int64)
    Bt = np.array(betas, dtype=np.int64)
    acc = np.ones((len(mons), len(betas)), dtype=np.int64)
    for i in range(nvars):
        tab = np.zeros((t + 1, order + 1), dtype=np.int64)
        for e in range(t + 1):
            for b in range(min(e, order) + 1):
                tab[e, b] = _falling(e, b) % p * pow(int(P[i]), e - b, p) % p
        acc = acc * tab[E[:, i][:, None], Bt[:, i][None, :]] % p
    return acc


# ---------------------------------------------------- ideals from piece oracles


def generators_from_pieces(piece_fn: Callable[[int], np.ndarray], nvars: int, field: FieldSpec,
                           max_degree: int, quiet: int = 2, limit: int = 60) -> tuple[list[Polynomial], dict]:
    """Minimal homogeneous generators of the ideal whose pieces ``piece_fn`` returns.

    Degrees up to ``max_degree`` are always scanned; after that the scan stops
    once ``quiet`` consecutive degrees bring no new generator.
    """
    gens: list = []
    pieces: dict = {}
    prev = None
    calm = 0
    t = 0
    while t <= max_degree or calm < quiet:
        if t > limit:
            raise AvkitError(f"generators still appearing in degree {limit}")
        P = piece_fn(t)
        P = echelon(P, field)[0] if P.shape[0] else P
        pieces[t] = P
        new = empty(field, nvars, t)
        if P.shape[0]:
            S = multiply_by_variables(prev, nvars, t - 1, field) if prev is not None and prev.shape[0] else empty(field, nvars, t)
            new = complement_rows(P, S, field)
            gens.extend(vectors_to_polys(new, nvars, t, field))
        calm = calm + 1 if (t >= max_degree and new.shape[0] == 0) else 0
        prev = P
        t += 1
    return gens, pieces


def ideal_from_pieces(piece_fn: Callable[[int], np.ndarray], nvars: int, field: FieldSpec, max_degree: int,
                      keep_oracle: bool = True, **kw) -> Ideal:
    """Ideal with the given pieces.

    Generators are extracted up to ``max_degree`` (and further while new
    ones keep appearing).  With ``keep_oracle`` every later piece is taken
    from ``piece_fn`` itself, so linear-algebra results never depend on the
    generator scan having gone far enough.
    """
    gens, pieces = generators_from_pieces(piece_fn, nvars, field, max_degree)
    I = Ideal(gens, nvars, field, **kw)
    with I._lock:
        I._pieces.update(pieces)
        if keep_oracle:
            I._oracle = piece_fn
    return I


def intersection_piece(I: Ideal, J: Ideal, t: int) -> np.ndarray:
    return intersect_rowspaces(graded_piece(I, t), graded_piece(J, t), I.field)


def colon_piece(I: Ideal, J: Ideal, t: int) -> np.ndarray:
    """Echelon basis of [I : J]_t = {f : f g in I for every generator g of J}."""
    F, n = I.field, I.nvars
    N = ndim(n, t)
    blocks = []
    for g in J.generators:
        d = g.degree()
        B = graded_piece(I, t + d)
        Z = nullspace(B, F, ndim(n, t + d))  # rowspace(B) = {w : w Z^T = 0}
        if Z.shape[0] == 0:
            continue
        blocks.append(matmul(multiplication_matrix(g, t), Z.T.copy(), F))
    if not blocks:
        out = F.zeros((N, N))
        for i in range(N):
            out[i, i] = F.one()
        return out
    C = np.concatenate(blocks, axis=1)
    K = nullspace(C.T.copy(), F, N)
    return echelon(K, F)[0] if K.shape[0] else K
