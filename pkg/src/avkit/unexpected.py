"""Actual, virtual and expected dimensions of [I_X ∩ I_P^m]_t and the AV sequences.

Three independent computations of the same numbers are available:

* ``adim``: move a random point P to Q = (1:0:...:0) by a linear change and
  count the echelon rows of [I_X']_t supported on monomials of x0-degree
  <= t - m (membership in I_Q^m).
* the direct AV route: at a random P in the original coordinates, the
  derivative matrix D of order m-1 gives
  dim [R/(I_X + I_P^m)]_t = C(m-1+n, n) - rank([I_X]_t D).
* the gin route: AV_{X,j}(m) = h_{R/J}(m-1) with J = gin(I_X) : x0^(j+1).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

from .errors import AvkitError, GenericityWarning, RouteMismatchError
from .field import FieldSpec, derive_seed, rng_for
from .gin import GinResult, gin as compute_gin, is_lex_segment, monomial_colon_by_power
from .graded import ChangedPieces, derivative_conditions, graded_piece, ndim
from .hilbert import alpha, graded_dim_ideal, hilbert_value, standard_monomial_count
from .ideal import Ideal
from .linalg import matmul, rank
from .poly import LinearChange, Polynomial, binom, random_form, random_point, x0_coefficients
from .sequences import (
    CONSTANT,
    UNKNOWN,
    ZERO,
    IntSequence,
    is_differentiable,
    is_finite,
    is_O_sequence,
    is_SI_sequence,
    is_symmetric,
    is_unimodal,
)

UNEXPECTED, EXPECTED, NO_HYPERSURFACE = "unexpected", "expected", "no_hypersurface"


def _proj_dim(X: Ideal) -> int:
    return X.nvars - 1


def fat_point_length(n: int, m: int) -> int:
    """C(m-1+n, n): number of conditions imposed by a general fat point of multiplicity m in P^n."""
    return binom(m - 1 + n, n) if m >= 1 else 0


# ------------------------------------------------------------------ dims


@dataclass(frozen=True)
class DimTriple:
    t: int
    m: int
    adim: int
    vdim: int
    edim: int
    trials_agreed: bool = True
    seeds: tuple = ()

    @property
    def verdict(self) -> str:
        if self.adim == 0:
            return NO_HYPERSURFACE
        return UNEXPECTED if self.adim > self.edim else EXPECTED

    def to_json(self) -> dict:
        return {"t": self.t, "m": self.m, "adim": self.adim, "vdim": self.vdim, "edim": self.edim,
                "verdict": self.verdict, "trials_agreed": self.trials_agreed}


def vdim_edim(X: Ideal, t: int, m: int) -> tuple[int, int]:
    v = graded_dim_ideal(X, t) - fat_point_length(_proj_dim(X), m)
    return v, max(0, v)


def _changed(X: Ideal, seed: int) -> ChangedPieces:
    """Cached substitution sending a random point (seeded) to (1:0:...:0)."""
    with X._lock:
        cache = X.meta.setdefault("_moved", {})
        if seed not in cache:
            rng = rng_for(seed, "general-point")
            P = random_point(X.nvars, X.field, rng)
            L = LinearChange.with_first_column(P, X.field, seed)
            cache[seed] = ChangedPieces(X, L.matrix)
        return cache[seed]


def _adim_once(X: Ideal, t: int, m: int, seed: int) -> int:
    if t < 0:
        return 0
    B = graded_piece(X, t)
    if B.shape[0] == 0:
        return 0
    if m <= 0:
        return int(B.shape[0])
    Bp = _changed(X, seed).piece(t)
    prefix = min(ndim(X.nvars, m - 1), Bp.shape[1])  # monomials with x0-degree > t - m
    if prefix == 0:
        return int(Bp.shape[0])
    lead = (Bp != 0).argmax(axis=1)
    return int((lead >= prefix).sum())


def _min_over_trials(fn, trials: int, seed: int, label: str) -> tuple[int, bool, tuple]:
    seeds = [derive_seed(seed, label, k) for k in range(trials)]
    vals = [fn(s) for s in seeds]
    agreed = len(set(vals)) == 1
    if not agreed:
        warnings.warn(f"{label}: random trials disagree ({vals}); escalating", GenericityWarning, stacklevel=3)
        extra = derive_seed(seed, label, trials)
        seeds.append(extra)
        vals.append(fn(extra))
    return min(vals), agreed, tuple(seeds)


def dim_triple(X: Ideal, t: int, m: int, trials: int = 2, seed: int = 0) -> DimTriple:
    if trials < 1:
        raise ValueError("need at least one trial")
    a, agreed, seeds = _min_over_trials(lambda s: _adim_once(X, t, m, s), trials, seed, "adim")
    v, e = vdim_edim(X, t, m)
    return DimTriple(t, m, a, v, e, agreed, seeds)


def adim(X: Ideal, t: int, m: int, trials: int = 2, seed: int = 0) -> int:
    """dim [I_X ∩ I_P^m]_t at a general point P (minimum over random trials)."""
    return dim_triple(X, t, m, trials, seed).adim


def adim_via_gin(X: Ideal, t: int, m: int, g: GinResult) -> int:
    """Degree-t monomials of gin(I_X) of x0-degree <= t - m."""
    return sum(1 for u in g.piece(t) if u[0] <= t - m)


# -------------------------------------------------------------- AV routes


def _av_direct_once(X: Ideal, j: int, m: int, seed: int) -> int:
    t = m + j
    n = _proj_dim(X)
    length = fat_point_length(n, m)
    B = graded_piece(X, t)
    if B.shape[0] == 0:
        return length
    P = random_point(X.nvars, X.field, rng_for(seed, "direct-point"))
    D = derivative_conditions(P, X.nvars, t, m - 1, X.field)
    return length - rank(matmul(B, D, X.field), X.field)


def av_value(X: Ideal, j: int, m: int, trials: int = 2, seed: int = 0) -> int:
    """AV_{X,j}(m) = dim [R/(I_X + I_P^m)]_{m+j} by the direct route."""
    if m < 1 or j < 0:
        raise ValueError("need m >= 1 and j >= 0")
    return _min_over_trials(lambda s: _av_direct_once(X, j, m, s), trials, seed, "av-direct")[0]


def av_from_gin(g: GinResult, j: int, m_max: int) -> list[int]:
    if m_max + j > g.degree_cap:
        raise AvkitError(f"gin cap {g.degree_cap} too small for m_max + j = {m_max + j}")
    J = monomial_colon_by_power(g.monomial_ideal, j + 1)
    return [standard_monomial_count(J, m - 1) for m in range(1, m_max + 1)]


@dataclass
class AVReport:
    j: int
    values: dict
    route: str
    o_sequence_check: bool
    positive_support: IntSequence
    tail: str
    tail_value: int = 0
    seeds: tuple = ()
    gin: GinResult | None = None

    def sequence(self) -> list[int]:
        return [self.values[m] for m in sorted(self.values)]

    def as_int_sequence(self) -> IntSequence:
        return IntSequence(tuple(self.sequence()), 1, self.tail, self.tail_value)

    def to_json(self) -> dict:
        return {
            "j": self.j,
            "values": {str(m): v for m, v in sorted(self.values.items())},
            "route": self.route,
            "o_seq": self.o_sequence_check,
            "positive_part": list(self.positive_support.values),
            "tail": self.tail if self.tail != CONSTANT else f"constant({self.tail_value})",
            "si": is_SI_sequence(self.as_int_sequence())[0],
        }


def classify_tail(values: Sequence[int], window: int = 3) -> tuple[str, int]:
    """Zero once a value is 0 (an O-sequence stays 0); constant if the last
    ``window`` values agree; otherwise unknown."""
    if values and values[-1] == 0:
        return ZERO, 0
    if len(values) >= window and len(set(values[-window:])) == 1:
        return CONSTANT, values[-1]
    return UNKNOWN, 0


def _shifted_o_sequence(values: Sequence[int]) -> bool:
    if all(v == 0 for v in values):
        return True
    return bool(is_O_sequence(values))


def av_sequence(X: Ideal, j: int, m_max: int, route: str = "both", trials: int = 2, seed: int = 0,
                gin_result: GinResult | None = None) -> AVReport:
    """AV_{X,j}(1..m_max) by the direct route, the gin route, or both (cross-checked)."""
    if route not in ("direct", "gin_colon", "both"):
        raise ValueError(f"unknown route {route!r}")
    seeds: list = []
    direct = gin_vals = None
    g = gin_result
    if route in ("direct", "both"):
        direct = []
        for m in range(1, m_max + 1):
            v, _, s = _min_over_trials(lambda sd: _av_direct_once(X, j, m, sd), trials, seed, "av-direct")
            direct.append(v)
            seeds = list(s)
    if route in ("gin_colon", "both"):
        if g is None or g.degree_cap < m_max + j:
            g = compute_gin(X, max(trials, 2), seed, m_max + j)
        gin_vals = av_from_gin(g, j, m_max)
        seeds += list(g.seeds_used)
    if direct is not None and gin_vals is not None and direct != gin_vals:
        raise RouteMismatchError(f"AV routes disagree for j={j}: direct {direct} vs gin {gin_vals}")
    vals = gin_vals if gin_vals is not None else direct
    tail, tv = classify_tail(vals)
    pos = IntSequence.finite(vals, 1).positive_support()
    return AVReport(
        j, {m: v for m, v in zip(range(1, m_max + 1), vals)}, route, _shifted_o_sequence(vals),
        IntSequence(pos, 0, tail, tv), tail, tv, tuple(seeds), g,
    )


# -------------------------------------------------------------- verdicts


@dataclass(frozen=True)
class UnexpectednessVerdict:
    t: int
    m: int
    verdict: str
    adim: int
    edim: int
    vdim: int
    witness_hint: str | None = None

    def to_json(self) -> dict:
        return {"t": self.t, "m": self.m, "verdict": self.verdict, "adim": self.adim, "edim": self.edim,
                "vdim": self.vdim, "witness_hint": self.witness_hint}


def detect(X: Ideal, t: int, m: int, trials: int = 2, seed: int = 0) -> UnexpectednessVerdict:
    d = dim_triple(X, t, m, trials, seed)
    hint = None
    if d.verdict == UNEXPECTED and t == m:
        hint = "cone with vertex at the general point"
    return UnexpectednessVerdict(t, m, d.verdict, d.adim, d.edim, d.vdim, hint)


def region(t: int, m: int, a: int) -> str:
    if t < a:
        return "I"
    return "II" if m >= a else "III"


@dataclass
class PersistenceTable:
    alpha: int
    cells: dict  # (t, m) -> dict

    def value(self, t: int, m: int) -> int:
        return self.cells[(t, m)]["T"]

    def is_zero(self) -> bool:
        return all(c["T"] == 0 for c in self.cells.values())

    def nonzero(self) -> list:
        return sorted(k for k, c in self.cells.items() if c["T"])

    def render(self) -> str:
        ts = sorted({t for t, _ in self.cells})
        ms = sorted({m for _, m in self.cells})
        head = "m\\t " + " ".join(f"{t:>6d}" for t in ts)
        lines = [f"alpha = {self.alpha}; cell = T[region]", head]
        for m in ms:
            row = [f"{self.cells[(t, m)]['T']:>3d}[{self.cells[(t, m)]['region']:<3s}]".rjust(6) for t in ts]
            lines.append(f"{m:>3d} " + " ".join(row))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"alpha": self.alpha,
                "cells": [dict(t=t, m=m, **c) for (t, m), c in sorted(self.cells.items())]}


def persistence_table(X: Ideal, t_max: int, m_max: int, trials: int = 2, seed: int = 0) -> PersistenceTable:
    """T_{t,m} = min(adim(X,t,m), AV_{X,t-m}(m)) with regions I/II/III."""
    if t_max < 1 or m_max < 1:
        raise ValueError("bounds must be >= 1")
    a = alpha(X)
    cells = {}
    for t in range(1, t_max + 1):
        for m in range(1, m_max + 1):
            d = dim_triple(X, t, m, trials, seed)
            av = d.adim - d.vdim if t >= m else None
            T = min(d.adim, av) if av is not None else 0
            cells[(t, m)] = {"adim": d.adim, "vdim": d.vdim, "av": av, "T": T, "region": region(t, m, a)}
    return PersistenceTable(a, cells)


@dataclass(frozen=True)
class Certificate:
    alpha: int
    av_value: int
    seeds: tuple
    certified: bool

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "av0_alpha": self.av_value, "certified": self.certified,
                "seeds": list(self.seeds),
                "scope": "all (t, m)" if self.certified else None}


def certify_no_unexpected(X: Ideal, trials: int = 2, seed: int = 0) -> Certificate:
    """If AV_{X,0}(alpha) = 0, no unexpected hypersurface exists for any (t, m).

    The value is computed by the direct route and cross-checked against
    adim - vdim from the moved-point route.
    """
    a = alpha(X)
    v, _, seeds = _min_over_trials(lambda s: _av_direct_once(X, 0, a, s), trials, seed, "av-direct")
    d = dim_triple(X, a, a, trials, seed)
    if d.adim - d.vdim != v:
        raise RouteMismatchError(f"AV_0({a}): direct {v} vs adim - vdim {d.adim - d.vdim}")
    return Certificate(a, v, seeds + d.seeds, v == 0)


@dataclass(frozen=True)
class LexCriterion:
    conclusive: bool
    av_zero: bool | None
    reason: str


def lex_segment_criterion(X: Ideal, t: int, m: int, g: GinResult | None = None, trials: int = 2,
                          seed: int = 0) -> LexCriterion:
    """If [gin]_t is a lex segment and adim(X,t,m) > 0, then AV_{X,t-m}(m) = 0.

    When adim is 0 the value is -vdim outright; the answer is still reported
    as conclusive.
    """
    if g is None:
        g = compute_gin(X, max(trials, 2), seed, t)
    g._need(t)
    if not is_lex_segment(g.monomial_ideal, t):
        return LexCriterion(False, None, f"[gin]_{t} is not a lex segment")
    d = dim_triple(X, t, m, trials, seed)
    if d.adim == 0:
        # AV = adim - vdim holds by definition, so no lex argument is needed
        return LexCriterion(True, d.vdim == 0, f"adim(X,{t},{m}) = 0, so AV = {-d.vdim}")
    return LexCriterion(True, True, f"[gin]_{t} is a lex segment and adim > 0")


# ----------------------------------------------------- complete intersections


def ci_vdim_closed_form(a: int, b: int, n: int, t: int, m: int) -> int:
    return binom(t - a + n, n) + binom(t - b + n, n) - binom(t - a - b + n, n) - binom(m - 1 + n, n)


def ci_vdim_large(a: int, b: int) -> int:
    """Closed form of the above at t = (a-1)(b-1)+1, m = (a-1)(b-1), n = 3, valid past (3,4)."""
    return 1 - (a - 2) * (b - 2) * (a + b - 4) // 2


@dataclass
class SylvesterWitness:
    a: int
    b: int
    j: int
    t: int
    m: int
    F: Polynomial
    G: Polynomial
    matrix: list
    matrix_det: Polynomial
    witness_form: Polynomial
    in_ideal: bool
    strip_ok: bool
    seed: int

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "j": self.j, "t": self.t, "m": self.m,
                "det_degree": self.matrix_det.degree(), "witness_degree": self.witness_form.degree(),
                "in_ideal": self.in_ideal, "x0_strip_ok": self.strip_ok, "seed": self.seed}


def _coef_x0(coeffs: list, deg: int, e: int, zero: Polynomial) -> Polynomial:
    k = deg - e
    return coeffs[k] if 0 <= k <= deg else zero


def _det(M: list, zero: Polynomial, one: Polynomial) -> Polynomial:
    size = len(M)
    memo: dict = {}

    def rec(rows: tuple, col: int) -> Polynomial:
        if col == size:
            return one
        if rows in memo:
            return memo[rows]
        acc = zero
        for pos, r in enumerate(rows):
            e = M[r][col]
            if e.is_zero():
                continue
            sub = rec(rows[:pos] + rows[pos + 1:], col + 1)
            term = e * sub
            acc = acc + term if pos % 2 == 0 else acc - term
        memo[rows] = acc
        return acc

    return rec(tuple(range(size)), 0)


def sylvester_witness(a: int, b: int, j: int, nvars: int = 4, field: FieldSpec | None = None,
                      seed: int = 0) -> SylvesterWitness:
    """Form T in (F, G) of degree (a-j)(b-j)+j whose x0-expansion stops at x0^j with coefficient det(M)."""
    from .field import GF
    from .groebner import contains

    F_ = field or GF
    if not (0 <= j < a <= b):
        raise ValueError("need 0 <= j < a <= b")
    if nvars < 3:
        raise ValueError("need at least three variables")
    zero = Polynomial.zero(nvars, F_)
    one = Polynomial.constant(1, nvars, F_)
    for attempt in range(4):
        s = derive_seed(seed, "sylvester", a, b, j, attempt)
        F = random_form(a, nvars, F_, derive_seed(s, "F"))
        G = random_form(b, nvars, F_, derive_seed(s, "G"))
        fc, gc = x0_coefficients(F), x0_coefficients(G)
        size = a + b - 2 * j
        rows = []
        for k in range(b - j):
            rows.append([_coef_x0(fc, a, j + c - k, zero) for c in range(size)])
        for k in range(a - j):
            rows.append([_coef_x0(gc, b, j + c - k, zero) for c in range(size)])
        det = _det(rows, zero, one)
        if det.is_zero():
            continue
        cof = []
        for i in range(size):
            minor = [r[1:] for k, r in enumerate(rows) if k != i]
            d = _det(minor, zero, one) if minor else one
            cof.append(d if i % 2 == 0 else -d)
        x0 = Polynomial.variable(0, nvars, F_)
        T = zero
        for i in range(b - j):
            T = T + cof[i] * x0**i * F
        for i in range(a - j):
            T = T + cof[b - j + i] * x0**i * G
        t = (a - j) * (b - j) + j
        m = (a - j) * (b - j)
        tc = x0_coefficients(T)
        deg = T.degree()
        strip = deg == t and all(_coef_x0(tc, deg, e, zero).is_zero() for e in range(j + 1, deg + 1)) \
            and _coef_x0(tc, deg, j, zero) == det
        inside = contains(Ideal([F, G], nvars, F_), T)
        return SylvesterWitness(a, b, j, t, m, F, G, rows, det, T, inside, strip, s)
    raise AvkitError("det(M) vanished for four random choices; forms not general enough")


# ------------------------------------------------------------ curves


def degree_genus_from_hf(C: Ideal, t0: int | None = None, window: int = 3) -> tuple[int, int]:
    """(e, g) from h_C(t) = e t - g + 1 on a window where the HF is linear."""
    t0 = t0 if t0 is not None else C.max_generator_degree() + 2
    vals = [hilbert_value(C, t) for t in range(t0, t0 + window + 1)]
    diffs = {vals[i + 1] - vals[i] for i in range(window)}
    if len(diffs) != 1:
        raise AvkitError("Hilbert function not yet linear; increase the degree range")
    e = diffs.pop()
    g = e * t0 + 1 - vals[0]
    return e, g


@dataclass
class CurveFormulaReport:
    e: int
    g: int
    expected: int
    values: dict
    ok: bool

    def to_json(self) -> dict:
        return {"degree": self.e, "genus": self.g, "expected": self.expected,
                "values": {str(k): v for k, v in self.values.items()}, "ok": self.ok}


def curve_av_formula_check(C: Ideal, e: int | None = None, g: int | None = None, t_range=None,
                           trials: int = 2, seed: int = 0) -> CurveFormulaReport:
    """Compare AV_{C,0}(t) with C(e-1, 2) - g for t in ``t_range`` (default e..e+3)."""
    if e is None or g is None:
        e, g = degree_genus_from_hf(C)
    expected = binom(e - 1, 2) - g
    ts = list(t_range) if t_range is not None else list(range(e, e + 4))
    vals = {t: av_value(C, 0, t, trials, seed) for t in ts}
    return CurveFormulaReport(e, g, expected, vals, all(v == expected for v in vals.values()))


@dataclass
class AdditivityReport:
    t: int
    e: int
    g: int
    av_union: int
    av_points: int
    ok: bool


def union_additivity_check(points: Ideal, curve: Ideal, t: int, e: int | None = None, g: int | None = None,
                           trials: int = 2, seed: int = 0) -> AdditivityReport:
    """AV_{X ∪ C,0}(t + e) against AV_{X,0}(t) + C(e-1, 2) - g."""
    from .geometry import intersect_ideals

    if e is None or g is None:
        e, g = degree_genus_from_hf(curve)
    U = intersect_ideals(points, curve)
    lhs = av_value(U, 0, t + e, trials, seed)
    rhs = av_value(points, 0, t, trials, seed)
    return AdditivityReport(t, e, g, lhs, rhs, lhs == rhs + binom(e - 1, 2) - g)


# ------------------------------------------------------------ conjecture harness


@dataclass
class HarnessReport:
    values: list
    checks: dict
    verdict: str

    def to_json(self) -> dict:
        return {"values": self.values, "checks": self.checks, "verdict": self.verdict}


def increasing_part(v: Sequence[int]) -> tuple:
    v = tuple(v)
    k = 1
    while k < len(v) and v[k] >= v[k - 1]:
        k += 1
    return v[:k]


def conjecture_harness(X: Ideal, degree: int, m_max: int = 8, trials: int = 2, seed: int = 0,
                       route: str = "both") -> HarnessReport:
    """Numerical experiment on AV_{X,1}: SI shape and end degree deg X - 6 (shifted).

    Reports pass, fail or undetermined; it proves nothing.
    """
    rep = av_sequence(X, 1, m_max, route, trials, seed)
    seq = rep.as_int_sequence()
    pos = seq.positive_support()
    fin = is_finite(seq)
    si, why = is_SI_sequence(seq)
    last_m = max((m for m, v in rep.values.items() if v > 0), default=None)
    checks = {
        "nonzero": bool(pos),
        "unimodal": is_unimodal(pos),
        "finite": fin,
        "symmetric": is_symmetric(seq) if fin else None,
        "si": si,
        "si_reason": why,
        "ends_in_degree": None if last_m is None else last_m - 1,
        "end_degree_ok": None if (last_m is None or not fin) else (last_m - 1 == degree - 6),
        "increasing_part_differentiable": bool(is_differentiable(increasing_part(pos))),
    }
    flags = [checks[k] for k in ("nonzero", "unimodal", "finite", "symmetric", "si", "end_degree_ok")]
    if any(f is False for f in flags):
        verdict = "fail"
    elif any(f is None for f in flags):
        verdict = "undetermined"
    else:
        verdict = "pass"
    return HarnessReport(rep.sequence(), checks, verdict)
