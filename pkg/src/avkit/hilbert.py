"""Hilbert functions and h-vectors."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import AvkitError, BudgetExhausted
from .ideal import Ideal
from .monomial_ideal import MonomialIdeal
from .poly import DEGREVLEX, LEX, MonomialOrder, binom


def standard_monomial_count(M: MonomialIdeal, t: int) -> int:
    if t < 0:
        raise ValueError("degree must be non-negative")
    return binom(t + M.nvars - 1, M.nvars - 1) - M.dim_piece(t)


@dataclass(frozen=True)
class HilbertFunction:
    values: tuple
    offset: int = 0
    stable_from: int | None = None

    def __getitem__(self, t: int) -> int:
        k = t - self.offset
        if k < 0:
            return 0
        if k < len(self.values):
            return self.values[k]
        if self.stable_from is not None:
            return self.values[-1]
        raise IndexError(f"degree {t} beyond the computed window")

    def __len__(self) -> int:
        return len(self.values)

    def to_json(self) -> dict:
        return {"offset": self.offset, "values": list(self.values), "stable_from": self.stable_from}


@dataclass(frozen=True)
class HVector:
    entries: tuple

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def degree(self) -> int:
        return sum(self.entries)

    def to_json(self) -> dict:
        return {"offset": 0, "values": list(self.entries)}


def _check(I: Ideal):
    if not I.is_homogeneous:
        raise AvkitError("Hilbert functions need a homogeneous ideal")


def lex_initial_piece(I: Ideal, t: int) -> list:
    """Degree-t monomials of in_lex(I), read off the echelon basis of [I]_t."""
    from .graded import graded_piece, lex_leading_monomials

    return lex_leading_monomials(graded_piece(I, t), I.nvars, t)


def initial_ideal_upto(I: Ideal, t_max: int, order: MonomialOrder = LEX) -> MonomialIdeal:
    """An initial ideal of I, correct in degrees <= t_max."""
    _check(I)
    if order == LEX:
        return MonomialIdeal(I.nvars, tuple(m for t in range(t_max + 1) for m in lex_initial_piece(I, t)))
    from .groebner import groebner_basis

    G = groebner_basis(I, order, degree_bound=t_max)
    return MonomialIdeal(I.nvars, tuple(g.leading_monomial(order) for g in G))


def hilbert_function(I: Ideal, t_max: int, order: MonomialOrder = LEX) -> HilbertFunction:
    """h_{R/I}(t) for 0 <= t <= t_max via standard monomials of an initial ideal.

    ``stable_from`` is set to the first degree of a run of two equal values
    lying past the last generator degree.
    """
    M = initial_ideal_upto(I, t_max, order)
    vals = tuple(standard_monomial_count(M, t) for t in range(t_max + 1))
    return HilbertFunction(vals, 0, _stable_from(vals, I.max_generator_degree()))


def _stable_from(vals, gen_degree: int) -> int | None:
    for t in range(max(1, gen_degree + 1), len(vals)):
        if vals[t] == vals[t - 1]:
            return t - 1
    return None


def graded_dim_ideal(I: Ideal, t: int) -> int:
    from .graded import dim_graded

    _check(I)
    return dim_graded(I, t) if t >= 0 else 0


def hilbert_value(I: Ideal, t: int) -> int:
    return binom(t + I.nvars - 1, I.nvars - 1) - graded_dim_ideal(I, t) if t >= 0 else 0


def h_vector(I: Ideal, t_limit: int = 80) -> HVector:
    """First differences of h_{R/I} up to stabilization (points or artinian)."""
    _check(I)
    gen_degree = I.max_generator_degree()
    prev = None
    diffs = []
    for t in range(t_limit + 1):
        v = hilbert_value(I, t)
        diffs.append(v - (prev if prev is not None else 0))
        if prev is not None and v == prev and t - 1 >= gen_degree:
            while diffs and diffs[-1] == 0:
                diffs.pop()
            return HVector(tuple(diffs))
        prev = v
    raise BudgetExhausted(f"Hilbert function did not stabilize by degree {t_limit}", {"t_limit": t_limit})


def alpha(I: Ideal, t_limit: int = 200) -> int:
    """Initial degree: least t with [I]_t != 0."""
    if I.is_zero():
        raise AvkitError("the zero ideal has no initial degree")
    for t in range(t_limit + 1):
        if graded_dim_ideal(I, t) > 0:
            return t
    raise BudgetExhausted("initial degree not found", {"t_limit": t_limit})


__all__ = [
    "HilbertFunction", "HVector", "standard_monomial_count", "hilbert_function", "graded_dim_ideal",
    "hilbert_value", "h_vector", "alpha", "initial_ideal_upto", "lex_initial_piece", "DEGREVLEX", "LEX",
]
