"""The Ideal container: generators plus lazily filled, lock-protected caches."""
from __future__ import annotations

import threading
from typing import Iterable, Sequence

from .errors import DimensionError, FieldMismatchError
from .field import FieldSpec, GF
from .poly import Polynomial, parse_polynomial, variable_names


class Ideal:
    """Homogeneous-capable polynomial ideal.

    Caches (reduced Groebner bases per order, echelon bases of graded
    pieces) are filled on demand and guarded by a lock, so concurrent
    readers trigger at most one computation per key.
    """

    def __init__(
        self,
        generators: Iterable[Polynomial],
        nvars: int | None = None,
        field: FieldSpec | None = None,
        *,
        saturated: bool | None = None,
        name: str | None = None,
    ):
        gens = [g for g in generators]
        if nvars is None:
            if not gens:
                raise DimensionError("nvars is required for an ideal without generators")
            nvars = gens[0].nvars
        if field is None:
            field = gens[0].field if gens else GF
        for g in gens:
            if g.nvars != nvars:
                raise DimensionError(f"generator in {g.nvars} variables, ideal in {nvars}")
            if g.field != field:
                raise FieldMismatchError(f"generator over {g.field.label}, ideal over {field.label}")
        self.nvars = nvars
        self.field = field
        self.generators = tuple(g for g in gens if not g.is_zero())
        self.is_homogeneous = all(g.is_homogeneous() for g in self.generators)
        self.is_saturated = saturated
        self.name = name
        self.meta: dict = {}
        self._lock = threading.RLock()
        self._gb: dict = {}
        self._pieces: dict = {}
        self._oracle = None  # optional t -> spanning rows of [I]_t, trusted over the generators

    @classmethod
    def parse(cls, lines: Sequence[str], nvars: int, field: FieldSpec = GF, **kw) -> "Ideal":
        return cls([parse_polynomial(s, nvars, field) for s in lines], nvars, field, **kw)

    def is_zero(self) -> bool:
        return not self.generators

    def max_generator_degree(self) -> int:
        return max((g.degree() for g in self.generators), default=-1)

    def min_generator_degree(self) -> int:
        return min((g.degree() for g in self.generators), default=-1)

    def groebner_basis(self, order=None, **kw):
        from .groebner import groebner_basis
        from .poly import DEGREVLEX

        return groebner_basis(self, order or DEGREVLEX, **kw)

    def piece(self, t: int):
        from .graded import graded_piece

        return graded_piece(self, t)

    def to_lines(self, names=None) -> list[str]:
        names = names or variable_names(self.nvars)
        return [g.to_str(names) for g in self.generators]

    def with_flags(self, **flags) -> "Ideal":
        out = Ideal(self.generators, self.nvars, self.field, saturated=flags.get("saturated", self.is_saturated),
                    name=flags.get("name", self.name))
        out.meta = dict(self.meta)
        out._oracle = self._oracle
        out._pieces = dict(self._pieces)
        return out

    def __repr__(self) -> str:
        body = ", ".join(self.to_lines()[:6])
        more = "" if len(self.generators) <= 6 else f", ... ({len(self.generators)} generators)"
        return f"Ideal({body}{more}; nvars={self.nvars}, field={self.field.label})"
