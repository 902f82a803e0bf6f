"""Monomial ideals stored by minimal generators."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .errors import DimensionError, ParseError
from .poly import LEX, MonomialOrder, divides, monomials_of_degree, variable_names


def minimalize(monos: Iterable[tuple]) -> tuple:
    """Antichain of minimal elements under divisibility, lex-descending."""
    ms = sorted(set(tuple(m) for m in monos), key=sum)
    keep: list = []
    for m in ms:
        if not any(divides(g, m) for g in keep):
            keep.append(m)
    return tuple(sorted(keep, reverse=True))


@lru_cache(maxsize=256)
def _degree_array(nvars: int, t: int) -> np.ndarray:
    mons = monomials_of_degree(nvars, t)
    if not mons:
        return np.zeros((0, nvars), dtype=np.int32)
    return np.array(mons, dtype=np.int32)


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    generators: tuple

    def __post_init__(self):
        gens = tuple(tuple(int(e) for e in g) for g in self.generators)
        for g in gens:
            if len(g) != self.nvars:
                raise DimensionError(f"generator {g} not in {self.nvars} variables")
        object.__setattr__(self, "generators", minimalize(gens))

    @classmethod
    def zero(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, ())

    @classmethod
    def maximal(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, tuple(tuple(int(i == j) for j in range(nvars)) for i in range(nvars)))

    # membership and pieces ------------------------------------------------
    def contains(self, m: tuple) -> bool:
        return any(divides(g, m) for g in self.generators)

    __contains__ = contains

    def _mask(self, t: int) -> np.ndarray:
        """Boolean membership vector over degree-t monomials (lex-descending)."""
        mons = _degree_array(self.nvars, t)
        gens = [g for g in self.generators if sum(g) <= t]
        inside = np.zeros(len(mons), dtype=bool)
        if not gens or len(mons) == 0:
            return inside
        G = np.array(gens, dtype=np.int32)
        # chunk so the (monomials x generators x nvars) comparison stays small
        step = max(1, 2_000_000 // (len(gens) * self.nvars))
        for s in range(0, len(mons), step):
            block = mons[s:s + step]
            inside[s:s + step] = (block[:, None, :] >= G[None, :, :]).all(axis=2).any(axis=1)
        return inside

    def piece(self, t: int) -> list:
        """Degree-t monomials of the ideal, lex-descending."""
        mons = monomials_of_degree(self.nvars, t)
        mask = self._mask(t)
        return [m for m, k in zip(mons, mask) if k]

    def standard_monomials(self, t: int) -> list:
        mons = monomials_of_degree(self.nvars, t)
        mask = self._mask(t)
        return [m for m, k in zip(mons, mask) if not k]

    def dim_piece(self, t: int) -> int:
        return int(self._mask(t).sum())

    def max_degree(self) -> int:
        return max((sum(g) for g in self.generators), default=-1)

    def truncate(self, cap: int) -> "MonomialIdeal":
        return MonomialIdeal(self.nvars, tuple(g for g in self.generators if sum(g) <= cap))

    def is_artinian(self) -> bool:
        pure = {i for g in self.generators for i in range(self.nvars) if g[i] == sum(g) and sum(g) > 0}
        return len(pure) == self.nvars

    # operations -----------------------------------------------------------
    def colon_monomial(self, u: tuple) -> "MonomialIdeal":
        return MonomialIdeal(self.nvars, tuple(tuple(max(a - b, 0) for a, b in zip(g, u)) for g in self.generators))

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.nvars, self.generators + other.generators)

    def intersection(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(
            self.nvars,
            tuple(tuple(max(a, b) for a, b in zip(g, h)) for g in self.generators for h in other.generators),
        )

    def __le__(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(g) for g in self.generators)

    # serialization ----------------------------------------------------------
    def to_text(self, names=None) -> str:
        names = names or variable_names(self.nvars)
        out = []
        for g in self.generators:
            s = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, g) if e)
            out.append(s or "1")
        return "(" + ", ".join(out) + ")"

    def to_json(self) -> dict:
        return {"nvars": self.nvars, "order": "lex", "generators": [list(g) for g in self.generators]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data) -> "MonomialIdeal":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["nvars"]), tuple(tuple(g) for g in data["generators"]))

    @classmethod
    def from_text(cls, text: str, nvars: int) -> "MonomialIdeal":
        from .poly import parse_polynomial

        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        gens = []
        for chunk in body.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            f = parse_polynomial(chunk, nvars)
            if len(f.terms) != 1:
                raise ParseError(f"{chunk!r} is not a monomial")
            gens.append(next(iter(f.terms)))
        return cls(nvars, tuple(gens))

    def __str__(self) -> str:
        return self.to_text()


def sort_monomials(monos, order: MonomialOrder = LEX) -> list:
    return sorted(monos, key=order.key, reverse=True)
