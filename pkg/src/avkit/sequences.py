"""Integer sequences: Macaulay representations, O-sequences, SI-sequences."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .poly import binom

ZERO, CONSTANT, UNKNOWN = "zero", "constant", "unknown"


@dataclass(frozen=True)
class IntSequence:
    """Finite window of a non-negative sequence plus what is known after it.

    ``tail`` is ``"zero"`` (the sequence is finite), ``"constant"`` (it
    continues with ``tail_value`` forever) or ``"unknown"``.
    """

    values: tuple
    offset: int = 0
    tail: str = ZERO
    tail_value: int = 0

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if any(v < 0 for v in self.values):
            raise ValueError("sequence entries must be non-negative")
        if self.tail not in (ZERO, CONSTANT, UNKNOWN):
            raise ValueError(f"bad tail {self.tail!r}")

    @classmethod
    def finite(cls, values: Sequence[int], offset: int = 0) -> "IntSequence":
        return cls(tuple(values), offset, ZERO)

    def __getitem__(self, d: int) -> int | None:
        k = d - self.offset
        if k < 0:
            return 0
        if k < len(self.values):
            return self.values[k]
        if self.tail == ZERO:
            return 0
        if self.tail == CONSTANT:
            return self.tail_value
        return None

    def __len__(self) -> int:
        return len(self.values)

    def positive_support(self) -> tuple:
        """Entries from the first to the last positive one."""
        pos = [i for i, v in enumerate(self.values) if v > 0]
        if not pos:
            return ()
        return self.values[pos[0]:pos[-1] + 1]

    def to_json(self) -> dict:
        out = {"offset": self.offset, "values": list(self.values), "tail": self.tail}
        if self.tail == CONSTANT:
            out["tail_value"] = self.tail_value
        return out


def _as_values(s) -> tuple:
    return s.values if isinstance(s, IntSequence) else tuple(int(v) for v in s)


# -------------------------------------------------------------- Macaulay


def macaulay_rep(a: int, d: int) -> list[tuple[int, int]]:
    """The d-binomial expansion a = sum C(k_i, i), as pairs (k_i, i) with i descending."""
    if a < 0 or d < 1:
        raise ValueError("need a >= 0 and d >= 1")
    out = []
    i = d
    while a > 0 and i >= 1:
        lo, hi = i, i + 1  # largest k with C(k, i) <= a
        while binom(hi, i) <= a:
            lo, hi = hi, 2 * hi
        while hi - lo > 1:
            mid = (lo + hi) // 2
            lo, hi = (mid, hi) if binom(mid, i) <= a else (lo, mid)
        k = lo
        out.append((k, i))
        a -= binom(k, i)
        i -= 1
    return out


def macaulay_growth(a: int, d: int) -> int:
    """a^<d>: the largest possible value in degree d+1 after a in degree d."""
    return sum(binom(k + 1, i + 1) for k, i in macaulay_rep(a, d))


@dataclass(frozen=True)
class Check:
    ok: bool
    index: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def is_O_sequence(s) -> Check:
    """s(0) = 1 and s(d+1) <= s(d)^<d> for d >= 1, on the stored window."""
    v = _as_values(s)
    if not v:
        return Check(False, 0, "empty sequence")
    if v[0] != 1:
        return Check(False, 0, "s(0) != 1")
    for d in range(1, len(v) - 1):
        bound = macaulay_growth(v[d], d)
        if v[d + 1] > bound:
            return Check(False, d + 1, f"s({d + 1}) = {v[d + 1]} exceeds {v[d]}^<{d}> = {bound}")
    return Check(True)


def first_difference(s) -> tuple:
    v = _as_values(s)
    return tuple(v[i] - (v[i - 1] if i else 0) for i in range(len(v)))


def is_unimodal(s) -> bool:
    v = _as_values(s)
    i = 0
    while i + 1 < len(v) and v[i + 1] >= v[i]:
        i += 1
    while i + 1 < len(v) and v[i + 1] <= v[i]:
        i += 1
    return i == len(v) - 1 if v else True


def is_symmetric(s) -> bool:
    v = s.positive_support() if isinstance(s, IntSequence) else IntSequence.finite(_as_values(s)).positive_support()
    return v == v[::-1]


def is_finite(s) -> bool | None:
    """True/False, or None when the tail is unknown."""
    if not isinstance(s, IntSequence):
        return True
    if s.tail == ZERO:
        return True
    if s.tail == CONSTANT:
        return s.tail_value == 0
    return None


def first_half(v: Sequence[int]) -> tuple:
    """Indices 0 .. ceil(len/2) - 1."""
    v = tuple(v)
    return v[: (len(v) + 1) // 2]


def is_differentiable(s) -> Check:
    d = first_difference(s)
    if any(x < 0 for x in d):
        return Check(False, next(i for i, x in enumerate(d) if x < 0), "first difference has a negative entry")
    return is_O_sequence(d)


def is_SI_sequence(s) -> tuple[bool | None, str]:
    """(verdict, reason); verdict None means undetermined (unknown tail)."""
    seq = s if isinstance(s, IntSequence) else IntSequence.finite(_as_values(s))
    fin = is_finite(seq)
    if fin is None:
        return None, "tail undetermined"
    if not fin:
        return False, "not finite"
    v = seq.positive_support()
    if not v:
        return False, "zero sequence"
    if v != v[::-1]:
        return False, "not symmetric"
    chk = is_O_sequence(v)
    if not chk:
        return False, f"not an O-sequence ({chk.reason})"
    half = is_differentiable(first_half(v))
    if not half:
        return False, f"first half not differentiable ({half.reason})"
    return True, "SI-sequence"
