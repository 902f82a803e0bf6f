"""Exact coefficient fields and deterministic seed derivation.

Two modes are supported: the rationals (``fractions.Fraction``) and a prime
field F_p with elements stored as Python ints in ``[0, p)``.  Prime-field
results are probabilistic in the Schwartz-Zippel sense and are labelled so.
"""
from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import FieldMismatchError, ParseError

DEFAULT_PRIME = 2**31 - 1
PRIME_FLOOR = 2**20
RATIONAL_POOL = 2**15


def derive_seed(seed: int, *labels) -> int:
    """Split ``seed`` into an independent 64-bit child seed.

    The child is the first 8 bytes of blake2b over the parent seed and the
    labels, so any tree of derivations replays bit-identically.
    """
    h = hashlib.blake2b(digest_size=8)
    h.update(int(seed).to_bytes(16, "little", signed=True))
    for lab in labels:
        h.update(b"\x1f")
        h.update(str(lab).encode())
    return int.from_bytes(h.digest(), "little")


def rng_for(seed: int, *labels) -> np.random.Generator:
    return np.random.default_rng(derive_seed(seed, *labels) if labels else int(seed) & (2**64 - 1))


@lru_cache(maxsize=64)
def _is_prime(p: int) -> bool:
    from sympy import isprime

    return bool(isprime(p))


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``p=None`` for Q, otherwise the prime p."""

    p: int | None = None

    # constructors -----------------------------------------------------
    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME, floor: int = PRIME_FLOOR) -> "FieldSpec":
        if p < floor:
            raise ValueError(f"prime modulus {p} is below the floor {floor}")
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= 2**31:
            # int64 kernels multiply two residues without overflow only below 2^31
            raise ValueError("prime modulus must be < 2^31")
        return cls(p)

    @classmethod
    def from_label(cls, label: str) -> "FieldSpec":
        label = label.strip().lower()
        if label in ("q", "qq", "rationals", "rational"):
            return cls.rationals()
        m = re.fullmatch(r"(?:fp|gf|zz/|p)[:=]?(\d+)", label)
        if m:
            return cls.prime(int(m.group(1)))
        raise ValueError(f"unknown field label {label!r}")

    # descriptive ------------------------------------------------------
    @property
    def is_prime(self) -> bool:
        return self.p is not None

    @property
    def label(self) -> str:
        return "rationals" if self.p is None else f"fp:{self.p}"

    @property
    def mode(self) -> str:
        """'exact' over Q; 'probabilistic' over F_p."""
        return "exact" if self.p is None else "probabilistic"

    @property
    def dtype(self):
        return object if self.p is None else np.int64

    def __str__(self) -> str:
        return self.label

    def check_same(self, other: "FieldSpec") -> None:
        if self != other:
            raise FieldMismatchError(f"field mismatch: {self.label} vs {other.label}")

    # arithmetic -------------------------------------------------------
    def __call__(self, x):
        """Coerce an int, Fraction or numeric string into the field."""
        if isinstance(x, str):
            x = Fraction(x)
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator {x.denominator} vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def inv(self, a):
        if self.p is None:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else a * b % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def signed(self, a):
        """Representative used for printing: symmetric residue in F_p."""
        if self.p is None:
            return a
        a = int(a)
        return a - self.p if a > self.p // 2 else a

    def sqrt(self, a):
        """A square root in F_p, or None if ``a`` is a non-residue."""
        if self.p is None:
            raise NotImplementedError("square roots are only provided over F_p")
        from sympy.ntheory import sqrt_mod

        r = sqrt_mod(int(a) % self.p, self.p)
        return None if r is None else int(r)

    # randomness -------------------------------------------------------
    def random_elements(self, rng: np.random.Generator, count: int) -> list:
        """``count`` draws from the coefficient pool."""
        if self.p is None:
            vals = rng.integers(-RATIONAL_POOL, RATIONAL_POOL + 1, size=count)
            return [Fraction(int(v)) for v in vals]
        vals = rng.integers(0, self.p, size=count)
        return [int(v) for v in vals]

    def random_nonzero(self, rng: np.random.Generator):
        while True:
            (c,) = self.random_elements(rng, 1)
            if c != 0:
                return c

    def pool_size(self) -> int:
        return 2 * RATIONAL_POOL + 1 if self.p is None else self.p

    # arrays -----------------------------------------------------------
    def array(self, rows, ncols: int | None = None) -> np.ndarray:
        """A 2-d array of field elements with the kernel's dtype."""
        if isinstance(rows, np.ndarray) and rows.dtype == self.dtype and rows.ndim == 2:
            return rows
        if self.p is None:
            lst = [[Fraction(x) for x in r] for r in rows]
            if not lst:
                return np.empty((0, ncols or 0), dtype=object)
            arr = np.empty((len(lst), len(lst[0])), dtype=object)
            for i, r in enumerate(lst):
                arr[i, :] = r
            return arr
        arr = np.array([[int(x) % self.p for x in r] for r in rows], dtype=np.int64)
        if arr.size == 0:
            return np.zeros((len(arr), ncols or 0), dtype=np.int64)
        return arr

    def zeros(self, shape) -> np.ndarray:
        if self.p is None:
            z = np.empty(shape, dtype=object)
            z.fill(Fraction(0))
            return z
        return np.zeros(shape, dtype=np.int64)


def parse_scalar(text: str, field: FieldSpec, line: int = 1, column: int = 1):
    try:
        return field(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad coefficient {text!r}: {exc}", line, column) from None


QQ = FieldSpec.rationals()
GF = FieldSpec(DEFAULT_PRIME)
