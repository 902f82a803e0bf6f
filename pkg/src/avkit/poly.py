"""Monomials, monomial orders, sparse polynomials and linear changes of variables.

Variables are x0 > x1 > ... > x_{n-1}.  A monomial is a tuple of exponents.
Polynomials are immutable maps monomial -> nonzero field element.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import DimensionError, FieldMismatchError, ParseError, SingularMatrixError
from .field import FieldSpec, GF, rng_for

Monomial = tuple

MAX_NVARS = 8
# one auxiliary variable on top of the user-facing cap (ideal intersection)
MAX_INTERNAL_NVARS = MAX_NVARS + 1

ALIASES = ("x", "y", "z", "w")


def binom(n: int, k: int) -> int:
    """Binomial coefficient that is 0 whenever n < k or either argument is negative."""
    if k < 0 or n < k or n < 0:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, d: int) -> tuple:
    """All degree-d monomials in ``nvars`` variables, lex-descending."""
    if d < 0:
        return ()
    if nvars == 1:
        return ((d,),)
    out = []
    for a in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - a):
            out.append((a,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, d: int) -> dict:
    return {m: i for i, m in enumerate(monomials_of_degree(nvars, d))}


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def unit(nvars: int, i: int, e: int = 1) -> Monomial:
    m = [0] * nvars
    m[i] = e
    return tuple(m)


# ---------------------------------------------------------------- orders


@dataclass(frozen=True)
class MonomialOrder:
    """``kind`` is 'lex', 'degrevlex' or 'elim'.

    'elim' with ``block = k`` compares the first k variables by degrevlex
    and breaks ties by degrevlex on the rest; it is an elimination order for
    x0..x_{k-1} and is used internally by elimination and intersection.
    """

    kind: str
    block: int = 0

    def key(self, m: Monomial):
        if self.kind == "lex":
            return m
        if self.kind == "degrevlex":
            return (sum(m), tuple(-e for e in reversed(m)))
        if self.kind == "elim":
            k = self.block
            a, b = m[:k], m[k:]
            return (sum(a), tuple(-e for e in reversed(a)), sum(b), tuple(-e for e in reversed(b)))
        raise ValueError(f"unknown order {self.kind}")

    def __str__(self) -> str:
        return self.kind if self.kind != "elim" else f"elim({self.block})"


LEX = MonomialOrder("lex")
DEGREVLEX = MonomialOrder("degrevlex")


def elimination_order(k: int) -> MonomialOrder:
    return MonomialOrder("elim", k)


def order_from_name(name: str) -> MonomialOrder:
    name = name.lower()
    if name == "lex":
        return LEX
    if name in ("degrevlex", "grevlex", "drl"):
        return DEGREVLEX
    raise ValueError(f"unknown monomial order {name!r}")


def monomial_compare(a: Monomial, b: Monomial, order: MonomialOrder = LEX) -> int:
    """-1, 0 or 1 as ``a`` is smaller, equal or larger than ``b``."""
    if len(a) != len(b):
        raise DimensionError(f"monomials in {len(a)} and {len(b)} variables")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


# ------------------------------------------------------------ polynomials


def variable_names(nvars: int) -> list[str]:
    if nvars <= len(ALIASES):
        return list(ALIASES[:nvars])
    return [f"x{i}" for i in range(nvars)]


class Polynomial:
    """Sparse polynomial with a declared number of variables and field."""

    __slots__ = ("nvars", "field", "terms", "_hash")

    def __init__(self, nvars: int, field: FieldSpec = GF, terms: Mapping | None = None, *, _clean: bool = False):
        if not 1 <= nvars <= MAX_INTERNAL_NVARS:
            raise DimensionError(f"nvars must be in 1..{MAX_INTERNAL_NVARS}, got {nvars}")
        self.nvars = nvars
        self.field = field
        self._hash = None
        if _clean:
            self.terms = dict(terms) if terms else {}
            return
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != nvars or min(m, default=0) < 0:
                raise DimensionError(f"bad exponent vector {m} for {nvars} variables")
            c = field(c)
            if c != 0:
                clean[m] = field.add(clean.get(m, field.zero()), c)
                if clean[m] == 0:
                    del clean[m]
        self.terms = clean

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int, field: FieldSpec = GF) -> "Polynomial":
        return cls(nvars, field, {}, _clean=True)

    @classmethod
    def constant(cls, c, nvars: int, field: FieldSpec = GF) -> "Polynomial":
        return cls(nvars, field, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i: int, nvars: int, field: FieldSpec = GF) -> "Polynomial":
        if not 0 <= i < nvars:
            raise DimensionError(f"variable x{i} outside {nvars} variables")
        return cls(nvars, field, {unit(nvars, i): 1})

    @classmethod
    def monomial(cls, m: Monomial, field: FieldSpec = GF, coeff=1) -> "Polynomial":
        return cls(len(m), field, {tuple(m): coeff})

    @classmethod
    def from_vector(cls, vec: Sequence, nvars: int, degree: int, field: FieldSpec) -> "Polynomial":
        mons = monomials_of_degree(nvars, degree)
        terms = {}
        for m, c in zip(mons, vec):
            c = field(c) if field.p is None else int(c)
            if c != 0:
                terms[m] = c
        return cls(nvars, field, terms, _clean=True)

    @classmethod
    def parse(cls, text: str, nvars: int, field: FieldSpec = GF, line: int = 1) -> "Polynomial":
        return parse_polynomial(text, nvars, field, line=line)

    # basic queries ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial(self.nvars, self.field, {m: c for m, c in self.terms.items() if sum(m) == d}, _clean=True)

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> list:
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def leading_term(self, order: MonomialOrder = DEGREVLEX):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Monomial:
        return self.leading_term(order)[0]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(self.field.inv(c))

    def coefficient(self, m: Monomial):
        return self.terms.get(tuple(m), self.field.zero())

    def to_vector(self, degree: int | None = None) -> list:
        """Coefficients on the lex-descending monomial basis of one degree."""
        d = self.degree() if degree is None else degree
        if not self.is_homogeneous() or (self.terms and self.degree() != d):
            raise ValueError("to_vector needs a homogeneous polynomial of the stated degree")
        idx = monomial_index(self.nvars, d)
        vec = [self.field.zero()] * len(idx)
        for m, c in self.terms.items():
            vec[idx[m]] = c
        return vec

    def evaluate(self, point: Sequence):
        F = self.field
        pt = [F(x) for x in point]
        total = F.zero()
        for m, c in self.terms.items():
            v = c
            for x, e in zip(pt, m):
                if e:
                    v = F.mul(v, x**e if F.p is None else pow(x, e, F.p))
            total = F.add(total, v)
        return total

    # arithmetic ---------------------------------------------------------
    def _check(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")
        if other.nvars != self.nvars:
            raise DimensionError(f"{self.nvars} vs {other.nvars} variables")
        if other.field != self.field:
            raise FieldMismatchError(f"field mismatch: {self.field.label} vs {other.field.label}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.nvars, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = F.add(t.get(m, 0), c)
            if s == 0:
                t.pop(m, None)
            else:
                t[m] = s
        return Polynomial(self.nvars, F, t, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Polynomial(self.nvars, F, {m: F.neg(c) for m, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        F = self.field
        c = F(c) if not (F.p is not None and isinstance(c, int) and 0 <= c < F.p) else c
        if c == 0:
            return Polynomial.zero(self.nvars, F)
        return Polynomial(self.nvars, F, {m: F.mul(v, c) for m, v in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        p = F.p
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = t.get(m, 0) + c1 * c2
                t[m] = v % p if p else v
        return Polynomial(self.nvars, F, {m: c for m, c in t.items() if c != 0}, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.nvars, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, u: Monomial, c=1) -> "Polynomial":
        F = self.field
        c = F(c)
        return Polynomial(self.nvars, F, {mono_mul(m, u): F.mul(v, c) for m, v in self.terms.items()}, _clean=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars, self.field)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.field == other.field and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, self.field, frozenset(self.terms.items())))
        return self._hash

    # ring changes -------------------------------------------------------
    def embed(self, nvars: int, offset: int = 0) -> "Polynomial":
        """View in a bigger ring, shifting variable i to i + offset."""
        if offset + self.nvars > nvars:
            raise DimensionError("target ring too small")
        pad_l, pad_r = (0,) * offset, (0,) * (nvars - offset - self.nvars)
        return Polynomial(nvars, self.field, {pad_l + m + pad_r: c for m, c in self.terms.items()}, _clean=True)

    def restrict(self, nvars: int, offset: int = 0) -> "Polynomial":
        """Inverse of :meth:`embed`; the dropped variables must not occur."""
        out = {}
        for m, c in self.terms.items():
            if any(m[:offset]) or any(m[offset + nvars:]):
                raise DimensionError("polynomial involves a dropped variable")
            out[m[offset:offset + nvars]] = c
        return Polynomial(nvars, self.field, out, _clean=True)

    # printing -----------------------------------------------------------
    def to_str(self, names: Sequence[str] | None = None, order: MonomialOrder = DEGREVLEX) -> str:
        names = list(names) if names is not None else variable_names(self.nvars)
        if not self.terms:
            return "0"
        F = self.field
        parts = []
        for m, c in self.sorted_terms(order):
            c = F.signed(c)
            neg = c < 0
            a = -c if neg else c
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append(("-" if neg else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_str()!r}, nvars={self.nvars}, field={self.field.label})"


# ------------------------------------------------------------------ parser

_TOKEN_RE = re.compile(r"(?P<num>\d+(?:/\d+)?)|(?P<var>x\d+|[xyzw])|(?P<op>[-+*^])|(?P<ws>\s+)")


def _tokenize(text: str, line: int):
    pos = 0
    toks = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos + 1)
        if m.lastgroup != "ws":
            toks.append((m.lastgroup, m.group(), pos + 1))
        pos = m.end()
    return toks


def _var_index(name: str, nvars: int, line: int, col: int) -> int:
    if name in ALIASES:
        i = ALIASES.index(name)
    else:
        i = int(name[1:])
        if i > MAX_NVARS - 1:
            raise ParseError(f"variable {name} exceeds x{MAX_NVARS - 1}", line, col)
    if i >= nvars:
        raise ParseError(f"variable {name} outside the {nvars}-variable ring", line, col)
    return i


def parse_polynomial(text: str, nvars: int, field: FieldSpec = GF, line: int = 1) -> Polynomial:
    """Parse the grammar: integer or p/q coefficients, x0..x7 (or x,y,z,w), ^, optional *."""
    toks = _tokenize(text, line)
    if not toks:
        raise ParseError("empty polynomial", line, 1)
    terms: dict = {}
    i = 0
    n = len(toks)
    expect_term = True
    while i < n:
        sign = 1
        kind, val, col = toks[i]
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
            if i == n:
                raise ParseError("dangling sign", line, col)
        elif not expect_term:
            raise ParseError(f"expected '+' or '-' before {val!r}", line, col)
        elif i > 0:
            raise ParseError(f"expected '+' or '-' before {val!r}", line, col)
        coeff = Fraction(sign)
        expo = [0] * nvars
        nfactors = 0
        while i < n:
            kind, val, col = toks[i]
            if kind == "op" and val == "*":
                if nfactors == 0:
                    raise ParseError("'*' without a left factor", line, col)
                i += 1
                if i == n or toks[i][0] not in ("num", "var"):
                    raise ParseError("'*' must be followed by a factor", line, col)
                continue
            if kind == "num":
                try:
                    coeff *= Fraction(val)
                except ZeroDivisionError:
                    raise ParseError(f"zero denominator in {val!r}", line, col) from None
                i += 1
                nfactors += 1
                if i < n and toks[i][1] == "^":
                    raise ParseError("exponent on a coefficient", line, toks[i][2])
                continue
            if kind == "var":
                v = _var_index(val, nvars, line, col)
                i += 1
                e = 1
                if i < n and toks[i][1] == "^":
                    if i + 1 >= n or toks[i + 1][0] != "num" or "/" in toks[i + 1][1]:
                        raise ParseError("'^' must be followed by a non-negative integer", line, toks[i][2])
                    e = int(toks[i + 1][1])
                    i += 2
                expo[v] += e
                nfactors += 1
                continue
            break
        if nfactors == 0:
            raise ParseError("missing term", line, col)
        m = tuple(expo)
        terms[m] = terms.get(m, Fraction(0)) + coeff
        expect_term = False
    try:
        return Polynomial(nvars, field, {m: c for m, c in terms.items() if c != 0})
    except ZeroDivisionError as exc:
        raise ParseError(str(exc), line, 1) from None


# ----------------------------------------------------------- linear change


@dataclass(frozen=True)
class LinearChange:
    """Invertible substitution x_i -> sum_j matrix[i][j] x_j.

    As maps on polynomials, ``L1.compose(L2)`` is the substitution that
    first applies L2 and then L1, so that
    ``apply(f, L1.compose(L2)) == apply(apply(f, L2), L1)``.
    """

    matrix: tuple
    field: FieldSpec = GF
    seed: int | None = None

    def __post_init__(self):
        from .linalg import rank

        rows = tuple(tuple(self.field(x) for x in r) for r in self.matrix)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionError("linear change needs a square matrix")
        object.__setattr__(self, "matrix", rows)
        if rank(self.field.array(rows), self.field) != n:
            raise SingularMatrixError("linear change matrix is singular")

    @property
    def nvars(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, nvars: int, field: FieldSpec = GF) -> "LinearChange":
        return cls(tuple(tuple(int(i == j) for j in range(nvars)) for i in range(nvars)), field)

    @classmethod
    def random(cls, nvars: int, field: FieldSpec = GF, seed: int = 0) -> "LinearChange":
        rng = rng_for(seed, "linear-change", nvars)
        for _ in range(16):
            vals = field.random_elements(rng, nvars * nvars)
            rows = tuple(tuple(vals[i * nvars:(i + 1) * nvars]) for i in range(nvars))
            try:
                return cls(rows, field, seed)
            except SingularMatrixError:
                continue
        raise SingularMatrixError("could not draw an invertible matrix")

    @classmethod
    def with_first_column(cls, column: Sequence, field: FieldSpec = GF, seed: int = 0) -> "LinearChange":
        """Random change whose matrix has the given first column.

        Substituting by it sends forms singular at the point ``column`` to
        forms singular at (1:0:...:0).
        """
        n = len(column)
        rng = rng_for(seed, "with-first-column", n)
        for _ in range(16):
            vals = field.random_elements(rng, n * n)
            rows = [list(vals[i * n:(i + 1) * n]) for i in range(n)]
            for i in range(n):
                rows[i][0] = field(column[i])
            try:
                return cls(tuple(tuple(r) for r in rows), field, seed)
            except SingularMatrixError:
                continue
        raise SingularMatrixError("could not complete the column to an invertible matrix")

    def compose(self, other: "LinearChange") -> "LinearChange":
        F = self.field
        F.check_same(other.field)
        n = self.nvars
        if other.nvars != n:
            raise DimensionError("composing changes of different sizes")
        # substitution by A then by B is substitution by B @ A ... with our
        # convention apply(apply(f, other), self) = f(other.M @ self.M x)
        A, B = other.matrix, self.matrix
        prod = tuple(
            tuple(_dot([A[i][k] for k in range(n)], [B[k][j] for k in range(n)], F) for j in range(n))
            for i in range(n)
        )
        return LinearChange(prod, F)

    def inverse(self) -> "LinearChange":
        from .linalg import inverse

        inv = inverse(self.field.array(self.matrix), self.field)
        return LinearChange(tuple(tuple(int(x) if self.field.p else x for x in r) for r in inv), self.field)

    def linear_forms(self) -> list[Polynomial]:
        n = self.nvars
        return [Polynomial(n, self.field, {unit(n, j): self.matrix[i][j] for j in range(n)}) for i in range(n)]


def _dot(u, v, F: FieldSpec):
    s = F.zero()
    for a, b in zip(u, v):
        s = F.add(s, F.mul(a, b))
    return s


def apply_linear_change(f: Polynomial, L: LinearChange) -> Polynomial:
    """Substitute x_i by the i-th row's linear form of ``L``."""
    if f.nvars != L.nvars:
        raise DimensionError(f"polynomial in {f.nvars} variables, change in {L.nvars}")
    f.field.check_same(L.field)
    forms = L.linear_forms()
    cache: dict = {}

    def power(i: int, e: int) -> Polynomial:
        if (i, e) not in cache:
            cache[(i, e)] = forms[i] ** e
        return cache[(i, e)]

    out = Polynomial.zero(f.nvars, f.field)
    for m, c in f.terms.items():
        term = Polynomial.constant(c, f.nvars, f.field)
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        out = out + term
    return out


def x0_coefficients(f: Polynomial) -> list[Polynomial]:
    """Coefficients of f as a polynomial in x0 over K[x1..xn].

    Entry k is f_k, the coefficient of x0^(deg-k), so entry k has degree k
    when f is homogeneous and ``sum f_k * x0^(deg-k) == f``.
    """
    d = f.degree()
    if d < 0:
        return []
    out = [dict() for _ in range(d + 1)]
    for m, c in f.terms.items():
        out[d - m[0]][(0,) + m[1:]] = c
    return [Polynomial(f.nvars, f.field, t, _clean=True) for t in out]


def from_x0_coefficients(coeffs: Sequence[Polynomial], nvars: int, field: FieldSpec) -> Polynomial:
    d = len(coeffs) - 1
    out = Polynomial.zero(nvars, field)
    for k, fk in enumerate(coeffs):
        out = out + fk.mul_monomial(unit(nvars, 0, d - k))
    return out


def random_form(degree: int, nvars: int, field: FieldSpec = GF, seed: int = 0) -> Polynomial:
    """Dense form with coefficients from the field's pool; deterministic in ``seed``."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    rng = rng_for(seed, "random-form", degree, nvars)
    if degree == 0:
        return Polynomial.constant(field.random_nonzero(rng), nvars, field)
    mons = monomials_of_degree(nvars, degree)
    vals = field.random_elements(rng, len(mons))
    return Polynomial(nvars, field, dict(zip(mons, vals)))


def random_point(nvars: int, field: FieldSpec, rng) -> tuple:
    while True:
        pt = tuple(field.random_elements(rng, nvars))
        if any(x != 0 for x in pt):
            return pt
