"""Buchberger's algorithm and the ideal toolkit built on it.

Internally a polynomial is a list of ``(key, packed, coeff)`` triples sorted
by decreasing key.  ``packed`` stores the exponent vector in 16-bit fields
and ``key`` is a linear functional that realises the monomial order, so
multiplying by a monomial is integer addition on both.
"""
from __future__ import annotations

import time
from typing import Iterable

from .config import Budget
from .errors import BudgetExhausted, DimensionError
from .ideal import Ideal
from .monomial_ideal import MonomialIdeal
from .poly import (
    DEGREVLEX,
    MAX_INTERNAL_NVARS,
    MonomialOrder,
    Polynomial,
    elimination_order,
)

_B = 16
_W = 1 << _B
_FIELD = _W - 1
_MAX_EXP = 1 << (_B - 1)


class _Encoding:
    """Packing of exponent vectors and order keys for one (nvars, order)."""

    def __init__(self, nvars: int, order: MonomialOrder):
        self.nvars = nvars
        self.order = order
        n = nvars
        if order.kind == "lex":
            w = [_W ** (n - 1 - i) for i in range(n)]
        elif order.kind == "degrevlex":
            w = [_W**n - _W**i for i in range(n)]
        elif order.kind == "elim":
            k = order.block
            hi = _W ** (n - k + 1)
            w = [(_W**k - _W**i) * hi for i in range(k)] + [_W ** (n - k) - _W ** (i - k) for i in range(k, n)]
        else:
            raise ValueError(order.kind)
        self.weights = w
        self.guard = sum(1 << (_B * i + _B - 1) for i in range(n))

    def pack(self, m) -> int:
        e = 0
        for i, x in enumerate(m):
            if x >= _MAX_EXP:
                raise DimensionError("exponent too large for the Groebner kernel")
            e |= x << (_B * i)
        return e

    def unpack(self, e: int) -> tuple:
        return tuple((e >> (_B * i)) & _FIELD for i in range(self.nvars))

    def key(self, m) -> int:
        return sum(x * w for x, w in zip(m, self.weights))

    def encode(self, f: Polynomial) -> list:
        terms = [(self.key(m), self.pack(m), c) for m, c in f.terms.items()]
        terms.sort(key=lambda t: t[0], reverse=True)
        return terms

    def decode(self, terms: list, field) -> Polynomial:
        return Polynomial(self.nvars, field, {self.unpack(e): c for _, e, c in terms}, _clean=True)


def _axpy(f: list, c, ku: int, eu: int, g: list, p) -> list:
    """f - c * u * g for the monomial u with key ku and packing eu."""
    out = []
    append = out.append
    i = j = 0
    nf, ng = len(f), len(g)
    while i < nf and j < ng:
        tf = f[i]
        tg = g[j]
        kg = tg[0] + ku
        if tf[0] > kg:
            append(tf)
            i += 1
        elif tf[0] < kg:
            v = -c * tg[2]
            append((kg, tg[1] + eu, v % p if p else v))
            j += 1
        else:
            v = tf[2] - c * tg[2]
            if p:
                v %= p
            if v:
                append((tf[0], tf[1], v))
            i += 1
            j += 1
    if i < nf:
        out.extend(f[i:])
    while j < ng:
        tg = g[j]
        v = -c * tg[2]
        append((tg[0] + ku, tg[1] + eu, v % p if p else v))
        j += 1
    return out


def _reduce(f: list, basis: list, guard: int, p, full: bool = True) -> list:
    """Remainder of f by ``basis`` (entries: (lead_key, lead_packed, monic terms))."""
    rem = []
    while f:
        kf, ef, cf = f[0]
        for gk, ge, gterms in basis:
            if not ((ef - ge) & guard):
                f = _axpy(f, cf, kf - gk, ef - ge, gterms, p)
                break
        else:
            if not full:
                return f
            rem.append(f[0])
            f = f[1:]
    return rem


def _monic(terms: list, field) -> list:
    c = terms[0][2]
    if c == 1:
        return terms
    inv = field.inv(c)
    p = field.p
    if p:
        return [(k, e, v * inv % p) for k, e, v in terms]
    return [(k, e, v * inv) for k, e, v in terms]


class _GB:
    """State of one Buchberger run."""

    def __init__(self, nvars: int, order: MonomialOrder, field, budget: Budget, degree_bound=None):
        self.enc = _Encoding(nvars, order)
        self.field = field
        self.p = field.p
        self.budget = budget
        self.degree_bound = degree_bound
        self.polys: list = []  # monic term lists
        self.lead: list = []  # exponent tuples
        self.G: list = []  # indices of the current basis
        self.B: list = []  # critical pairs (i, j)
        self.pairs_done = 0
        self.start = time.monotonic()

    def stats(self) -> dict:
        return {"pairs_done": self.pairs_done, "pairs_pending": len(self.B), "basis_size": len(self.G)}

    def _check_budget(self, terms: list) -> None:
        b = self.budget
        if b.max_pairs is not None and self.pairs_done > b.max_pairs:
            raise BudgetExhausted("pair cap reached", self.stats())
        if b.time_limit is not None and time.monotonic() - self.start > b.time_limit:
            raise BudgetExhausted("time cap reached", self.stats())
        if self.p is None and b.max_coeff_bits is not None:
            bits = max((max(c.numerator.bit_length(), c.denominator.bit_length()) for _, _, c in terms), default=0)
            if bits > b.max_coeff_bits:
                raise BudgetExhausted("coefficient bit cap reached", dict(self.stats(), bits=bits))

    def _basis_view(self) -> list:
        return [(self.polys[i][0][0], self.polys[i][0][1], self.polys[i]) for i in self.G]

    def add(self, terms: list) -> None:
        terms = _monic(terms, self.field)
        self.polys.append(terms)
        self.lead.append(self.enc.unpack(terms[0][1]))
        self._update(len(self.polys) - 1)

    def _lcm(self, i: int, j: int) -> tuple:
        return tuple(max(a, b) for a, b in zip(self.lead[i], self.lead[j]))

    def _coprime(self, i: int, j: int) -> bool:
        return all(a == 0 or b == 0 for a, b in zip(self.lead[i], self.lead[j]))

    def _update(self, h: int) -> None:
        # Gebauer-Moeller installation of the new element h
        lead = self.lead
        C = [g for g in self.G]
        D = []
        while C:
            g1 = C.pop(0)
            l1 = self._lcm(h, g1)
            if self._coprime(h, g1):
                D.append(g1)
                continue
            dominated = any(_divides(self._lcm(h, g2), l1) for g2 in C) or any(
                _divides(self._lcm(h, g2), l1) for g2 in D
            )
            if not dominated:
                D.append(g1)
        E = [(g, h) for g in D if not self._coprime(h, g)]
        newB = []
        lh = lead[h]
        for (g1, g2) in self.B:
            l12 = self._lcm(g1, g2)
            if not _divides(lh, l12) or self._lcm(g1, h) == l12 or self._lcm(h, g2) == l12:
                newB.append((g1, g2))
        newB.extend(E)
        self.B = newB
        self.G = [g for g in self.G if not _divides(lh, lead[g])] + [h]

    def _spoly(self, i: int, j: int) -> list:
        enc = self.enc
        l = self._lcm(i, j)
        ui = tuple(a - b for a, b in zip(l, self.lead[i]))
        uj = tuple(a - b for a, b in zip(l, self.lead[j]))
        fi = [(k + enc.key(ui), e + enc.pack(ui), c) for k, e, c in self.polys[i]]
        return _axpy(fi, 1, enc.key(uj), enc.pack(uj), self.polys[j], self.p)

    def run(self) -> None:
        key = self.enc.key
        while self.B:
            best = min(
                range(len(self.B)),
                key=lambda k: (sum(self._lcm(*self.B[k])), key(self._lcm(*self.B[k])), self.B[k]),
            )
            i, j = self.B.pop(best)
            if self.degree_bound is not None and sum(self._lcm(i, j)) > self.degree_bound:
                continue
            self.pairs_done += 1
            s = self._spoly(i, j)
            h = _reduce(s, self._basis_view(), self.enc.guard, self.p)
            if h:
                self._check_budget(h)
                self.add(h)
            elif self.budget.max_pairs is not None and self.pairs_done > self.budget.max_pairs:
                raise BudgetExhausted("pair cap reached", self.stats())

    def reduced(self) -> list:
        """Interreduced monic basis, sorted by decreasing leading monomial."""
        view = self._basis_view()
        out = []
        for idx, (k, e, terms) in enumerate(view):
            others = [v for jdx, v in enumerate(view) if jdx != idx]
            head = terms[:1]
            tail = _reduce(terms[1:], others, self.enc.guard, self.p)
            out.append(_monic(head + tail, self.field))
        out.sort(key=lambda t: t[0][0], reverse=True)
        return out


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _run_gb(gens: Iterable[Polynomial], nvars: int, field, order: MonomialOrder, budget: Budget,
            degree_bound=None) -> list:
    st = _GB(nvars, order, field, budget, degree_bound)
    enc = st.enc
    todo = sorted((g for g in gens if not g.is_zero()), key=lambda g: (g.degree(), len(g.terms)))
    for g in todo:
        if degree_bound is not None and g.degree() > degree_bound:
            continue
        t = _reduce(enc.encode(g), st._basis_view(), enc.guard, st.p)
        if t:
            st.add(t)
    st.run()
    return [enc.decode(t, field) for t in st.reduced()]


def groebner_basis(I: Ideal, order: MonomialOrder = DEGREVLEX, budget: Budget | None = None,
                   degree_bound: int | None = None) -> tuple:
    """Reduced Groebner basis of I (cached on the ideal per order).

    With ``degree_bound`` (homogeneous ideals only) pairs whose lcm exceeds
    the bound are skipped; the result is then a basis valid in degrees up
    to the bound.
    """
    if degree_bound is not None and not I.is_homogeneous:
        raise ValueError("degree-truncated bases need a homogeneous ideal")
    budget = budget or Budget.from_env()
    full_key = (order, None)
    with I._lock:
        if full_key in I._gb:
            return I._gb[full_key]
        key = (order, degree_bound)
        if key in I._gb:
            return I._gb[key]
        gb = tuple(_run_gb(I.generators, I.nvars, I.field, order, budget, degree_bound))
        I._gb[key] = gb
        return gb


def normal_form(f: Polynomial, I: Ideal, order: MonomialOrder = DEGREVLEX, budget: Budget | None = None,
                degree_bound: int | None = None) -> Polynomial:
    """Remainder of f on division by the reduced basis of I."""
    if f.nvars != I.nvars:
        raise DimensionError("polynomial and ideal live in different rings")
    I.field.check_same(f.field)
    if degree_bound is None and I.is_homogeneous and f.is_homogeneous():
        degree_bound = max(f.degree(), 0)
    gb = groebner_basis(I, order, budget, degree_bound if I.is_homogeneous else None)
    enc = _Encoding(I.nvars, order)
    basis = []
    for g in gb:
        t = enc.encode(g)
        basis.append((t[0][0], t[0][1], t))
    return enc.decode(_reduce(enc.encode(f), basis, enc.guard, I.field.p), I.field)


def contains(I: Ideal, f: Polynomial, **kw) -> bool:
    return normal_form(f, I, **kw).is_zero()


def same_ideal(I: Ideal, J: Ideal, budget: Budget | None = None) -> bool:
    if I.nvars != J.nvars or I.field != J.field:
        return False
    return set(groebner_basis(I, DEGREVLEX, budget)) == set(groebner_basis(J, DEGREVLEX, budget))


def is_reduced_basis(polys, order: MonomialOrder) -> bool:
    """No leading monomial divides any term of another element; all monic."""
    leads = [f.leading_term(order) for f in polys]
    for i, f in enumerate(polys):
        if leads[i][1] != 1:
            return False
        for j, (lm, _) in enumerate(leads):
            if i != j and any(_divides(lm, m) for m in f.terms):
                return False
    return True


def initial_ideal(I: Ideal, order: MonomialOrder = DEGREVLEX, budget: Budget | None = None,
                  degree_bound: int | None = None) -> MonomialIdeal:
    gb = groebner_basis(I, order, budget, degree_bound)
    return MonomialIdeal(I.nvars, tuple(g.leading_monomial(order) for g in gb))


def _aux_ring(n: int) -> int:
    N = n + 1
    if N > MAX_INTERNAL_NVARS:
        raise DimensionError("no room for the auxiliary variable")
    return N


def ideal_intersection(I: Ideal, J: Ideal, budget: Budget | None = None) -> Ideal:
    """I ∩ J from {t f_i} ∪ {(1 - t) g_j} by eliminating t."""
    _same_ring(I, J)
    n, F = I.nvars, I.field
    if I.is_zero() or J.is_zero():
        return Ideal([], n, F)
    N = _aux_ring(n)
    t = Polynomial.variable(0, N, F)
    one_minus_t = Polynomial.constant(1, N, F) - t
    gens = [t * f.embed(N, 1) for f in I.generators] + [one_minus_t * g.embed(N, 1) for g in J.generators]
    aux = Ideal(gens, N, F)
    gb = groebner_basis(aux, elimination_order(1), budget)
    keep = [g.restrict(n, 1) for g in gb if all(m[0] == 0 for m in g.terms)]
    sat = True if (I.is_saturated and J.is_saturated) else None
    return Ideal(keep, n, F, saturated=sat)


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """q with f = q g; raises ValueError when g does not divide f."""
    q = Polynomial.zero(f.nvars, f.field)
    r = f
    lg, cg = g.leading_term(DEGREVLEX)
    inv = f.field.inv(cg)
    while not r.is_zero():
        lr, cr = r.leading_term(DEGREVLEX)
        if not _divides(lg, lr):
            raise ValueError("inexact division")
        u = tuple(a - b for a, b in zip(lr, lg))
        c = f.field.mul(cr, inv)
        q = q + Polynomial(f.nvars, f.field, {u: c}, _clean=True)
        r = r - g.mul_monomial(u, c)
    return q


def colon_by_element(I: Ideal, g: Polynomial, budget: Budget | None = None) -> Ideal:
    if g.is_zero():
        raise ValueError("colon by the zero polynomial")
    inter = ideal_intersection(I, Ideal([g], I.nvars, I.field), budget)
    return Ideal([exact_divide(h, g) for h in inter.generators], I.nvars, I.field)


def ideal_colon(I: Ideal, J: Ideal, budget: Budget | None = None) -> Ideal:
    """(I : J) as the intersection of the colons by each generator of J."""
    _same_ring(I, J)
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    result = None
    for g in J.generators:
        part = colon_by_element(I, g, budget)
        result = part if result is None else ideal_intersection(result, part, budget)
    return result


def maximal_ideal(nvars: int, field) -> Ideal:
    return Ideal([Polynomial.variable(i, nvars, field) for i in range(nvars)], nvars, field)


def saturation(I: Ideal, J: Ideal | None = None, budget: Budget | None = None, max_rounds: int = 50) -> Ideal:
    """I : J^infinity by iterated colon until the basis stops changing."""
    J = J or maximal_ideal(I.nvars, I.field)
    current = I
    for _ in range(max_rounds):
        nxt = ideal_colon(current, J, budget)
        if same_ideal(nxt, current, budget):
            out = Ideal(groebner_basis(current, DEGREVLEX, budget), I.nvars, I.field, saturated=True)
            return out
        current = nxt
    raise BudgetExhausted("saturation did not stabilise", {"rounds": max_rounds})


def elimination_ideal(I: Ideal, drop_vars: Iterable[int], budget: Budget | None = None) -> Ideal:
    """I ∩ K[x_k, ..., x_{n-1}] where ``drop_vars`` = {0, ..., k-1}."""
    drop = sorted(set(drop_vars))
    k = len(drop)
    if drop != list(range(k)):
        raise ValueError("only an initial segment x0..x_{k-1} can be eliminated")
    if k == 0:
        return I
    gb = groebner_basis(I, elimination_order(k), budget)
    keep = [g for g in gb if all(not any(m[:k]) for m in g.terms)]
    return Ideal(keep, I.nvars, I.field)


def _same_ring(I: Ideal, J: Ideal) -> None:
    if I.nvars != J.nvars:
        raise DimensionError(f"ideals in {I.nvars} and {J.nvars} variables")
    I.field.check_same(J.field)
