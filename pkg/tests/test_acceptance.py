"""Acceptance criteria 1-10. Each test prints one line

    criterion N: PASS|FAIL  tolerance=<...>  <failed checks>

and the lines are repeated in the pytest terminal summary. Run directly with
``python tests/test_acceptance.py`` (add ``--deep`` for the long items).
"""
import itertools
import sys

import numpy as np
import pytest
import sympy

import avkit.unexpected as U
from _report import RESULTS
from avkit.field import GF, QQ, derive_seed, rng_for
from avkit.fixtures import CI34_GIN, G1
from avkit.geometry import build_fixture, points_ideal
from avkit.gin import gin
from avkit.groebner import groebner_basis
from avkit.hilbert import alpha, graded_dim_ideal, hilbert_function, hilbert_value
from avkit.ideal import Ideal
from avkit.linalg import rank
from avkit.monomial_ideal import MonomialIdeal
from avkit.poly import DEGREVLEX, LEX, binom, divides, monomials_of_degree
from avkit.sequences import is_O_sequence, macaulay_rep

EXACT = "exact integer equality"


class Criterion:
    def __init__(self, n: int, tolerance: str = EXACT):
        self.n, self.tolerance, self.failed, self.count = n, tolerance, [], 0

    def check(self, label, observed, expected=True):
        self.count += 1
        if observed != expected:
            self.failed.append(f"{label}: observed {observed!r}, expected {expected!r}")

    def __enter__(self):
        return self

    def __exit__(self, kind, exc, tb):
        if exc is not None and not isinstance(exc, AssertionError):
            self.failed.append(f"raised {kind.__name__}: {exc}")
            self.finish(raise_=False)
        return False

    def finish(self, raise_: bool = True):
        status = "FAIL" if self.failed else "PASS"
        line = f"criterion {self.n}: {status}  tolerance={self.tolerance}  checks={self.count}"
        if self.failed:
            line += "  failed: " + "; ".join(self.failed)
        RESULTS[self.n] = line
        print(line)
        if raise_:
            assert not self.failed, line


_cache: dict = {}


def fx(name, **params):
    key = (name, tuple(sorted(params.items())))
    if key not in _cache:
        _cache[key] = build_fixture(name, GF, 0, **params)
    return _cache[key]


def av_positive(X, j, m_max):
    rep = U.av_sequence(X, j, m_max, "both")
    return rep.positive_support.values, rep.tail, rep.tail_value


# ---------------------------------------------------------------- 1


def test_criterion_1_thirteen_points():
    with Criterion(1) as c:
        for name in ("X1", "X2"):
            X = fx(name)
            c.check(f"{name} h", hilbert_function(X, 6).values, (1, 3, 6, 10, 12, 13, 13))
            c.check(f"{name} dim [I]_6", graded_dim_ideal(X, 6), 15)
            d = U.dim_triple(X, 6, 5)
            c.check(f"{name} vdim(6,5)", d.vdim, 0)
            c.check(f"{name} adim(6,5)", d.adim, 1)
            c.check(f"{name} verdict", U.detect(X, 6, 5).verdict, U.UNEXPECTED)
            c.check(f"{name} gin<=6", gin(X, 2, 0, 6).monomial_ideal.to_text(), G1)
        Y = fx("CI34_plus_point")
        g = gin(Y, 2, 0, 14)
        c.check("CI34+pt gin", g.monomial_ideal.to_text(), CI34_GIN)
        c.check("CI34+pt generators", len(g.monomial_ideal.generators), 15)
        v = U.detect(Y, 6, 5).verdict
        # adim = 0 here, which the verdict reports as no_hypersurface; both mean "not unexpected"
        c.check("CI34+pt detect(6,5) not unexpected", v in (U.EXPECTED, U.NO_HYPERSURFACE))
        c.finish()


# ---------------------------------------------------------------- 2


def test_criterion_2_av_regression(deep):
    with Criterion(2) as c:
        cases = [
            ("a", "linked_8_7", 1, 6, ((1, 2, 1), "zero", 0)),
            ("b", "linked_7_4", 1, 6, ((1, 2), "zero", 0)),
            ("d", "linked_8_7_plus_point", 1, 6, ((1, 3, 2), "zero", 0)),
            ("e", "linked_8_7", 0, 9, ((1, 4, 8, 11, 13, 14, 14, 14, 14), "constant", 14)),
            ("f", "linked_15_28", 2, 6, ((1, 2, 2), "zero", 0)),
            ("f'", "linked_8_7", 2, 6, ((), "zero", 0)),
            ("g", "ci_444_points", 1, 8, ((1, 4, 7, 8, 5), "zero", 0)),
            ("h", "B3_cone", 1, 7, ((1, 3, 4, 4, 4, 4, 4), "constant", 4)),
            ("i", "general9_cone", 1, 7, ((1, 3, 3, 3, 3, 3, 3), "constant", 3)),
        ]
        if deep:
            cases += [
                ("c", "linked_surface_p4", 1, 6, ((1, 3, 4, 4, 4, 4), "constant", 4)),
                ("j", "quartics_triple_point", 1, 14,
                 ((1, 4, 8, 12, 15, 16, 15, 12, 8, 4, 2, 2, 2, 2), "constant", 2)),
            ]
        for item, name, j, m_max, want in cases:
            c.check(f"({item}) {name} j={j}", av_positive(fx(name), j, m_max), want)
        c.finish()


# ---------------------------------------------------------------- 3

ROUTE_FIXTURES = [
    ("X1", {}), ("X2", {}), ("CI34_plus_point", {}), ("root_An", {"n": 3}), ("root_Yn", {"n": 3}),
    ("twisted_cubic", {}), ("plane_cubic", {}), ("linked_8_7", {}), ("linked_7_4", {}),
    ("linked_8_7_plus_point", {}), ("linked_15_28", {}), ("ci_444_points", {}), ("B3_cone", {}),
    ("general9_cone", {}), ("ci33_p3", {}), ("degenerate_points", {}), ("twisted18_plus6", {}),
    ("lines_6_7_7_plus4", {}), ("plane17_plus7", {}),
]


def random_point_sets(k=20):
    rng = rng_for(2024, "acceptance-points")
    out = []
    while len(out) < k:
        nvars = int(rng.integers(3, 5))
        count = int(rng.integers(1, 11))
        seen, pts = set(), []
        while len(pts) < count:
            v = tuple(int(x) for x in rng.integers(-5, 6, nvars))
            if not any(v):
                continue
            g = next(x for x in v if x)
            key = tuple(sympy.Rational(x, g) for x in v)
            if key not in seen:
                seen.add(key)
                pts.append(v)
        out.append(points_ideal(pts, GF, name=f"random{len(out)}"))
    return out


def route_values(X, j, m_max):
    direct = [U.av_value(X, j, m) for m in range(1, m_max + 1)]
    via_gin = U.av_from_gin(gin(X, 2, 0, m_max + j), j, m_max)
    return direct, via_gin


def test_criterion_3_route_equivalence():
    with Criterion(3) as c:
        schemes = [fx(n, **p) for n, p in ROUTE_FIXTURES] + random_point_sets()
        for X in schemes:
            for j in (0, 1):
                d, g = route_values(X, j, 5)
                c.check(f"{X.name} j={j} direct vs gin_colon", d, g)
                c.check(f"{X.name} j={j} O-sequence", all(v == 0 for v in g) or bool(is_O_sequence(g)))
        c.finish()


# ---------------------------------------------------------------- 4


def test_criterion_4_monotone_and_descent():
    with Criterion(4) as c:
        cap = 6
        for name, params in ROUTE_FIXTURES:
            X = fx(name, **params)
            g = gin(X, 2, 0, cap)
            av = {j: U.av_from_gin(g, j, cap - j) for j in range(cap)}
            for j in range(cap - 1):
                for m in range(1, cap - j):
                    c.check(f"{name} AV_{j}({m}) >= AV_{j + 1}({m})", av[j][m - 1] >= av[j + 1][m - 1])
            for t in range(2, cap + 1):
                for m in range(2, t + 1):
                    if av[t - m][m - 1] == 0:
                        c.check(f"{name} descent t={t} m={m}", av[t - m + 1][m - 2], 0)
        c.finish()


# ---------------------------------------------------------------- 5


def test_criterion_5_certificate():
    with Criterion(5) as c:
        for n in range(2, 7):
            X = fx("root_An", n=n)
            c.check(f"root_An({n}) alpha", alpha(X), 3)
            cert = U.certify_no_unexpected(X)
            c.check(f"root_An({n}) AV_0(3)", cert.av_value, 0)
            c.check(f"root_An({n}) certified", cert.certified)
        Y = fx("root_Yn", n=3)
        v = U.detect(Y, 3, 3)
        c.check("root_Yn(3) detect(3,3)", v.verdict, U.UNEXPECTED)
        c.check("root_Yn(3) cone", v.witness_hint is not None)
        tab = U.persistence_table(fx("degenerate_points"), 6, 6)
        c.check("degenerate table nonzero cells", tab.nonzero(), [])
        c.finish()


# ---------------------------------------------------------------- 6


def test_criterion_6_complete_intersections():
    with Criterion(6) as c:
        w = U.sylvester_witness(3, 3, 1)
        T = w.witness_form
        c.check("witness (t, m)", (w.t, w.m), (5, 4))
        c.check("deg T", T.degree(), 5)
        c.check("deg det(M)", w.matrix_det.degree(), 4)
        c.check("T in (F, G)", w.in_ideal)
        # multiplicity 4 at (1:0:0:0): every term has degree >= 4 outside x0
        c.check("T in I_Q^4", all(sum(mono[1:]) >= 4 for mono in T.terms))
        c.check("vdim CI(3,3) P^3", U.ci_vdim_closed_form(3, 3, 3, 5, 4), 0)
        c.check("vdim CI(3,3) P^3 (measured)", U.vdim_edim(fx("ci33_p3"), 5, 4)[0], 0)
        c.check("vdim CI(3,3) P^4", U.ci_vdim_closed_form(3, 3, 4, 5, 4), -5)
        X4 = fx("ci33_p4")
        c.check("vdim CI(3,3) P^4 (measured)", U.vdim_edim(X4, 5, 4)[0], -5)
        c.check("HF CI(3,3) P^4", tuple(hilbert_value(X4, t) for t in range(7)), (1, 5, 15, 33, 60, 96, 141))
        for a, b in ((3, 5), (4, 4), (4, 5)):
            t, m = (a - 1) * (b - 1) + 1, (a - 1) * (b - 1)
            closed = -((a - 2) * (b - 2) * (a + b - 4)) // 2 + 1
            c.check(f"vdim CI({a},{b}) closed form", U.ci_vdim_closed_form(a, b, 3, t, m), closed)
            c.check(f"vdim CI({a},{b}) large formula", U.ci_vdim_large(a, b), closed)
        c.check("detect CI(3,3) P^3 (5,4)", U.detect(fx("ci33_p3"), 5, 4).verdict, U.UNEXPECTED)
        c.finish()


# ---------------------------------------------------------------- 7


def test_criterion_7_curves():
    with Criterion(7) as c:
        for name, rng_t, want in (("twisted_cubic", range(3, 7), 1), ("plane_cubic", range(3, 6), 0),
                                  ("linked_8_7", range(8, 10), 14)):
            rep = U.curve_av_formula_check(fx(name), t_range=rng_t)
            c.check(f"{name} C(e-1,2) - g", rep.expected, want)
            c.check(f"{name} AV_0 values", sorted(set(rep.values.values())), [want])
        X = fx("plane17_plus7")
        parts = X.meta["parts"]
        X1 = points_ideal(parts["general"], GF, name="seven_general")
        add = U.union_additivity_check(X1, parts["curve"], 2, 3, 1)
        c.check("AV_{X1 u C,0}(5)", add.av_union, 1)
        c.check("AV_{X1,0}(2)", add.av_points, 1)
        c.check("additivity", add.ok)
        c.check("AV_{X,0}(5) on the 24 points", U.av_value(X, 0, 5), 1)
        c.check("adim(X1,2,2)", U.adim(X1, 2, 2), 0)
        c.check("adim(X,5,5)", U.adim(X, 5, 5), 0)
        c.check("no unexpected quintic", U.detect(X, 5, 5).verdict != U.UNEXPECTED)
        c.finish()


# ---------------------------------------------------------------- 8


def test_criterion_8_verdict_matrix():
    with Criterion(8) as c:
        X = fx("twisted18_plus6")
        for t in range(1, 7):
            c.check(f"twisted+6 cone t={t}", U.detect(X, t, t).verdict != U.UNEXPECTED)
        d = U.dim_triple(fx("lines_6_7_7_plus4"), 5, 5)
        c.check("three lines adim(5,5)", d.adim, 2)
        c.check("three lines edim(5,5)", d.edim, 0)
        c.check("three lines verdict", d.verdict, U.UNEXPECTED)
        c.finish()


# ---------------------------------------------------------------- 9


def test_criterion_9_conjecture_harness():
    with Criterion(9, "exact; shape predicates are booleans") as c:
        rep = U.conjecture_harness(fx("linked_8_7"), 8, m_max=6)
        ch = rep.checks
        for k in ("nonzero", "unimodal", "finite", "symmetric", "si", "increasing_part_differentiable"):
            c.check(k, ch[k], True)
        c.check("ends in degree", ch["ends_in_degree"], 2)
        c.check("verdict", rep.verdict, "pass")
        c.finish()


# ---------------------------------------------------------------- 10


def _mono_upto(nvars, top):
    return [m for d in range(top + 1) for m in monomials_of_degree(nvars, d)]


def test_criterion_10_kernel_self_checks():
    with Criterion(10) as c:
        ideals = [
            Ideal.parse(["x*z - y^2", "x*w - y*z", "y*w - z^2"], 4, GF),
            Ideal.parse(["x^2 + y*z", "y^3 - x*z^2 + z^3"], 3, QQ),
            fx("X1"), fx("twisted_cubic"), fx("ci33_p3"),
        ]
        for I in ideals:
            for order in (DEGREVLEX, LEX):
                G = groebner_basis(I, order)
                again = groebner_basis(Ideal(list(G), I.nvars, I.field), order)
                c.check(f"GB idempotent {I.name or I.nvars} {order}", set(again), set(G))
        # monomial colon against the membership oracle m*u in M
        bad = 0
        for nvars in (1, 2, 3):
            pool = _mono_upto(nvars, 4)[1:]
            us, probes = _mono_upto(nvars, 4), _mono_upto(nvars, 4)
            for k in (1, 2):
                for gens in itertools.combinations(pool, k):
                    M = MonomialIdeal(nvars, gens)
                    for u in us:
                        C = M.colon_monomial(u)
                        for m in probes:
                            prod = tuple(a + b for a, b in zip(m, u))
                            bad += C.contains(m) != any(divides(g, prod) for g in gens)
        c.check("colon oracle mismatches", bad, 0)
        # graded-piece ranks against a degrevlex Groebner basis
        for I in ideals:
            via_gb = hilbert_function(I, 7, DEGREVLEX).values
            via_la = tuple(hilbert_value(I, t) for t in range(8))
            c.check(f"dim oracle {I.name or I.nvars}", via_la, via_gb)
        rng = np.random.default_rng(derive_seed(10, "ranks"))
        for k in range(30):
            rows = rng.integers(-3, 4, size=(int(rng.integers(1, 7)), int(rng.integers(1, 7)))).tolist()
            c.check(f"rank {k}", rank(QQ.array(rows), QQ), sympy.Matrix(rows).rank())
        bad = 0
        for d in range(1, 7):
            for a in range(10_001):
                bad += sum(binom(k, i) for k, i in macaulay_rep(a, d)) != a
        c.check("Macaulay rep reconstruction failures", bad, 0)
        c.finish()


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", *sys.argv[1:]]))
