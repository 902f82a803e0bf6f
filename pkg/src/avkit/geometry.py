"""Constructors for the schemes used in experiments.

Every constructor is deterministic in its seed.  Ideals built from point
conditions, intersections or colons keep the exact piece oracle they were
built from (see ``graded.ideal_from_pieces``).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import AvkitError, DimensionError
from .field import GF, FieldSpec, derive_seed, rng_for
from .graded import (
    colon_piece,
    graded_piece,
    ideal_from_pieces,
    ndim,
    points_piece,
    vectors_to_polys,
)
from .ideal import Ideal
from .linalg import nullspace
from .monomial_ideal import MonomialIdeal
from .poly import Polynomial, binom, monomials_of_degree, unit


# ---------------------------------------------------------------- points


@dataclass(frozen=True)
class ProjPoint:
    """Point of P^n, stored with first nonzero coordinate 1."""

    coords: tuple
    field: FieldSpec = GF

    def __post_init__(self):
        F = self.field
        c = [F(x) for x in self.coords]
        nz = next((x for x in c if x != 0), None)
        if nz is None:
            raise AvkitError("the zero vector is not a projective point")
        inv = F.inv(nz)
        object.__setattr__(self, "coords", tuple(F.mul(x, inv) for x in c))

    @property
    def nvars(self) -> int:
        return len(self.coords)

    @classmethod
    def random(cls, nvars: int, field: FieldSpec = GF, seed: int = 0) -> "ProjPoint":
        rng = rng_for(seed, "point", nvars)
        while True:
            c = field.random_elements(rng, nvars)
            if any(x != 0 for x in c):
                return cls(tuple(c), field)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)


def _as_point(P, field: FieldSpec) -> ProjPoint:
    return P if isinstance(P, ProjPoint) else ProjPoint(tuple(P), field)


def linear_span_ideal(points: Sequence, field: FieldSpec = GF) -> Ideal:
    """Linear forms vanishing on the span of the given points."""
    pts = [_as_point(P, field) for P in points]
    n = pts[0].nvars
    K = nullspace(field.array([p.coords for p in pts]), field, n)
    return Ideal(vectors_to_polys(K, n, 1, field), n, field, saturated=True)


def point_ideal(P, field: FieldSpec = GF) -> Ideal:
    P = _as_point(P, P.field if isinstance(P, ProjPoint) else field)
    I = linear_span_ideal([P], P.field)
    I.meta["points"] = [P.coords]
    return I


def fat_point_ideal(P, m: int, field: FieldSpec = GF) -> Ideal:
    """I_P^m from products of the n linear forms of I_P."""
    if m < 1:
        raise ValueError("multiplicity must be >= 1")
    base = point_ideal(P, field)
    forms = list(base.generators)
    n = len(forms)
    gens = []
    for e in monomials_of_degree(n, m):
        g = Polynomial.constant(1, base.nvars, base.field)
        for f, k in zip(forms, e):
            if k:
                g = g * f**k
        gens.append(g)
    return Ideal(gens, base.nvars, base.field, saturated=True)


def points_ideal(points: Sequence, field: FieldSpec | None = None, name: str | None = None) -> Ideal:
    """Ideal of a finite reduced point set."""
    if not points:
        raise AvkitError("empty point set")
    F = field or (points[0].field if isinstance(points[0], ProjPoint) else GF)
    pts = [_as_point(P, F) for P in points]
    n = pts[0].nvars
    if any(p.nvars != n for p in pts):
        raise DimensionError("points live in different projective spaces")
    if len(set(p.coords for p in pts)) != len(pts):
        raise AvkitError("duplicate points")
    coords = [p.coords for p in pts]
    # generators live in degree <= (first degree where all points are separated) + 1
    t0 = 0
    while ndim(n, t0) - points_piece(coords, n, t0, F).shape[0] < len(pts):
        t0 += 1
    I = ideal_from_pieces(lambda t: points_piece(coords, n, t, F), n, F, t0 + 1, saturated=True, name=name)
    I.meta["points"] = coords
    return I


# ----------------------------------------------------------- combinations


def intersect_ideals(*ideals: Ideal, name: str | None = None) -> Ideal:
    """I_1 ∩ ... ∩ I_k, piece by piece (scheme-theoretic union)."""
    if not ideals:
        raise ValueError("nothing to intersect")
    I0 = ideals[0]
    for J in ideals[1:]:
        if J.nvars != I0.nvars:
            raise DimensionError("ideals in different rings")
        I0.field.check_same(J.field)

    def piece(t):
        P = graded_piece(ideals[0], t)
        for J in ideals[1:]:
            P = intersection_piece_rows(P, graded_piece(J, t), I0.field)
        return P

    start = sum(max(J.max_generator_degree(), 1) for J in ideals)
    out = ideal_from_pieces(piece, I0.nvars, I0.field, start, saturated=all(J.is_saturated for J in ideals), name=name)
    pts = [p for J in ideals for p in J.meta.get("points", [])]
    if all("points" in J.meta for J in ideals):
        out.meta["points"] = pts
    return out


def intersection_piece_rows(P: np.ndarray, Q: np.ndarray, F: FieldSpec) -> np.ndarray:
    from .linalg import intersect_rowspaces

    return intersect_rowspaces(P, Q, F)


def union(*parts: Ideal, name: str | None = None) -> Ideal:
    return intersect_ideals(*parts, name=name)


def koszul_hilbert(degrees: Sequence[int], nvars: int, t: int) -> int:
    """h_{R/I}(t) for a complete intersection of the given degrees."""
    total = 0
    k = len(degrees)
    for mask in range(1 << k):
        s = sum(d for i, d in enumerate(degrees) if mask >> i & 1)
        sign = -1 if bin(mask).count("1") % 2 else 1
        total += sign * binom(t - s + nvars - 1, nvars - 1) if t - s >= 0 else 0
    return total


def _random_in_piece(B: np.ndarray, nvars: int, t: int, F: FieldSpec, rng) -> Polynomial:
    coeffs = F.array([F.random_elements(rng, B.shape[0])])
    from .linalg import matmul

    v = matmul(coeffs, B, F)[0]
    return Polynomial.from_vector(v, nvars, t, F)


def complete_intersection(degrees: Sequence[int], nvars: int, field: FieldSpec = GF, seed: int = 0,
                          through: Ideal | None = None, name: str | None = None) -> Ideal:
    """Ideal of random forms of the given degrees, optionally inside ``through``.

    The forms are accepted once the Hilbert function matches the Koszul
    count up to degree sum(degrees); up to three reseeds are tried.
    """
    degrees = list(degrees)
    if len(degrees) > nvars - 1:
        raise DimensionError("too many forms for a proper complete intersection")
    for attempt in range(4):
        rng = rng_for(seed, "ci", tuple(degrees), nvars, attempt)
        gens = []
        for d in degrees:
            if through is None:
                mons = monomials_of_degree(nvars, d)
                gens.append(Polynomial(nvars, field, dict(zip(mons, field.random_elements(rng, len(mons))))))
            else:
                B = graded_piece(through, d)
                if B.shape[0] == 0:
                    raise AvkitError(f"no forms of degree {d} in the given ideal")
                gens.append(_random_in_piece(B, nvars, d, field, rng))
        I = Ideal(gens, nvars, field, saturated=True, name=name)
        ok = all(
            ndim(nvars, t) - graded_piece(I, t).shape[0] == koszul_hilbert(degrees, nvars, t)
            for t in range(sum(degrees) + 1)
        )
        if ok:
            I.meta["ci_degrees"] = tuple(degrees)
            return I
    raise AvkitError("random forms failed the regular-sequence probe three times")


def linked_curve(ci: Ideal, inside: Ideal, name: str | None = None) -> Ideal:
    """Residual scheme ci : inside."""
    bound = sum(g.degree() for g in ci.generators)
    return ideal_from_pieces(lambda t: colon_piece(ci, inside, t), ci.nvars, ci.field, bound, saturated=True, name=name)


def cone_over(base: Ideal, vertex, name: str | None = None) -> Ideal:
    """Cone in P^k over a scheme in the hyperplane x_k = 0 (base in k variables).

    Each base generator g(x_0..x_{k-1}) is pulled back along the projection
    from ``vertex``, i.e. evaluated at x_i - (v_i / v_k) x_k.
    """
    F = base.field
    v = _as_point(vertex, F)
    k = base.nvars
    if v.nvars != k + 1:
        raise DimensionError("vertex must have one more coordinate than the base ring")
    if v.coords[k] == 0:
        raise AvkitError("vertex lies on the base hyperplane")
    lam = F.inv(v.coords[k])
    subs = []
    for i in range(k):
        subs.append(Polynomial(k + 1, F, {unit(k + 1, i): 1, unit(k + 1, k): F.neg(F.mul(v.coords[i], lam))}))
    gens = []
    for g in base.generators:
        out = Polynomial.zero(k + 1, F)
        for m, c in g.terms.items():
            term = Polynomial.constant(c, k + 1, F)
            for i, e in enumerate(m):
                if e:
                    term = term * subs[i] ** e
            out = out + term
        gens.append(out)
    I = Ideal(gens, k + 1, F, saturated=base.is_saturated, name=name)
    I.meta["cone_vertex"] = v.coords
    return I


def distraction(M: MonomialIdeal, field: FieldSpec = GF, name: str | None = None) -> Ideal:
    """Reduced points (1 : c_1 : ... : c_n), one per standard monomial of the artinian M."""
    if not M.is_artinian():
        raise AvkitError("distraction needs an artinian monomial ideal")
    pts = []
    t = 0
    while True:
        std = M.standard_monomials(t)
        if not std:
            break
        pts.extend((1,) + tuple(m) for m in std)
        t += 1
    return points_ideal(pts, field, name=name)


# ------------------------------------------------------------- samplers


def _random_scalar(F: FieldSpec, rng):
    return F.random_elements(rng, 1)[0]


def line_through(p, q, field: FieldSpec = GF) -> Ideal:
    """Ideal of the line spanned by p and q, with a point sampler attached."""
    p = _as_point(p, field)
    q = _as_point(q, field)
    I = linear_span_ideal([p, q], field)
    if len(I.generators) != p.nvars - 2:
        raise AvkitError("points do not span a line")
    F = field

    def sampler(rng):
        a = _random_scalar(F, rng)
        return tuple(F.add(F.mul(a, x), y) for x, y in zip(p.coords, q.coords))

    I.meta["sampler"] = sampler
    I.meta["kind"] = "line"
    return I


def random_line(nvars: int, field: FieldSpec = GF, seed: int = 0) -> Ideal:
    return line_through(ProjPoint.random(nvars, field, derive_seed(seed, "p")),
                        ProjPoint.random(nvars, field, derive_seed(seed, "q")), field)


def twisted_cubic(field: FieldSpec = GF) -> Ideal:
    """Image of (s:u) -> (s^3 : s^2 u : s u^2 : u^3)."""
    I = Ideal.parse(["x*z - y^2", "y*w - z^2", "x*w - y*z"], 4, field, saturated=True, name="twisted_cubic")
    F = field

    def sampler(rng):
        s = _random_scalar(F, rng)
        return (F.mul(F.mul(s, s), s), F.mul(s, s), s, 1)

    I.meta["sampler"] = sampler
    I.meta["kind"] = "twisted_cubic"
    I.meta["degree_genus"] = (3, 0)
    return I


def plane_cubic(field: FieldSpec = GF, seed: int = 0) -> Ideal:
    """Random plane cubic in {w = 0} ⊂ P^3 passing through (1:0:0:0).

    Points are sampled on lines through that base point: F(s, 1, u) is
    quadratic in s, solved with a square root in F_p.
    """
    if field.p is None:
        raise AvkitError("plane cubic sampling is only available over F_p")
    rng = rng_for(seed, "plane-cubic")
    mons = [m for m in monomials_of_degree(3, 3) if m != (3, 0, 0)]
    coeffs = dict(zip(mons, field.random_elements(rng, len(mons))))
    f3 = Polynomial(3, field, coeffs)
    f = f3.embed(4)
    I = Ideal([Polynomial.variable(3, 4, field), f], 4, field, saturated=True, name="plane_cubic")
    F = field

    def sampler(rng):
        for _ in range(200):
            u = _random_scalar(F, rng)
            # F(s,1,u) = A s^2 + B s + C
            A = B = C = 0
            for (a, b, c), k in coeffs.items():
                val = F.mul(k, pow(int(u), c, F.p))
                if a == 2:
                    A = F.add(A, val)
                elif a == 1:
                    B = F.add(B, val)
                else:
                    C = F.add(C, val)
            if A == 0:
                continue
            disc = F.sub(F.mul(B, B), F.mul(4, F.mul(A, C)))
            r = F.sqrt(disc)
            if r is None:
                continue
            sign = 1 if rng.integers(2) else -1
            s = F.div(F.add(F.neg(B), F.mul(sign, r)), F.mul(2, A))
            return (s, 1, u, 0)
        raise AvkitError("plane cubic sampling failed")

    I.meta["sampler"] = sampler
    I.meta["kind"] = "plane_cubic"
    I.meta["degree_genus"] = (3, 1)
    return I


def points_on_variety(C: Ideal, count: int, seed: int = 0) -> list[tuple]:
    """Distinct points on V(C) from its stored sampler."""
    sampler = C.meta.get("sampler")
    if sampler is None:
        raise AvkitError("no stored parameterization for this ideal")
    rng = rng_for(seed, "on-variety", count)
    out: list = []
    seen = set()
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > 50 * count + 100:
            raise AvkitError("sampling budget exhausted")
        P = ProjPoint(sampler(rng), C.field)
        if P.coords in seen:
            continue
        if any(g.evaluate(P.coords) != 0 for g in C.generators):
            raise AvkitError("sampler produced a point off the variety")
        seen.add(P.coords)
        out.append(P.coords)
    return out


def general_points(count: int, nvars: int, field: FieldSpec = GF, seed: int = 0) -> list[tuple]:
    return [ProjPoint.random(nvars, field, derive_seed(seed, "general", k)).coords for k in range(count)]


# ------------------------------------------------------------- catalog

X1_POINTS = [
    (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 0, 1), (-1, 1, 0), (0, -1, 1), (-1, 0, 1),
    (1, 1, 1), (-1, 1, 1), (-1, 1, -1), (1, 1, -1),
]
X2_POINTS = X1_POINTS[:9] + [(2, 1, 1), (-2, 1, 1), (-2, 1, -1), (2, 1, -1)]
B3_DUAL_POINTS = [
    (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1),
]


def root_points(n: int, signed: bool = True) -> list[tuple]:
    """Coordinate points of P^n plus e_a - e_b (or e_a + e_b when unsigned), a < b."""
    pts = [tuple(int(i == k) for i in range(n + 1)) for k in range(n + 1)]
    for a in range(n + 1):
        for b in range(a + 1, n + 1):
            v = [0] * (n + 1)
            v[a] = 1
            v[b] = -1 if signed else 1
            pts.append(tuple(v))
    return pts


def _mk_X1(F, seed):
    return points_ideal(X1_POINTS, F, name="X1")


def _mk_X2(F, seed):
    return points_ideal(X2_POINTS, F, name="X2")


def _mk_ci34_plus_point(F, seed):
    ci = complete_intersection([3, 4], 3, F, derive_seed(seed, "ci"))
    P = point_ideal(ProjPoint.random(3, F, derive_seed(seed, "pt")), F)
    return intersect_ideals(ci, P, name="CI34_plus_point")


def _mk_root_An(F, seed, n=3):
    return points_ideal(root_points(n, True), F, name=f"root_An({n})")


def _mk_root_Yn(F, seed, n=3):
    return points_ideal(root_points(n, False), F, name=f"root_Yn({n})")


def _mk_twisted_cubic(F, seed):
    return twisted_cubic(F)


def _mk_plane_cubic(F, seed):
    return plane_cubic(F, seed)


def _line_x0x1(F, nvars=4) -> Ideal:
    return Ideal([Polynomial.variable(0, nvars, F), Polynomial.variable(1, nvars, F)], nvars, F, saturated=True)


def _mk_linked(F, seed, a=3, b=3, base="line", nvars=4):
    if base == "line":
        inside = _line_x0x1(F, nvars)
    elif base == "two_lines":
        inside = intersect_ideals(_line_x0x1(F), Ideal.parse(["z", "w"], 4, F, saturated=True))
    else:
        raise AvkitError(f"unknown linkage base {base!r}")
    ci = complete_intersection([a, b], nvars, F, derive_seed(seed, "link"), through=inside)
    out = linked_curve(ci, inside)
    out.meta["ci"] = ci
    return out


def _mk_linked_8_7(F, seed):
    X = _mk_linked(F, seed, 3, 3)
    X.name = "linked_8_7"
    X.meta["degree_genus"] = (8, 7)
    return X


def _mk_linked_7_4(F, seed):
    X = _mk_linked(F, seed, 3, 3, "two_lines")
    X.name = "linked_7_4"
    X.meta["degree_genus"] = (7, 4)
    return X


def _mk_linked_15_28(F, seed):
    X = _mk_linked(F, seed, 4, 4)
    X.name = "linked_15_28"
    X.meta["degree_genus"] = (15, 28)
    return X


def _mk_linked_8_7_plus_point(F, seed):
    X = _mk_linked(F, seed, 3, 3)
    P = point_ideal(ProjPoint.random(4, F, derive_seed(seed, "extra-point")), F)
    return intersect_ideals(X, P, name="linked_8_7_plus_point")


def _mk_linked_surface_p4(F, seed):
    X = _mk_linked(F, seed, 3, 3, "line", nvars=5)
    X.name = "linked_surface_p4"
    return X


def _mk_ci_444_points(F, seed):
    return complete_intersection([4, 4, 4], 4, F, seed, name="ci_444_points")


def _mk_ci33_p3(F, seed):
    return complete_intersection([3, 3], 4, F, seed, name="ci33_p3")


def _mk_ci33_p4(F, seed):
    return complete_intersection([3, 3], 5, F, seed, name="ci33_p4")


def _mk_quartics_triple_point(F, seed):
    Q = ProjPoint.random(4, F, derive_seed(seed, "vertex"))
    fat = fat_point_ideal(Q, 3, F)
    X = complete_intersection([4, 4], 4, F, derive_seed(seed, "ci"), through=fat, name="quartics_triple_point")
    X.meta["irreducibility"] = "assumed"
    return X


def _cone_vertex(F, seed) -> ProjPoint:
    while True:
        v = ProjPoint.random(4, F, seed)
        if v.coords[3] != 0:
            return v
        seed = derive_seed(seed, "again")


def _mk_b3_cone(F, seed):
    Z = points_ideal(B3_DUAL_POINTS, F, name="B3_dual_points")
    return cone_over(Z, _cone_vertex(F, derive_seed(seed, "vertex")), name="B3_cone")


def _mk_general9_cone(F, seed):
    Z = points_ideal(general_points(9, 3, F, derive_seed(seed, "base")), F)
    return cone_over(Z, _cone_vertex(F, derive_seed(seed, "vertex")), name="general9_cone")


def _mk_b3_points(F, seed):
    return points_ideal(B3_DUAL_POINTS, F, name="B3_dual_points")


def _mk_three_disjoint_lines(F, seed):
    lines = [random_line(4, F, derive_seed(seed, "line", k)) for k in range(3)]
    X = intersect_ideals(*lines, name="three_disjoint_lines")
    X.meta["lines"] = lines
    return X


def _mk_twisted18_plus6(F, seed):
    C = twisted_cubic(F)
    pts = points_on_variety(C, 18, derive_seed(seed, "on-curve")) + general_points(6, 4, F, derive_seed(seed, "gen"))
    return points_ideal(pts, F, name="twisted18_plus6")


def _mk_lines_6_7_7_plus4(F, seed):
    lines = [random_line(4, F, derive_seed(seed, "line", k)) for k in range(3)]
    pts = []
    for k, (L, c) in enumerate(zip(lines, (6, 7, 7))):
        pts += points_on_variety(L, c, derive_seed(seed, "on-line", k))
    pts += general_points(4, 4, F, derive_seed(seed, "gen"))
    return points_ideal(pts, F, name="lines_6_7_7_plus4")


def _mk_plane17_plus7(F, seed):
    C = plane_cubic(F, derive_seed(seed, "cubic"))
    pts = points_on_variety(C, 17, derive_seed(seed, "on-curve")) + general_points(7, 4, F, derive_seed(seed, "gen"))
    X = points_ideal(pts, F, name="plane17_plus7")
    X.meta["parts"] = {"curve": C, "general": pts[17:]}
    return X


def _mk_plane17_lines43(F, seed):
    C = plane_cubic(F, derive_seed(seed, "cubic"))
    l1 = random_line(4, F, derive_seed(seed, "l1"))
    l2 = random_line(4, F, derive_seed(seed, "l2"))
    pts = (points_on_variety(C, 17, derive_seed(seed, "on-curve"))
           + points_on_variety(l1, 4, derive_seed(seed, "on-l1"))
           + points_on_variety(l2, 3, derive_seed(seed, "on-l2")))
    return points_ideal(pts, F, name="plane17_lines43")


def _mk_degenerate_points(F, seed, count=7):
    pts = [p + (0,) for p in general_points(count, 3, F, derive_seed(seed, "plane"))]
    return points_ideal(pts, F, name="degenerate_points")


_BUILDERS: dict[str, Callable] = {
    "X1": _mk_X1,
    "X2": _mk_X2,
    "CI34_plus_point": _mk_ci34_plus_point,
    "root_An": _mk_root_An,
    "root_Yn": _mk_root_Yn,
    "twisted_cubic": _mk_twisted_cubic,
    "plane_cubic": _mk_plane_cubic,
    "B3_dual_points": _mk_b3_points,
    "B3_cone": _mk_b3_cone,
    "general9_cone": _mk_general9_cone,
    "three_disjoint_lines": _mk_three_disjoint_lines,
    "linked_8_7": _mk_linked_8_7,
    "linked_7_4": _mk_linked_7_4,
    "linked_15_28": _mk_linked_15_28,
    "linked_8_7_plus_point": _mk_linked_8_7_plus_point,
    "linked_surface_p4": _mk_linked_surface_p4,
    "ci_444_points": _mk_ci_444_points,
    "ci33_p3": _mk_ci33_p3,
    "ci33_p4": _mk_ci33_p4,
    "quartics_triple_point": _mk_quartics_triple_point,
    "twisted18_plus6": _mk_twisted18_plus6,
    "lines_6_7_7_plus4": _mk_lines_6_7_7_plus4,
    "plane17_plus7": _mk_plane17_plus7,
    "plane17_lines43": _mk_plane17_lines43,
    "degenerate_points": _mk_degenerate_points,
}

FIXTURE_NAMES = tuple(_BUILDERS)

_KIND = {
    "X1": "PointSet", "X2": "PointSet", "root_An": "PointSet", "root_Yn": "PointSet", "B3_dual_points": "PointSet",
    "twisted18_plus6": "PointSet", "lines_6_7_7_plus4": "PointSet", "plane17_plus7": "PointSet",
    "plane17_lines43": "PointSet", "degenerate_points": "PointSet", "CI34_plus_point": "Union",
    "linked_8_7_plus_point": "Union", "three_disjoint_lines": "Union", "ci_444_points": "CompleteIntersection",
    "ci33_p3": "CompleteIntersection", "ci33_p4": "CompleteIntersection",
    "quartics_triple_point": "CompleteIntersection", "linked_8_7": "Linked", "linked_7_4": "Linked",
    "linked_15_28": "Linked", "linked_surface_p4": "Linked", "B3_cone": "Cone", "general9_cone": "Cone",
}

_cache: dict = {}
_cache_lock = threading.Lock()


@dataclass(frozen=True)
class SchemeRecipe:
    kind: str
    name: str
    params: tuple = ()
    seed: int = 0

    def build(self, field: FieldSpec = GF) -> Ideal:
        key = (self.name, self.params, self.seed, field)
        with _cache_lock:
            if key in _cache:
                return _cache[key]
        I = _BUILDERS[self.name](field, self.seed, **dict(self.params))
        I.meta["recipe"] = self.to_json()
        with _cache_lock:
            _cache.setdefault(key, I)
            return _cache[key]

    def to_json(self) -> dict:
        return {"kind": self.kind, "name": self.name, "params": dict(self.params), "seed": self.seed}


def named_fixture(name: str, seed: int = 0, **params) -> SchemeRecipe:
    if name not in _BUILDERS:
        raise AvkitError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")
    return SchemeRecipe(_KIND.get(name, "NamedFixture"), name, tuple(sorted(params.items())), seed)


def build_fixture(name: str, field: FieldSpec = GF, seed: int = 0, **params) -> Ideal:
    return named_fixture(name, seed, **params).build(field)
