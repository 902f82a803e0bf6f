"""Fixture catalog with stored expectations, and a replay runner."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

from .errors import AvkitError, GenericityError
from .field import FieldSpec, GF, derive_seed
from .geometry import build_fixture, named_fixture

# Each check is (kind, params, expected). Kinds:
#   hf        params {}                       expected (h(0), h(1), ...)
#   gin       params {cap}                    expected generator text
#   av        params {j, m_max}               expected {"positive": (...), "tail": str, "tail_value": int}
#   detect    params {t, m}                   expected {"verdict": ..., "adim": ..., "edim": ...} (subset)
#   not_unexpected params {pairs}             expected True
#   certify   params {}                       expected bool
#   curve     params {t_range}                expected value C(e-1,2) - g
#   vdim      params {t, m}                   expected int
#   table_zero params {t_max, m_max}          expected True

G1 = "(x^4, x^3*y, x^3*z, x^2*y^3, x^2*y^2*z, x^2*y*z^3, x*y^5)"
CI34_GIN = ("(x^4, x^3*y, x^3*z, x^2*y^3, x^2*y^2*z, x^2*y*z^3, x^2*z^4, x*y^6, x*y^5*z, x*y^4*z^3, "
            "x*y^3*z^5, x*y^2*z^7, x*y*z^9, x*z^11, y^13)")
HF13 = (1, 3, 6, 10, 12, 13, 13)


@dataclass(frozen=True)
class FixtureEntry:
    key: str
    fixture: str
    params: dict
    citation: str
    checks: tuple
    tier: str = "default"

    def recipe(self, seed: int = 0):
        return named_fixture(self.fixture, seed, **self.params)

    def to_json(self) -> dict:
        return {
            "key": self.key, "recipe": self.recipe().to_json(), "citation": self.citation, "tier": self.tier,
            "checks": [{"kind": k, "params": p, "expected": _jsonable(e)} for k, p, e in self.checks],
        }


def _jsonable(x):
    if isinstance(x, tuple):
        return list(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


def _av(j, m_max, positive, tail="zero", tail_value=0):
    return ("av", {"j": j, "m_max": m_max}, {"positive": tuple(positive), "tail": tail, "tail_value": tail_value})


MANIFEST: tuple = (
    FixtureEntry("X1", "X1", {}, "13 points in P^2, first configuration with an unexpected sextic",
                 (("hf", {}, HF13), ("gin", {"cap": 6}, G1),
                  ("detect", {"t": 6, "m": 5}, {"verdict": "unexpected", "adim": 1, "edim": 0, "vdim": 0}))),
    FixtureEntry("X2", "X2", {}, "13 points in P^2, second configuration with an unexpected sextic",
                 (("hf", {}, HF13), ("gin", {"cap": 6}, G1),
                  ("detect", {"t": 6, "m": 5}, {"verdict": "unexpected", "adim": 1, "edim": 0}))),
    FixtureEntry("CI34_plus_point", "CI34_plus_point", {}, "complete intersection (3,4) in P^2 plus one point",
                 (("hf", {}, HF13), ("gin", {"cap": 14}, CI34_GIN),
                  ("not_unexpected", {"pairs": [(6, 5)]}, True))),
    *(FixtureEntry(f"root_An_{n}", "root_An", {"n": n}, f"root-system points X_{n} in P^{n}",
                   (("certify", {}, True),), "default" if n <= 6 else "deep") for n in range(3, 9)),
    FixtureEntry("root_Yn_3", "root_Yn", {"n": 3}, "sign-flipped root-system points Y_3 in P^3",
                 (("detect", {"t": 3, "m": 3}, {"verdict": "unexpected"}),)),
    FixtureEntry("twisted_cubic", "twisted_cubic", {}, "twisted cubic curve",
                 (("detect", {"t": 3, "m": 3}, {"adim": 1}), ("curve", {"t_range": (3, 4, 5, 6)}, 1))),
    FixtureEntry("plane_cubic", "plane_cubic", {}, "smooth plane cubic in P^3",
                 (("curve", {"t_range": (3, 4, 5)}, 0),)),
    FixtureEntry("linked_8_7", "linked_8_7", {}, "degree 8 genus 7 curve linked to a line by two cubics",
                 (_av(1, 6, (1, 2, 1)), _av(0, 9, (1, 4, 8, 11, 13, 14, 14, 14, 14), "constant", 14),
                  _av(2, 6, ()), ("curve", {"t_range": (8, 9)}, 14))),
    FixtureEntry("linked_7_4", "linked_7_4", {}, "degree 7 genus 4 curve linked to two skew lines",
                 (_av(1, 6, (1, 2)),)),
    FixtureEntry("linked_8_7_plus_point", "linked_8_7_plus_point", {}, "degree 8 link plus a general point",
                 (_av(1, 6, (1, 3, 2)),)),
    FixtureEntry("linked_15_28", "linked_15_28", {}, "degree 15 genus 28 curve linked to a line by two quartics",
                 (_av(2, 6, (1, 2, 2)),)),
    FixtureEntry("ci_444_points", "ci_444_points", {}, "64 points, complete intersection of three quartics",
                 (_av(1, 8, (1, 4, 7, 8, 5)),)),
    FixtureEntry("B3_cone", "B3_cone", {}, "cone over the nine B3 points",
                 (_av(1, 7, (1, 3, 4, 4, 4, 4, 4), "constant", 4),)),
    FixtureEntry("general9_cone", "general9_cone", {}, "cone over nine general plane points",
                 (_av(1, 7, (1, 3, 3, 3, 3, 3, 3), "constant", 3),)),
    FixtureEntry("ci33_p3", "ci33_p3", {}, "complete intersection of two cubics in P^3",
                 (("detect", {"t": 5, "m": 4}, {"verdict": "unexpected"}), ("vdim", {"t": 5, "m": 4}, 0))),
    FixtureEntry("ci33_p4", "ci33_p4", {}, "complete intersection of two cubics in P^4",
                 (("hf", {}, (1, 5, 15, 33, 60, 96, 141)), ("vdim", {"t": 5, "m": 4}, -5),
                  ("detect", {"t": 5, "m": 4}, {"verdict": "unexpected"}))),
    FixtureEntry("twisted_plus_6", "twisted18_plus6", {}, "18 points on a twisted cubic plus 6 general",
                 (("not_unexpected", {"pairs": [(t, t) for t in range(1, 9)]}, True),)),
    FixtureEntry("skew_lines_plus_4", "lines_6_7_7_plus4", {}, "points on three skew lines plus 4 general",
                 (("detect", {"t": 5, "m": 5}, {"verdict": "unexpected", "adim": 2, "edim": 0}),)),
    FixtureEntry("plane_cubic_plus_7", "plane17_plus7", {}, "17 points on a plane cubic plus 7 general",
                 (("detect", {"t": 5, "m": 5}, {"adim": 0}), ("av0", {"m": 5}, 1))),
    FixtureEntry("plane_cubic_two_lines", "plane17_lines43", {}, "17 points on a plane cubic plus 4 and 3 on two lines",
                 (("hf", {}, (1, 4, 10, 16, 19, 22, 24, 24)),
                  ("detect", {"t": 5, "m": 5}, {"verdict": "unexpected"}))),
    FixtureEntry("degenerate_points", "degenerate_points", {}, "seven points in a plane of P^3",
                 (("table_zero", {"t_max": 6, "m_max": 6}, True), ("certify", {}, True))),
    FixtureEntry("linked_surface_p4", "linked_surface_p4", {}, "degree 8 surface in P^4 linked to a plane",
                 (_av(1, 6, (1, 3, 4, 4, 4, 4), "constant", 4),), "deep"),
    FixtureEntry("quartics_triple_point", "quartics_triple_point", {},
                 "two quartics with a triple point (irreducibility assumed)",
                 (_av(1, 14, (1, 4, 8, 12, 15, 16, 15, 12, 8, 4, 2, 2, 2, 2), "constant", 2),), "deep"),
)


def manifest(deep: bool = True) -> list[FixtureEntry]:
    return [e for e in MANIFEST if deep or e.tier == "default"]


def entry(key: str) -> FixtureEntry:
    for e in MANIFEST:
        if e.key == key:
            return e
    raise AvkitError(f"no manifest entry {key!r}")


@dataclass
class CheckResult:
    kind: str
    params: dict
    expected: object
    observed: object
    ok: bool

    def to_json(self) -> dict:
        return {"kind": self.kind, "params": _jsonable(self.params), "expected": _jsonable(self.expected),
                "observed": _jsonable(self.observed), "ok": self.ok}


@dataclass
class EntryResult:
    key: str
    citation: str
    checks: list = dc_field(default_factory=list)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {"key": self.key, "citation": self.citation, "ok": self.ok, "error": self.error,
                "checks": [c.to_json() for c in self.checks]}


def run_check(X, kind: str, params: dict, expected, trials: int = 2, seed: int = 0):
    from . import unexpected as U
    from .gin import gin
    from .hilbert import hilbert_value

    if kind == "hf":
        obs = tuple(hilbert_value(X, t) for t in range(len(expected)))
        return obs, obs == tuple(expected)
    if kind == "gin":
        obs = gin(X, max(trials, 2), seed, params["cap"]).monomial_ideal.to_text()
        return obs, obs == expected
    if kind == "av":
        rep = U.av_sequence(X, params["j"], params["m_max"], "both", trials, seed)
        obs = {"positive": rep.positive_support.values, "tail": rep.tail, "tail_value": rep.tail_value}
        return obs, obs == expected
    if kind == "detect":
        v = U.detect(X, params["t"], params["m"], trials, seed).to_json()
        obs = {k: v[k] for k in expected}
        return obs, obs == expected
    if kind == "not_unexpected":
        bad = [(t, m) for t, m in params["pairs"] if U.detect(X, t, m, trials, seed).verdict == U.UNEXPECTED]
        return bad, (not bad) == expected
    if kind == "certify":
        c = U.certify_no_unexpected(X, trials, seed)
        return {"certified": c.certified, "alpha": c.alpha, "av0_alpha": c.av_value}, c.certified == expected
    if kind == "curve":
        rep = U.curve_av_formula_check(X, t_range=params["t_range"], trials=trials, seed=seed)
        obs = sorted(set(rep.values.values()))
        return obs, obs == [expected] and rep.expected == expected
    if kind == "vdim":
        obs = U.vdim_edim(X, params["t"], params["m"])[0]
        return obs, obs == expected
    if kind == "av0":
        obs = U.av_value(X, 0, params["m"], trials, seed)
        return obs, obs == expected
    if kind == "table_zero":
        tab = U.persistence_table(X, params["t_max"], params["m_max"], trials, seed)
        return tab.nonzero(), tab.is_zero() == expected
    raise AvkitError(f"unknown check kind {kind!r}")


def replay(e: FixtureEntry, field: FieldSpec = GF, trials: int = 2, seed: int = 0) -> EntryResult:
    res = EntryResult(e.key, e.citation)
    try:
        X = build_fixture(e.fixture, field, seed, **e.params)
        for kind, params, expected in e.checks:
            obs, ok = run_check(X, kind, params, expected, trials, derive_seed(seed, e.key, kind))
            res.checks.append(CheckResult(kind, params, expected, obs, ok))
    except (GenericityError, AvkitError) as exc:
        res.error = f"{type(exc).__name__}: {exc}"
    return res


def run_suite(keys=None, deep: bool = False, field: FieldSpec = GF, trials: int = 2, seed: int = 0,
              workers: int = 1) -> list[EntryResult]:
    entries = [entry(k) for k in keys] if keys else manifest(deep)
    if workers <= 1:
        return [replay(e, field, trials, seed) for e in entries]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(lambda e: replay(e, field, trials, seed), entries))
