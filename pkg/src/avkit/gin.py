"""Generic initial ideals (lex) and lex-segment tools."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import AvkitError, GenericityError
from .field import FieldSpec, derive_seed
from .graded import ChangedPieces, lex_leading_monomials, ndim
from .ideal import Ideal
from .monomial_ideal import MonomialIdeal
from .poly import LinearChange, monomials_of_degree
from .sequences import is_O_sequence


@dataclass(frozen=True)
class GinResult:
    monomial_ideal: MonomialIdeal
    seeds_used: tuple
    trials: int
    borel_certified: bool
    field_mode: FieldSpec
    degree_cap: int

    @property
    def probabilistic(self) -> bool:
        return self.field_mode.is_prime

    def piece(self, t: int) -> list:
        self._need(t)
        return self.monomial_ideal.piece(t)

    def _need(self, t: int) -> None:
        if t > self.degree_cap:
            raise AvkitError(f"gin computed up to degree {self.degree_cap}, degree {t} requested")

    def to_json(self) -> dict:
        return {
            "generators": [list(g) for g in self.monomial_ideal.generators],
            "text": self.monomial_ideal.to_text(),
            "degree_cap": self.degree_cap,
            "seeds": list(self.seeds_used),
            "trials": self.trials,
            "borel_certified": self.borel_certified,
            "field_mode": self.field_mode.label,
            "probabilistic": self.probabilistic,
        }


def _shift_up(monos, nvars: int) -> set:
    out = set()
    for m in monos:
        for i in range(nvars):
            out.add(m[:i] + (m[i] + 1,) + m[i + 1:])
    return out


def initial_generators(pieces: dict, nvars: int, cap: int) -> tuple:
    """Minimal generators of the monomial ideal with the given degree pieces."""
    gens = []
    prev: list = []
    for t in range(cap + 1):
        cur = pieces[t]
        below = _shift_up(prev, nvars)
        gens.extend(m for m in cur if m not in below)
        prev = cur
    return tuple(gens)


def _one_trial(I: Ideal, seed: int, cap: int) -> tuple:
    L = LinearChange.random(I.nvars, I.field, seed)
    cp = ChangedPieces(I, L.matrix)
    pieces = {t: lex_leading_monomials(cp.piece(t), I.nvars, t) for t in range(cap + 1)}
    return initial_generators(pieces, I.nvars, cap)


def gin(I: Ideal, trials: int = 2, seed: int = 0, degree_cap: int | None = None) -> GinResult:
    """Lex initial ideal after ``trials`` independent random coordinate changes.

    All trials must produce the same generators in degrees <= degree_cap.
    """
    if trials < 2:
        raise ValueError("gin needs at least two trials")
    if not I.is_homogeneous:
        raise AvkitError("gin needs a homogeneous ideal")
    cap = degree_cap if degree_cap is not None else I.max_generator_degree() + 1
    key = ("gin", cap, trials, seed)
    with I._lock:
        if key in I.meta.get("_gin_cache", {}):
            return I.meta["_gin_cache"][key]
    seeds = tuple(derive_seed(seed, "gin", k) for k in range(trials))
    results = [_one_trial(I, s, cap) for s in seeds]
    if any(r != results[0] for r in results[1:]):
        raise GenericityError(
            "insufficient genericity: random coordinate changes gave different initial ideals; "
            "use a larger coefficient pool (a bigger prime or rationals)"
        )
    M = MonomialIdeal(I.nvars, results[0])
    out = GinResult(M, seeds, trials, is_borel_fixed(M), I.field, cap)
    with I._lock:
        I.meta.setdefault("_gin_cache", {})[key] = out
    return out


def is_borel_fixed(M: MonomialIdeal) -> bool:
    """Strongly stable test on the minimal generators."""
    n = M.nvars
    for g in M.generators:
        for j in range(1, n):
            if not g[j]:
                continue
            for i in range(j):
                h = list(g)
                h[j] -= 1
                h[i] += 1
                if not M.contains(tuple(h)):
                    return False
    return True


def is_lex_segment(M: MonomialIdeal, t: int) -> bool:
    """[M]_t is an initial segment of the lex-descending degree-t monomials."""
    mask = M._mask(t)
    k = int(mask.sum())
    return bool(mask[:k].all())


def monomial_colon_by_power(M: MonomialIdeal, k: int) -> MonomialIdeal:
    """M : x0^k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    u = (k,) + (0,) * (M.nvars - 1)
    return M.colon_monomial(u)


def lex_segment_ideal_for(h, nvars: int, degree_cap: int) -> MonomialIdeal:
    """Lex-segment ideal L with h_{R/L}(t) = h(t) for t <= degree_cap.

    ``h`` is a sequence indexed from degree 0; degrees past its end repeat
    the last value.
    """
    vals = list(h.values) if hasattr(h, "values") else [int(v) for v in h]
    if not vals:
        raise ValueError("empty Hilbert function")
    chk = is_O_sequence(vals)
    if not chk:
        raise ValueError(f"not an O-sequence: {chk.reason}")
    if len(vals) > 1 and vals[1] > nvars:
        raise ValueError(f"h(1) = {vals[1]} exceeds the number of variables")
    gens = []
    prev: set = set()
    for t in range(degree_cap + 1):
        ht = vals[t] if t < len(vals) else vals[-1]
        mons = monomials_of_degree(nvars, t)
        size = ndim(nvars, t) - ht
        if size < 0:
            raise ValueError(f"h({t}) = {ht} exceeds dim R_{t}")
        seg = mons[:size]
        below = _shift_up(prev, nvars)
        if not below <= set(seg):
            raise ValueError(f"degree {t} segment does not contain the ideal generated below")
        gens.extend(m for m in seg if m not in below)
        prev = set(seg)
    return MonomialIdeal(nvars, tuple(gens))
