"""Text formats for point sets and ideals.

Points file: one point per line, whitespace-separated integer or p/q
coordinates; ``#`` starts a comment. An optional ``field: <label>`` line
selects the coefficient field.

Ideal file: a ``ring: n=<nvars> field=<label>`` header, then one generator
per line in the polynomial grammar.
"""
from __future__ import annotations

import re
from pathlib import Path

from .errors import ParseError
from .field import FieldSpec, GF, parse_scalar
from .ideal import Ideal
from .poly import parse_polynomial

_HEADER = re.compile(r"ring\s*:\s*n\s*=\s*(\d+)(?:\s+field\s*=\s*(\S+))?\s*$", re.I)
_FIELD = re.compile(r"field\s*:\s*(\S+)\s*$", re.I)


def _lines(text: str):
    for k, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield k, body, len(body) - len(body.lstrip()) + 1


def _field_from(label: str, line: int, col: int) -> FieldSpec:
    try:
        return FieldSpec.from_label(label)
    except ValueError as exc:
        raise ParseError(str(exc), line, col) from None


def parse_points(text: str, field: FieldSpec | None = None) -> tuple[list[tuple], FieldSpec]:
    pts: list[tuple] = []
    F = field
    width = None
    seen: dict = {}
    for k, body, col in _lines(text):
        m = _FIELD.match(body.strip())
        if m:
            if pts:
                raise ParseError("field line must precede the points", k, col)
            F = F or _field_from(m.group(1), k, col)
            continue
        F = F or GF
        coords = []
        for tok in re.finditer(r"\S+", body):
            coords.append(parse_scalar(tok.group(), F, k, tok.start() + 1))
        if width is None:
            width = len(coords)
            if width < 2:
                raise ParseError("a projective point needs at least two coordinates", k, col)
        elif len(coords) != width:
            raise ParseError(f"expected {width} coordinates, found {len(coords)}", k, col)
        if all(c == F.zero() for c in coords):
            raise ParseError("the zero vector is not a projective point", k, col)
        from .geometry import ProjPoint

        key = ProjPoint(tuple(coords), F).coords
        if key in seen:
            raise ParseError(f"duplicate point (same as line {seen[key]})", k, col)
        seen[key] = k
        pts.append(tuple(coords))
    if not pts:
        raise ParseError("no points in file", 1, 1)
    return pts, F or GF


def parse_ideal(text: str, field: FieldSpec | None = None) -> Ideal:
    nvars = None
    F = field
    gens = []
    for k, body, col in _lines(text):
        if nvars is None:
            m = _HEADER.match(body.strip())
            if not m:
                raise ParseError("expected header 'ring: n=<nvars> field=<label>'", k, col)
            nvars = int(m.group(1))
            if m.group(2) and F is None:
                F = _field_from(m.group(2), k, col)
            F = F or GF
            continue
        f = parse_polynomial(body, nvars, F, line=k)
        if not f.is_homogeneous():
            raise ParseError("generator is not homogeneous", k, col)
        gens.append(f)
    if nvars is None:
        raise ParseError("empty ideal file", 1, 1)
    if not gens:
        raise ParseError("ideal file has no generators", 1, 1)
    return Ideal(gens, nvars, F)


def load_points(path: str | Path, field: FieldSpec | None = None) -> Ideal:
    from .geometry import points_ideal

    pts, F = parse_points(Path(path).read_text(encoding="utf-8"), field)
    return points_ideal(pts, F, name=Path(path).stem)


def load_ideal(path: str | Path, field: FieldSpec | None = None, saturate: bool = True,
               budget=None) -> tuple[Ideal, str | None]:
    """Parse an ideal file; returns (ideal, notice). The notice is set when saturation changed the ideal."""
    from .groebner import same_ideal, saturation

    I = parse_ideal(Path(path).read_text(encoding="utf-8"), field)
    I.name = Path(path).stem
    if not saturate:
        return I, None
    S = saturation(I, budget=budget)
    S.name = I.name
    if same_ideal(S, I, budget):
        return S, None
    return S, "saturation changed the ideal"


def sniff(path: str | Path) -> str:
    """'ideal' if the first content line is a ring header, else 'points'."""
    for _, body, _ in _lines(Path(path).read_text(encoding="utf-8")):
        return "ideal" if _HEADER.match(body.strip()) else "points"
    raise ParseError("empty file", 1, 1)


def write_points(points, path: str | Path) -> None:
    lines = [" ".join(str(c) for c in P) for P in points]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_ideal(I: Ideal, path: str | Path) -> None:
    head = f"ring: n={I.nvars} field={I.field.label}"
    Path(path).write_text("\n".join([head, *I.to_lines()]) + "\n", encoding="utf-8")
