"""Command-line front end.

Exit codes: 0 success, 1 verdict or expectation mismatch, 2 usage, parse,
budget or genericity errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import warnings

from .config import Budget, RunConfig
from .errors import AvkitError, BudgetExhausted, GenericityError, GenericityWarning, ParseError
from .field import FieldSpec
from .geometry import FIXTURE_NAMES, build_fixture

SCHEMA = "avkit/1"
log = logging.getLogger("avkit")


class UsageError(AvkitError):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--field", default=argparse.SUPPRESS, help="fp:<prime> (default fp:2147483647) or rationals")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p.add_argument("--trials", type=int, default=argparse.SUPPRESS)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    p.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)
    return p


def _scheme_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("source", nargs="?", help="points file or ideal file (sniffed from the header)")
    p.add_argument("--fixture", choices=FIXTURE_NAMES, help="named fixture instead of a file")
    p.add_argument("--n", type=int, help="size parameter for root_An / root_Yn / degenerate_points")
    p.add_argument("--no-saturate", action="store_true", help="skip saturation of ideal files")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="avkit", parents=[common],
                                 description="Unexpected hypersurfaces and AV sequences.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert function and h-vector")
    _scheme_args(p)
    p.add_argument("--tmax", type=int, default=10)

    p = sub.add_parser("gin", parents=[common], help="generic initial ideal (lex)")
    _scheme_args(p)
    p.add_argument("--cap", type=int, default=None)

    p = sub.add_parser("av", parents=[common], help="AV sequence AV_{X,j}(1..mmax)")
    _scheme_args(p)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--mmax", type=int, default=8)
    p.add_argument("--route", choices=("direct", "gin_colon", "both"), default="both")

    p = sub.add_parser("detect", parents=[common], help="verdict for degree t, multiplicity m")
    _scheme_args(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("table", parents=[common], help="persistence table min(adim, AV)")
    _scheme_args(p)
    p.add_argument("--tmax", type=int, default=8)
    p.add_argument("--mmax", type=int, default=8)

    p = sub.add_parser("certify", parents=[common], help="certificate of no unexpected hypersurfaces")
    _scheme_args(p)

    p = sub.add_parser("ci-witness", parents=[common], help="witness form for a complete intersection (a, b)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--n", type=int, default=3, help="ambient projective dimension")

    p = sub.add_parser("fixtures", parents=[common], help="fixture catalog")
    p.add_argument("action", choices=("run", "list"))
    p.add_argument("names", nargs="*", help="manifest keys, or 'all'")
    p.add_argument("--deep", action="store_true", help="include the expensive tier")
    p.add_argument("--workers", type=int, default=1)
    return ap


def _config(ns) -> RunConfig:
    try:
        F = FieldSpec.from_label(getattr(ns, "field", "fp:2147483647"))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    trials = getattr(ns, "trials", 2)
    if trials < 1:
        raise UsageError("--trials must be positive")
    return RunConfig(F, getattr(ns, "seed", 0), trials, Budget.from_env(),
                     "json" if getattr(ns, "json", False) else "table")


def parse_scheme(ns, cfg: RunConfig):
    """Ideal from --fixture or a file; returns (ideal, description)."""
    from . import io

    if ns.fixture and ns.source:
        raise UsageError("give either a file or --fixture, not both")
    if ns.fixture:
        params = {"n": ns.n} if ns.n is not None and ns.fixture in ("root_An", "root_Yn") else {}
        if ns.n is not None and ns.fixture == "degenerate_points":
            params = {"count": ns.n}
        X = build_fixture(ns.fixture, cfg.field, cfg.seed, **params)
        return X, {"fixture": ns.fixture, "params": params}
    if not ns.source:
        raise UsageError("a points/ideal file or --fixture is required")
    kind = io.sniff(ns.source)
    if kind == "points":
        return io.load_points(ns.source, cfg.field), {"file": ns.source, "kind": "points"}
    X, notice = io.load_ideal(ns.source, cfg.field, saturate=not ns.no_saturate, budget=cfg.budget)
    if notice:
        print(f"notice: {notice}", file=sys.stderr)
    return X, {"file": ns.source, "kind": "ideal", "notice": notice}


def _emit(cfg: RunConfig, payload: dict, text: str) -> None:
    if cfg.output == "json":
        doc = {"schema": SCHEMA, "config": cfg.to_json(), **payload}
        print(json.dumps(doc, indent=2, sort_keys=True, default=str))
    else:
        print(text)


def _seq(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def cmd_hilbert(ns, cfg):
    from .hilbert import h_vector, hilbert_function

    X, scheme = parse_scheme(ns, cfg)
    hf = hilbert_function(X, ns.tmax)
    try:
        hv = h_vector(X, max(ns.tmax, 40)).entries
    except BudgetExhausted:
        hv = None
    text = f"h_R/I: {_seq(hf.values)}"
    if hv is not None:
        text += f"\nh-vector: {_seq(hv)}"
    _emit(cfg, {"scheme": scheme, "hilbert": hf.to_json(), "h_vector": hv}, text)
    return 0


def cmd_gin(ns, cfg):
    from .gin import gin

    X, scheme = parse_scheme(ns, cfg)
    g = gin(X, max(cfg.trials, 2), cfg.seed, ns.cap)
    _emit(cfg, {"scheme": scheme, "gin": g.to_json()},
          f"gin (degrees <= {g.degree_cap}): {g.monomial_ideal.to_text()}\nBorel-fixed: {g.borel_certified}")
    return 0


def cmd_av(ns, cfg):
    from .unexpected import av_sequence

    X, scheme = parse_scheme(ns, cfg)
    rep = av_sequence(X, ns.j, ns.mmax, ns.route, cfg.trials, cfg.seed)
    js = rep.to_json()
    text = (f"AV_(X,{ns.j})(1..{ns.mmax}) = {_seq(rep.sequence())}\n"
            f"positive part: {_seq(rep.positive_support.values)}  tail: {js['tail']}\n"
            f"O-sequence: {rep.o_sequence_check}  SI: {js['si']}  route: {rep.route}")
    _emit(cfg, {"scheme": scheme, "seeds": list(rep.seeds), "av": js}, text)
    return 0


def cmd_detect(ns, cfg):
    from .unexpected import detect, dim_triple

    X, scheme = parse_scheme(ns, cfg)
    d = dim_triple(X, ns.t, ns.m, cfg.trials, cfg.seed)
    v = detect(X, ns.t, ns.m, cfg.trials, cfg.seed)
    text = f"t={ns.t} m={ns.m}: {v.verdict}  adim={v.adim} vdim={v.vdim} edim={v.edim}"
    if v.witness_hint:
        text += f"  ({v.witness_hint})"
    _emit(cfg, {"scheme": scheme, "seeds": list(d.seeds), "triples": [d.to_json()], "verdict": v.to_json()}, text)
    return 0


def cmd_table(ns, cfg):
    from .unexpected import persistence_table

    X, scheme = parse_scheme(ns, cfg)
    tab = persistence_table(X, ns.tmax, ns.mmax, cfg.trials, cfg.seed)
    _emit(cfg, {"scheme": scheme, "table": tab.to_json()}, tab.render())
    return 0


def cmd_certify(ns, cfg):
    from .unexpected import certify_no_unexpected

    X, scheme = parse_scheme(ns, cfg)
    c = certify_no_unexpected(X, cfg.trials, cfg.seed)
    if c.certified:
        text = f"certificate: alpha = {c.alpha}, AV_(X,0)({c.alpha}) = 0; no unexpected hypersurface for any (t, m)"
    else:
        text = f"refused: alpha = {c.alpha}, AV_(X,0)({c.alpha}) = {c.av_value}"
    _emit(cfg, {"scheme": scheme, "seeds": list(c.seeds), "certificates": [c.to_json()]}, text)
    return 0


def cmd_ci_witness(ns, cfg):
    from .unexpected import sylvester_witness

    if ns.n < 2:
        raise UsageError("--n must be at least 2")
    w = sylvester_witness(ns.a, ns.b, ns.j, ns.n + 1, cfg.field, cfg.seed)
    ok = w.in_ideal and w.strip_ok
    text = (f"t = {w.t}, m = {w.m}: deg det(M) = {w.matrix_det.degree()}, deg T = {w.witness_form.degree()}\n"
            f"T in (F, G): {w.in_ideal}  x0-strip: {w.strip_ok}")
    _emit(cfg, {"witness": w.to_json()}, text)
    return 0 if ok else 1


def cmd_fixtures(ns, cfg):
    from .fixtures import manifest, run_suite

    if ns.action == "list":
        entries = manifest(True)
        text = "\n".join(f"{e.key:<28s} {e.tier:<8s} {e.citation}" for e in entries)
        _emit(cfg, {"manifest": [e.to_json() for e in entries]}, text)
        return 0
    keys = None if not ns.names or ns.names == ["all"] else ns.names
    results = run_suite(keys, ns.deep, cfg.field, cfg.trials, cfg.seed, ns.workers)
    lines = []
    for r in results:
        status = "ok" if r.ok else "MISMATCH"
        lines.append(f"{status:<9s}{r.key}")
        for c in r.checks:
            if not c.ok:
                lines.append(f"    {c.kind} {c.params}: expected {c.expected}, observed {c.observed}")
        if r.error:
            lines.append(f"    error: {r.error}")
    failed = sum(not r.ok for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} entries match")
    _emit(cfg, {"fixtures": [r.to_json() for r in results]}, "\n".join(lines))
    if any(r.error and ("Genericity" in r.error or "Budget" in r.error) for r in results):
        return 2
    return 1 if failed else 0


COMMANDS = {
    "hilbert": cmd_hilbert, "gin": cmd_gin, "av": cmd_av, "detect": cmd_detect, "table": cmd_table,
    "certify": cmd_certify, "ci-witness": cmd_ci_witness, "fixtures": cmd_fixtures,
}


def main(argv=None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if getattr(ns, "verbose", False) else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = _config(ns)
        with warnings.catch_warnings():
            warnings.simplefilter("always", GenericityWarning)
            return COMMANDS[ns.cmd](ns, cfg)
    except ParseError as exc:
        print(f"avkit: parse error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, FileNotFoundError) as exc:
        print(f"avkit: usage error: {exc}", file=sys.stderr)
        return 2
    except (BudgetExhausted, GenericityError) as exc:
        print(f"avkit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except AvkitError as exc:
        print(f"avkit: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
