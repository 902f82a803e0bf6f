"""Replay the fixture manifest and write a JSON report."""
import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass

from avkit.field import FieldSpec
from avkit.fixtures import run_suite


@dataclass
class SuiteConfig:
    field: str = "fp:2147483647"
    seed: int = 0
    trials: int = 2
    deep: bool = False
    workers: int = 4
    out: str | None = None


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("keys", nargs="*")
    ap.add_argument("--field", default=SuiteConfig.field)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=2)
    ap.add_argument("--deep", action="store_true")
    ap.add_argument("--workers", type=int, default=4)
    ap.add_argument("--out")
    ns = ap.parse_args()
    cfg = SuiteConfig(ns.field, ns.seed, ns.trials, ns.deep, ns.workers, ns.out)
    start = time.perf_counter()
    results = run_suite(ns.keys or None, cfg.deep, FieldSpec.from_label(cfg.field), cfg.trials, cfg.seed,
                        cfg.workers)
    for r in results:
        print(f"{'ok' if r.ok else 'MISMATCH':<9s}{r.key}")
    bad = sum(not r.ok for r in results)
    print(f"{len(results) - bad}/{len(results)} match in {time.perf_counter() - start:.1f}s")
    if cfg.out:
        doc = {"config": asdict(cfg), "results": [r.to_json() for r in results]}
        with open(cfg.out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, default=str)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
