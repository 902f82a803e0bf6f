"""Run the AV_{X,1} shape experiment over curve fixtures.

For each fixture of degree d, records whether AV_{X,1} is a nonzero,
finite SI-sequence ending in degree d - 6. Purely numerical.
"""
import argparse
import json
from dataclasses import dataclass

from avkit.field import GF
from avkit.geometry import build_fixture
from avkit.unexpected import conjecture_harness

# (curve fixture, degree)
DEFAULT = [("linked_8_7", 8), ("linked_7_4", 7), ("linked_15_28", 15)]


@dataclass
class HarnessConfig:
    m_max: int = 8
    trials: int = 2
    seed: int = 0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-max", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    ns = ap.parse_args()
    cfg = HarnessConfig(ns.m_max, 2, ns.seed)
    rows = []
    for name, deg in DEFAULT:
        X = build_fixture(name, GF, cfg.seed)
        rep = conjecture_harness(X, deg, cfg.m_max, cfg.trials, cfg.seed)
        rows.append({"fixture": name, "degree": deg, **rep.to_json()})
        if not ns.json:
            ch = rep.checks
            print(f"{name:<16s} AV_1 = {rep.values}  {rep.verdict:<12s} "
                  f"si={ch['si']} ends={ch['ends_in_degree']} (want {deg - 6})")
    if ns.json:
        print(json.dumps(rows, indent=2, default=str))


if __name__ == "__main__":
    main()
