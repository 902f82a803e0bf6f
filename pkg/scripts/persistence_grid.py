"""Print the persistence table min(adim, AV) for a fixture or a points file."""
import argparse
from dataclasses import dataclass

from avkit.field import GF
from avkit.geometry import FIXTURE_NAMES, build_fixture
from avkit.hilbert import alpha
from avkit.io import load_points
from avkit.unexpected import persistence_table


@dataclass
class GridConfig:
    t_max: int = 8
    m_max: int = 8
    trials: int = 2
    seed: int = 0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    src = ap.add_mutually_exclusive_group(required=True)
    src.add_argument("--fixture", choices=FIXTURE_NAMES)
    src.add_argument("--points")
    ap.add_argument("--tmax", type=int, default=8)
    ap.add_argument("--mmax", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ns = ap.parse_args()
    cfg = GridConfig(ns.tmax, ns.mmax, 2, ns.seed)
    X = build_fixture(ns.fixture, GF, cfg.seed) if ns.fixture else load_points(ns.points, GF)
    print(f"{X.name}: alpha = {alpha(X)}")
    tab = persistence_table(X, cfg.t_max, cfg.m_max, cfg.trials, cfg.seed)
    print(tab.render())
    cells = tab.nonzero()
    print(f"{len(cells)} nonzero cells" + (f": {cells}" if cells else ""))


if __name__ == "__main__":
    main()
