"""Run configuration and resource budgets."""
from __future__ import annotations

import os
from dataclasses import asdict, dataclass, field as dc_field, replace

from .field import FieldSpec, GF

ENV_PREFIX = "AVKIT_"


@dataclass(frozen=True)
class Budget:
    """Caps for Groebner computations; ``None`` disables a cap."""

    max_pairs: int | None = 200_000
    max_coeff_bits: int | None = 20_000
    time_limit: float | None = None

    @classmethod
    def from_env(cls, base: "Budget | None" = None) -> "Budget":
        base = base or cls()
        kw = {}
        for name, conv in (("max_pairs", int), ("max_coeff_bits", int), ("time_limit", float)):
            raw = os.environ.get(ENV_PREFIX + name.upper())
            if raw is not None and raw != "":
                kw[name] = None if raw.lower() in ("none", "off") else conv(raw)
        return replace(base, **kw)

    def scaled(self, factor: float) -> "Budget":
        def s(v):
            return None if v is None else type(v)(v * factor)

        return Budget(s(self.max_pairs), s(self.max_coeff_bits), s(self.time_limit))


@dataclass(frozen=True)
class RunConfig:
    field: FieldSpec = GF
    seed: int = 0
    trials: int = 2
    budget: Budget = dc_field(default_factory=Budget)
    output: str = "table"

    def to_json(self) -> dict:
        return {
            "field_mode": self.field.label,
            "probabilistic": self.field.is_prime,
            "seed": self.seed,
            "trials": self.trials,
            "budget": asdict(self.budget),
            "output": self.output,
        }
