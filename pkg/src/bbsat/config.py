from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .join import DEFAULT_R_MAX
from .randsearch import DEFAULT_N_MAX
from .ssat import DEFAULT_W_MAX

ENV_PREFIX = "BBSAT_"


@dataclass(frozen=True)
class SolverConfig:
    w_max: int = DEFAULT_W_MAX
    r_max: int = DEFAULT_R_MAX
    n_max: int = DEFAULT_N_MAX
    seed: int | None = None
    pair_budget: int | None = None
    # join both race lanes before returning and cross-check their answers
    test_mode: bool = False

    @classmethod
    def from_env(cls, environ=None, **overrides) -> "SolverConfig":
        """Defaults, then ``BBSAT_*`` variables, then explicit overrides."""
        environ = os.environ if environ is None else environ
        values = {}
        for f in fields(cls):
            raw = environ.get(ENV_PREFIX + f.name.upper())
            if raw is None or raw == "":
                continue
            if f.name == "test_mode":
                values[f.name] = raw.lower() in ("1", "true", "yes", "on")
            else:
                values[f.name] = int(raw, 0)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return replace(cls(), **values)
