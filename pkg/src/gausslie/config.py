"""Sample points and tolerances for the numerical checks.

A JSON file may override any field::

    {"taus": [[0.0, 1.0], [0.3, 0.9]], "seed": 7, "tol": 1e-12,
     "z_real_scale": 0.5, "z_imag_scale": 0.2, "eps_coarse": 0.1, "eps_fine": 0.05}

``taus`` are ``[real, imag]`` pairs.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path

import numpy as np

CONFIG_VERSION = 1


@dataclass(frozen=True)
class SampleConfig:
    taus: tuple[complex, ...] = (1j, 0.3 + 0.9j, -0.4 + 0.7j)
    seed: int = 20240611
    tol: float = 1e-12
    z_real_scale: float = 0.5
    z_imag_scale: float = 0.2
    eps_coarse: float = 0.1
    eps_fine: float = 0.05
    law_threshold: float = 1e-8
    sdual_threshold: float = 1e-7
    phase_threshold: float = 1e-8
    version: int = field(default=CONFIG_VERSION)

    def __post_init__(self):
        taus = tuple(complex(t) for t in self.taus)
        if not taus or any(t.imag <= 0 for t in taus):
            raise ValueError("every sample tau must lie in the upper half plane")
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if not 0 < self.eps_fine < self.eps_coarse <= 0.2:
            raise ValueError("need 0 < eps_fine < eps_coarse <= 0.2")
        object.__setattr__(self, "taus", taus)

    def z_for(self, rank: int, salt: str = "") -> tuple[complex, ...]:
        """Deterministic sample ``z`` for a given rank (and optional label)."""
        key = [self.seed, rank] + [ord(c) for c in salt]
        rng = np.random.default_rng(key)
        re = rng.uniform(-self.z_real_scale, self.z_real_scale, rank)
        im = rng.uniform(-self.z_imag_scale, self.z_imag_scale, rank)
        return tuple(complex(a, b) for a, b in zip(re, im))

    def to_json(self) -> dict:
        d = asdict(self)
        d["taus"] = [[t.real, t.imag] for t in self.taus]
        return d

    @classmethod
    def from_json(cls, data: dict) -> "SampleConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        d = dict(data)
        if "taus" in d:
            d["taus"] = tuple(complex(*t) if isinstance(t, (list, tuple)) else complex(t) for t in d["taus"])
        return replace(cls(), **d)


def load_config(path: str | Path | None = None) -> SampleConfig:
    if path is None:
        return SampleConfig()
    return SampleConfig.from_json(json.loads(Path(path).read_text()))
