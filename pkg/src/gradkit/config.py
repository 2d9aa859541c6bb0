"""Runtime configuration: size limits and calibrated constants.

Loadable from a plain key=value file ('#' comments allowed), overridable
by CLI flags; unknown keys are rejected.  All logarithms in the toolkit
are base 2, recorded here as an informational note.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields

from .errors import InputError

ENV_VAR = "GRADKIT_CONFIG"


@dataclass
class Config:
    oracle_limit_r0: int = 16
    oracle_limit: int = 12
    certification_limit: int = 20
    exact_treedepth_limit: int = 20
    pattern_limit: int = 5
    separator_c1: float = 4.0
    minor_attempts: int = 8
    default_k: int = 4
    log_base: str = "2"

    def validate(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if f.type in ("int", "float") and value <= 0:
                raise InputError(f"config key {f.name} must be positive, got {value}")
        if self.log_base != "2":
            raise InputError("log_base is informational and fixed to 2")


def load_config(path: str) -> Config:
    cfg = Config()
    known = {f.name: f for f in fields(Config)}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if not sep:
                raise InputError(f"{path}:{lineno}: expected key=value, got {line!r}")
            if key not in known:
                raise InputError(f"{path}:{lineno}: unknown config key {key!r}")
            f = known[key]
            try:
                if f.type == "int":
                    setattr(cfg, key, int(value))
                elif f.type == "float":
                    setattr(cfg, key, float(value))
                else:
                    setattr(cfg, key, value)
            except ValueError:
                raise InputError(f"{path}:{lineno}: bad value for {key}: {value!r}") from None
    cfg.validate()
    return cfg


def resolve_config(flag_path: str | None) -> Config:
    """Config from --config flag, else $GRADKIT_CONFIG, else defaults."""
    path = flag_path or os.environ.get(ENV_VAR)
    if path:
        return load_config(path)
    return Config()
