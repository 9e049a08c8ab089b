"""Run configuration: defaults < TOML file < command-line flags."""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from pathlib import Path

import tomli

from .errors import ParseError
from .sweep import default_workers

FORMATS = ("table", "json", "csv")
MIN_BUDGET = 10**4
_TYPES = {"budget_candidates": int, "workers": int, "output_format": str, "automorphism_pruning": bool}


@dataclass(frozen=True)
class RunConfig:
    budget_candidates: int = 10**8
    workers: int = 0  # 0 means "all available cores"
    output_format: str = "table"
    automorphism_pruning: bool = False

    def __post_init__(self):
        for name, typ in _TYPES.items():
            if not isinstance(getattr(self, name), typ):
                raise ParseError(f"config value {name} = {getattr(self, name)!r} has the wrong type")
        if self.budget_candidates < MIN_BUDGET:
            raise ParseError(f"budget must be at least {MIN_BUDGET}")
        if self.workers < 0:
            raise ParseError("workers must be >= 1")
        if self.output_format not in FORMATS:
            raise ParseError(f"format must be one of {', '.join(FORMATS)}")
        if self.workers == 0:
            object.__setattr__(self, "workers", default_workers())

    def override(self, **changes) -> "RunConfig":
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def load_config(path: str | Path | None) -> RunConfig:
    if path is None:
        return RunConfig()
    try:
        with open(path, "rb") as fh:
            data = tomli.load(fh)
    except (OSError, tomli.TOMLDecodeError) as exc:
        raise ParseError(f"cannot read config {path}: {exc}") from exc
    data = data.get("sepnoether", data)
    known = {f.name for f in fields(RunConfig)}
    unknown = set(data) - known
    if unknown:
        raise ParseError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return RunConfig(**data)
