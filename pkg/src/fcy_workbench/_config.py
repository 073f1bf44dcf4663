"""YAML configuration loading."""

from __future__ import annotations

import logging
import os
from pathlib import Path

import yaml
from pydantic import BaseModel, Field

from ._dynkin import DEFAULT_TABLE
from ._wpl import TUBULAR_TYPES

logger = logging.getLogger(__name__)

THREADS_ENV = "FCY_THREADS"


class DynkinOptions(BaseModel):
    diagrams: list[str] = Field(default_factory=lambda: ["A2", "A3", "A4", "A5", "D4", "D5", "E6"])
    table: list[str] = Field(default_factory=lambda: list(DEFAULT_TABLE))
    orientation_check: list[str] = Field(default_factory=lambda: ["A3", "D4"])


class TubeOptions(BaseModel):
    ranks: list[int] = Field(default_factory=lambda: [1, 2, 3, 4])
    max_length: int = Field(default=8, ge=1)


class KroneckerOptions(BaseModel):
    pairs: int = Field(default=5, ge=1)
    max_preprojective: int = Field(default=4, ge=0)


class WplOptions(BaseModel):
    weights: list[list[int]] = Field(default_factory=lambda: [list(w) for w in TUBULAR_TYPES])
    max_sum: int = Field(default=12, ge=2)


class TwistOptions(BaseModel):
    max_r: int = Field(default=6, ge=1)
    l_range: int = Field(default=5, ge=0)


class TorsionOptions(BaseModel):
    thetas: list[str] = Field(default_factory=lambda: ["-1", "0", "1/2", "inf"])
    bracket: str = "1414/1000:1415/1000"
    pairs: int = Field(default=200, ge=1)


class SuiteOptions(BaseModel):
    dynkin: DynkinOptions = Field(default_factory=DynkinOptions)
    tube: TubeOptions = Field(default_factory=TubeOptions)
    kronecker: KroneckerOptions = Field(default_factory=KroneckerOptions)
    wpl: WplOptions = Field(default_factory=WplOptions)
    twist: TwistOptions = Field(default_factory=TwistOptions)
    torsion: TorsionOptions = Field(default_factory=TorsionOptions)


class WorkbenchConfig(BaseModel):
    """Run options; CLI flags override these, and these override the defaults."""

    seed: int = 42
    samples: int = Field(default=1000, ge=1)
    threads: int | None = Field(default=None, ge=1)
    suites: SuiteOptions = Field(default_factory=SuiteOptions)


def load_config_from_yaml(path: str | Path) -> WorkbenchConfig:
    """Load a WorkbenchConfig from a YAML config file.

    Expected format:
        workbench:
          seed: 42
          samples: 1000
          threads: 4
          suites:
            tube:
              ranks: [1, 2, 3]
              max_length: 6
            wpl:
              weights: [[2, 2, 2, 2]]
    """
    with open(path) as f:
        config = yaml.safe_load(f)

    if not isinstance(config, dict) or "workbench" not in config:
        raise ValueError("Config file must have a top-level 'workbench' key")

    body = dict(config["workbench"] or {})
    suites = body.get("suites") or {}
    for name in suites:
        if name not in SuiteOptions.model_fields:
            raise ValueError(f"Config names unknown suite '{name}'")

    return WorkbenchConfig.model_validate(body)


def threads_from_env() -> int | None:
    """Parallelism cap from FCY_THREADS; bad values are ignored with a warning."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer", THREADS_ENV, raw)
        return None
    if value < 1:
        logger.warning("Ignoring %s=%r: must be positive", THREADS_ENV, raw)
        return None
    return value
