"""
core/config.py

Defaults for the whole package, optionally overridden by a YAML file.

Lookup order:
  1. explicit path passed to load_config()
  2. $EQUIMATCH_CONFIG
  3. equimatch.yaml next to app.py

Keys (all optional in the file):
  oracle_cap       max vertex count for exponential oracles
  default_decider  brute | is-enum | alg1 | alg2
  run_log_path     CSV file written by core.storage
  log_runs         append a row per computed quantity
  log_level        standard logging level name
"""

import os
import warnings
from dataclasses import dataclass, fields, replace
from typing import Optional

import yaml

from core.errors import ConfigError

# ---------------------
# Config / defaults
# ---------------------
ORACLE_CAP = 20
DEFAULT_DECIDER = "alg2"
RUN_LOG_PATH = os.path.join(os.path.dirname(__file__), "..", "runs.csv")
LOG_RUNS = True
LOG_LEVEL = "WARNING"
SCHEMA = "equimatch/1"

CONFIG_ENV = "EQUIMATCH_CONFIG"
DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(__file__), "..", "equimatch.yaml")

DECIDERS = ("brute", "is-enum", "alg1", "alg2")


@dataclass(frozen=True)
class Settings:
    oracle_cap: int = ORACLE_CAP
    default_decider: str = DEFAULT_DECIDER
    run_log_path: str = RUN_LOG_PATH
    log_runs: bool = LOG_RUNS
    log_level: str = LOG_LEVEL


def load_config(path: Optional[str] = None) -> Settings:
    """
    Read settings from YAML. A missing file yields the defaults; a file
    that exists but cannot be parsed raises ConfigError.
    """
    if path is None:
        path = os.environ.get(CONFIG_ENV, DEFAULT_CONFIG_PATH)
    settings = Settings()
    if not os.path.exists(path):
        return settings

    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"{path}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be a mapping")

    known = {f.name: f.type for f in fields(Settings)}
    overrides = {}
    for key, value in data.items():
        if key not in known:
            warnings.warn(f"{path}: unknown config key {key!r} ignored")
            continue
        overrides[key] = value

    if "oracle_cap" in overrides:
        try:
            overrides["oracle_cap"] = int(overrides["oracle_cap"])
        except (TypeError, ValueError) as e:
            raise ConfigError(f"{path}: oracle_cap must be an integer") from e
    if overrides.get("default_decider", DEFAULT_DECIDER) not in DECIDERS:
        raise ConfigError(f"{path}: default_decider must be one of {', '.join(DECIDERS)}")
    if "run_log_path" in overrides and not os.path.isabs(overrides["run_log_path"]):
        base = os.path.dirname(os.path.abspath(path))
        overrides["run_log_path"] = os.path.join(base, overrides["run_log_path"])

    return replace(settings, **overrides)
