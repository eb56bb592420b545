"""Configuration loading utilities."""

from __future__ import annotations

import os
import sys
from pathlib import Path
from typing import Any

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

import tomli_w

from terna.config.settings import (
    MODES,
    OUTPUTS,
    TernaConfig,
    bundled_fixtures_dir,
    get_config_dir,
    get_config_file,
)
from terna.exceptions import ConfigError

# Keys accepted under [defaults] and how to coerce them.
DEFAULT_KEYS: dict[str, type] = {
    "mode": str,
    "output": str,
    "jobs": int,
    "cube_budget": int,
    "fixtures_dir": str,
}


def _ensure_config_dir() -> None:
    """Ensure config directory exists."""
    config_dir = get_config_dir()
    config_dir.mkdir(parents=True, exist_ok=True)


def _read() -> dict[str, Any]:
    config_file = get_config_file()
    if not config_file.exists():
        return {}
    try:
        with open(config_file, "rb") as f:
            return tomllib.load(f)
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"cannot parse {config_file}: {e}") from e


def _validate(key: str, value: Any) -> Any:
    if key not in DEFAULT_KEYS:
        raise ConfigError(f"unknown key 'defaults.{key}'; known: {', '.join(DEFAULT_KEYS)}")
    try:
        value = DEFAULT_KEYS[key](value)
    except (TypeError, ValueError) as e:
        raise ConfigError(f"defaults.{key} must be {DEFAULT_KEYS[key].__name__}") from e
    if key == "mode" and value not in MODES:
        raise ConfigError(f"defaults.mode must be one of {', '.join(MODES)}")
    if key == "output" and value not in OUTPUTS:
        raise ConfigError(f"defaults.output must be one of {', '.join(OUTPUTS)}")
    if key in ("jobs", "cube_budget") and value < 1:
        raise ConfigError(f"defaults.{key} must be at least 1")
    return value


def load_config() -> TernaConfig:
    """Load main configuration from file."""
    defaults = _read().get("defaults", {})
    values = {k: _validate(k, v) for k, v in defaults.items() if k in DEFAULT_KEYS}

    return TernaConfig(
        mode=values.get("mode", "agent"),
        default_output=values.get("output", "table"),
        jobs=values.get("jobs", 1),
        cube_budget=values.get("cube_budget", 200_000),
        fixtures_dir=values.get("fixtures_dir", ""),
    )


def save_config(config: TernaConfig) -> None:
    """Save configuration to file."""
    _ensure_config_dir()
    config_file = get_config_file()

    data: dict[str, Any] = {
        "defaults": {
            "mode": config.mode,
            "output": config.default_output,
            "jobs": config.jobs,
            "cube_budget": config.cube_budget,
            "fixtures_dir": config.fixtures_dir,
        }
    }

    with open(config_file, "wb") as f:
        tomli_w.dump(data, f)


def get_config_value(key: str) -> Any:
    """Get a specific configuration value.

    Args:
        key: Dot-separated key path (e.g., 'defaults.jobs').
    """
    current: Any = _read()
    for part in key.split("."):
        if isinstance(current, dict) and part in current:
            current = current[part]
        else:
            return None
    return current


def set_config_value(key: str, value: Any) -> None:
    """Set a specific configuration value.

    Args:
        key: Dot-separated key path (e.g., 'defaults.jobs').
        value: The value to set.
    """
    parts = key.split(".")
    if len(parts) != 2 or parts[0] != "defaults":
        raise ConfigError(f"unknown key '{key}'; keys live under 'defaults.'")
    value = _validate(parts[1], value)

    _ensure_config_dir()
    data = _read()
    data.setdefault("defaults", {})[parts[1]] = value

    with open(get_config_file(), "wb") as f:
        tomli_w.dump(data, f)


def get_mode_from_env() -> str | None:
    """Get mode from environment variable."""
    return os.environ.get("TERNA_MODE")


def get_jobs_from_env() -> int | None:
    """Get the worker count from environment variable."""
    value = os.environ.get("TERNA_JOBS")
    if value is None:
        return None
    try:
        return _validate("jobs", value)
    except ConfigError as e:
        raise ConfigError(f"TERNA_JOBS: {e}") from e


def get_fixtures_dir(config: TernaConfig | None = None) -> Path:
    """Fixture directory: TERNA_FIXTURES_DIR, then the config file, then the bundled set."""
    env = os.environ.get("TERNA_FIXTURES_DIR")
    if env:
        return Path(env)
    config = config or load_config()
    if config.fixtures_dir:
        return Path(config.fixtures_dir).expanduser()
    return bundled_fixtures_dir()
