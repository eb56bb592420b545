"""Configuration settings."""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

MODES = ("agent", "human")
OUTPUTS = ("table", "json", "yaml")


@dataclass
class TernaConfig:
    """Main configuration class."""

    mode: str = "agent"  # "agent" (default) or "human"
    default_output: str = "table"
    jobs: int = 1
    cube_budget: int = 200_000
    fixtures_dir: str = ""  # empty means the bundled fixtures


def get_config_dir() -> Path:
    """Get configuration directory path."""
    config_dir = Path(os.environ.get("TERNA_CONFIG_DIR", Path.home() / ".terna"))
    return config_dir


def get_config_file() -> Path:
    """Get main config file path."""
    return get_config_dir() / "config.toml"


def bundled_fixtures_dir() -> Path:
    """Directory of the diagram and algebra fixtures shipped with the package."""
    return Path(__file__).resolve().parent.parent / "fixtures"
