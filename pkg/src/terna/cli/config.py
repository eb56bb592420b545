"""Configuration management commands."""

from __future__ import annotations

import typer
from rich.console import Console

from terna.cli.common import fail
from terna.config.loader import (
    get_config_value,
    get_fixtures_dir,
    load_config,
    save_config,
    set_config_value,
)
from terna.config.settings import get_config_dir, get_config_file
from terna.core.context import get_context
from terna.exceptions import ConfigError
from terna.output.formatter import format_output, print_error, print_success

app = typer.Typer(no_args_is_help=True)

console = Console()


@app.command("get")
def config_get(
    key: str = typer.Argument(..., help="Configuration key (e.g., 'defaults.jobs')"),
) -> None:
    """Get a configuration value."""
    try:
        value = get_config_value(key)
    except ConfigError as e:
        fail(e)
    if value is None:
        print_error(f"Configuration key '{key}' not found")
        raise typer.Exit(1)
    console.print(f"{key} = {value}", markup=False, highlight=False)


@app.command("set")
def config_set(
    key: str = typer.Argument(..., help="Configuration key (e.g., 'defaults.jobs')"),
    value: str = typer.Argument(..., help="Value to set"),
) -> None:
    """Set a configuration value."""
    try:
        set_config_value(key, value)
    except ConfigError as e:
        fail(e)
    print_success(f"Set {key} = {get_config_value(key)}")


@app.command("list")
def config_list() -> None:
    """List all configuration values."""
    try:
        config = load_config()
    except ConfigError as e:
        fail(e)
    config_dict = {
        "mode": config.mode,
        "output": config.default_output,
        "jobs": config.jobs,
        "cube_budget": config.cube_budget,
        "fixtures_dir": str(get_fixtures_dir(config)),
        "config_dir": str(get_config_dir()),
    }
    format_output(config_dict, get_context().output, title="Configuration")


@app.command("init")
def config_init() -> None:
    """Initialize configuration directory and file."""
    config_file = get_config_file()
    if config_file.exists():
        console.print(f"Config file already exists: {config_file}", markup=False)
        return
    try:
        save_config(load_config())
    except ConfigError as e:
        fail(e)
    print_success(f"Created config file: {config_file}")
