"""Printing command results as JSON, YAML or Rich tables.

Data goes to stdout; messages other than JSON errors go to stderr. Agent
mode turns colors off.
"""

from __future__ import annotations

import json
import sys
from typing import Any

import yaml
from rich.console import Console
from rich.table import Table

from terna.core.context import get_context


def _console(stderr: bool = False) -> Console:
    file = sys.stderr if stderr else sys.stdout
    if get_context().is_agent_mode:
        return Console(file=file, force_terminal=False, no_color=True, soft_wrap=True)
    return Console(file=file)


def format_output(data: Any, output_format: str | None = None, title: str = "") -> None:
    """Print ``data`` as ``json``, ``yaml`` or a table (the context's format by default)."""
    output_format = output_format or get_context().output
    if output_format == "json":
        _print_json(data)
    elif output_format == "yaml":
        dumped = yaml.safe_dump(data, default_flow_style=False, allow_unicode=True, sort_keys=False)
        print_plain(dumped)
    elif isinstance(data, list):
        _print_list_table(data, title)
    elif isinstance(data, dict):
        _print_dict_table(data, title)
    else:
        print_plain(str(data))


def _print_json(data: Any) -> None:
    _console().print_json(json.dumps(data, indent=2, default=str, ensure_ascii=False))


def print_plain(text: str) -> None:
    """Print text to stdout verbatim."""
    _console().print(text, markup=False, highlight=False)


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, dict)):
        return json.dumps(value, ensure_ascii=False)
    return str(value)


def _print_list_table(data: list, title: str) -> None:
    if not data:
        _console().print("[yellow]No results[/yellow]")
        return
    table = Table(title=title or None, show_header=True)
    first = data[0]
    if isinstance(first, dict):
        keys = list(first)
        for i, key in enumerate(keys):
            table.add_column(str(key), style="cyan" if i == 0 else None)
        for item in data:
            table.add_row(*(_cell(item.get(k)) for k in keys))
    elif isinstance(first, (list, tuple)):
        # colorings and similar rows; columns are positions
        table.add_column("#", style="cyan")
        for k in range(len(first)):
            table.add_column(str(k), justify="right")
        for i, row in enumerate(data):
            table.add_row(str(i), *(_cell(v) for v in row))
    else:
        table.add_column("Name", style="cyan")
        for item in data:
            table.add_row(_cell(item))
    _console().print(table)


def _print_dict_table(data: dict, title: str) -> None:
    table = Table(title=title or None, show_header=True)
    table.add_column("Property", style="cyan")
    table.add_column("Value")
    for key, value in data.items():
        if isinstance(value, (list, dict)):
            value = json.dumps(value, indent=2, ensure_ascii=False)
        table.add_row(str(key), _cell(value))
    _console().print(table)


def print_success(message: str) -> None:
    """A status object in JSON mode, a green line otherwise (unless quiet)."""
    ctx = get_context()
    if ctx.output == "json":
        _print_json({"status": "success", "message": message})
    elif not ctx.quiet:
        _console().print(f"[green]{message}[/green]")


def print_error(message: str, code: str = "ERROR") -> None:
    """A JSON error object on stdout in JSON mode, a red line on stderr otherwise."""
    if get_context().output == "json":
        _print_json({"error": {"code": code, "message": message}})
    else:
        _console(stderr=True).print(f"[red]Error:[/red] {message}", highlight=False)


def print_warning(message: str) -> None:
    if not get_context().quiet:
        _console(stderr=True).print(f"[yellow]Warning:[/yellow] {message}")


def print_info(message: str) -> None:
    if not get_context().quiet:
        _console(stderr=True).print(f"[blue]{message}[/blue]")
