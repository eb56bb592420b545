"""Fixture commands."""

from __future__ import annotations

from pathlib import Path

import typer

from terna.cli.common import fail
from terna.core.context import get_context
from terna.core.diagram import shade
from terna.core.fileformat import YAML_SUFFIXES, load_algebra, load_diagram
from terna.exceptions import TernaError
from terna.output.formatter import format_output, print_plain

app = typer.Typer(no_args_is_help=True)

_ALGEBRA_PREFIX = "std-"


def _is_algebra(name: str) -> bool:
    return name.startswith(_ALGEBRA_PREFIX)


def _fixture_files() -> list[Path]:
    root = get_context().fixtures_dir
    if not root.is_dir():
        return []
    return sorted(p for p in root.iterdir() if p.suffix == ".pd" or p.suffix in YAML_SUFFIXES)


@app.command("list")
def fixtures_list() -> None:
    """List the fixture files."""
    ctx = get_context()
    rows = [
        {"name": p.stem, "file": p.name, "type": "algebra" if _is_algebra(p.stem) else "diagram"}
        for p in _fixture_files()
    ]
    format_output(rows, ctx.output, title=f"Fixtures in {ctx.fixtures_dir}")


@app.command("show")
def fixtures_show(
    name: str = typer.Argument(..., help="Fixture name, with or without suffix"),
) -> None:
    """Print a fixture file."""
    try:
        path = get_context().resolve_path(name)
    except TernaError as e:
        fail(e)
    print_plain(path.read_text().rstrip())


@app.command("check")
def fixtures_check() -> None:
    """Parse every fixture and report its size."""
    ctx = get_context()
    rows = []
    failed = False
    for path in _fixture_files():
        row: dict[str, object] = {"name": path.stem, "ok": True, "detail": ""}
        try:
            if _is_algebra(path.stem):
                a = load_algebra(path)
                row["detail"] = f"{a.kind} algebra, n={a.n}"
            else:
                sd = shade(load_diagram(path))
                d = sd.diagram
                row["detail"] = (
                    f"{len(d.crossings)} crossings, {sd.face_count} faces, "
                    f"{d.components} components"
                )
        except TernaError as e:
            row["ok"] = False
            row["detail"] = str(e)
            failed = True
        rows.append(row)
    format_output(rows, ctx.output, title="Fixture check")
    if failed:
        raise typer.Exit(1)
