"""Operator search commands."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer

from terna.cli.common import check_kind, fail, jobs_or_default, resolve_loop
from terna.core.algebra import AXIOM_SETS
from terna.core.context import get_context
from terna.core.fileformat import dump_algebra
from terna.core.search import SearchResult, search_cubes, search_words
from terna.exceptions import TernaError
from terna.output.formatter import format_output, print_info, print_plain, print_warning


def _axioms(value: str) -> str:
    if value not in AXIOM_SETS:
        raise typer.BadParameter(f"choose from {', '.join(AXIOM_SETS)}", param_hint="--axioms")
    return value


def _save(result: SearchResult, directory: Path, prefix: str) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for k, hit in enumerate(result.hits):
        for algebra in hit.algebras:
            path = directory / f"{prefix}{k:03d}-{algebra.name}.yaml"
            path.write_text(dump_algebra(algebra))
    print_info(f"Wrote {sum(len(h.algebras) for h in result.hits)} algebra files to {directory}")


def _report(result: SearchResult, title: str) -> None:
    ctx = get_context()
    if not result.complete:
        print_warning(f"search stopped at the budget after {result.explored} candidates")
    if ctx.output == "table":
        rows = [
            {"#": k, "op1": h.op1 or "-", "op2": h.op2 or "-", "op1 = op2": h.symmetric}
            for k, h in enumerate(result.hits)
        ]
        format_output(rows, "table", title=title)
        print_plain(
            f"{len(result.hits)} found, {result.explored} examined"
            + ("" if result.complete else " (incomplete)")
        )
    else:
        format_output(result.to_dict(), ctx.output)


def search_words_cmd(
    battery: str = typer.Option(
        "s3,d4,q8", "--battery", "-b", help="Comma-separated groups/loops or Cayley files"
    ),
    case: str = typer.Option("unoriented", "--case", "-c", help="unoriented or oriented"),
    axioms: str = typer.Option("all", "--axioms", "-a", help="all or distributivity"),
    save: Optional[Path] = typer.Option(None, "--save", help="Write every hit as algebra files"),
) -> None:
    """Search depth-two words for operator pairs passing the axioms on a battery."""
    kind = check_kind(case) or "unoriented"

    try:
        members = [resolve_loop(ref) for ref in battery.split(",") if ref.strip()]
        result = search_words(members, kind, _axioms(axioms))
    except TernaError as e:
        fail(e)

    if save is not None:
        _save(result, save, "word")
    _report(result, f"Word pairs ({kind}) on {', '.join(result.source)}")


def search_cubes_cmd(
    n: int = typer.Option(..., "--n", "-n", min=1, max=6, help="Carrier size"),
    case: str = typer.Option("unoriented", "--case", "-c", help="unoriented or oriented"),
    axioms: str = typer.Option("all", "--axioms", "-a", help="all or distributivity"),
    budget: Optional[int] = typer.Option(None, "--budget", min=1, help="Most cubes to examine"),
    jobs: Optional[int] = typer.Option(None, "--jobs", "-j", min=1, help="Worker processes"),
    strict: bool = typer.Option(False, "--strict", help="Fail when the budget runs out"),
    save: Optional[Path] = typer.Option(None, "--save", help="Write every survivor to files"),
) -> None:
    """Enumerate Latin-cube algebras of a given size passing the axioms."""
    kind = check_kind(case) or "unoriented"
    ctx = get_context()

    try:
        result = search_cubes(
            n,
            kind,
            _axioms(axioms),
            budget=budget or ctx.cube_budget,
            jobs=jobs_or_default(jobs),
            strict=strict,
        )
    except TernaError as e:
        fail(e)

    if save is not None:
        _save(result, save, "cube")
    if ctx.output == "table" and result.hits:
        for hit in result.hits:
            print_plain(dump_algebra(hit.algebras[0]).rstrip())
            print_plain("---")
    _report(result, f"Cube algebras ({kind}, n={n})")
