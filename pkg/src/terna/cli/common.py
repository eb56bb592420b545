"""Helpers shared by the commands: resolving inputs and reporting errors."""

from __future__ import annotations

from pathlib import Path
from typing import NoReturn

import typer

from terna.core.algebra import FiniteTernaryAlgebra, Kind
from terna.core.builtin import get_algebra, get_loop
from terna.core.context import get_context
from terna.core.diagram import Diagram, ShadedDiagram, shade
from terna.core.fileformat import YAML_SUFFIXES, load_algebra, load_diagram
from terna.core.magma import MagmaTable
from terna.exceptions import AlgebraError, TernaError
from terna.output.formatter import print_error

KIND_HELP = "Algebra kind for word-built algebras: unoriented or oriented"


def fail(e: TernaError) -> NoReturn:
    """Report a domain error and exit with status 1."""
    print_error(str(e), code=type(e).__name__)
    raise typer.Exit(1)


def check_kind(kind: str | None) -> Kind | None:
    if kind is None:
        return None
    if kind not in ("unoriented", "oriented"):
        raise typer.BadParameter("must be 'unoriented' or 'oriented'", param_hint="--kind")
    return kind  # type: ignore[return-value]


def resolve_diagram(ref: str) -> Diagram:
    return load_diagram(get_context().resolve_path(ref))


def resolve_shaded(ref: str, outer: int | None = None) -> ShadedDiagram:
    return shade(resolve_diagram(ref), outer)


def resolve_algebra(ref: str, kind: Kind | None = None) -> FiniteTernaryAlgebra:
    """A built-in algebra name, an algebra file, or the name of an algebra fixture."""
    path = Path(ref)
    if path.suffix in YAML_SUFFIXES or path.exists():
        algebra = load_algebra(get_context().resolve_path(ref))
        if kind and algebra.kind != kind:
            raise AlgebraError(f"'{ref}' is {algebra.kind}, not {kind}")
        return algebra
    return get_algebra(ref, kind)


def resolve_loop(ref: str) -> MagmaTable:
    path = Path(ref)
    if path.suffix in YAML_SUFFIXES and not path.exists():
        ref = str(get_context().resolve_path(ref))
    return get_loop(ref)


def jobs_or_default(jobs: int | None) -> int:
    return jobs if jobs is not None else get_context().jobs


def parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v != ""]
    except ValueError as e:
        raise typer.BadParameter(f"{what} must be comma-separated integers") from e
