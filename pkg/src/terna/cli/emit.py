"""Presentation emitters."""

from __future__ import annotations

from typing import Optional

import typer

from terna.cli.common import fail, resolve_algebra, resolve_diagram, resolve_loop
from terna.core.context import get_context
from terna.core.diagram import shade
from terna.core.presentation import (
    Presentation,
    abelianization,
    count_solutions,
    emit_arc_presentation,
    emit_dehn,
    emit_ternary,
)
from terna.exceptions import TernaError
from terna.output.formatter import format_output, print_plain

STYLES = ("ternary-unoriented", "ternary-oriented", "dehn", "wirtinger", "core")


def emit(
    diagram: str = typer.Option(..., "--diagram", "-d", help="Diagram file or fixture name"),
    style: str = typer.Option(
        "ternary-unoriented", "--style", "-s", help=f"One of: {', '.join(STYLES)}"
    ),
    outer: Optional[int] = typer.Option(None, "--outer", help="Face treated as unbounded"),
    head: Optional[int] = typer.Option(
        None, "--head", min=0, max=3, help="Quadrant used as head at every crossing"
    ),
    abelianize: bool = typer.Option(
        False, "--abelianize", help="Also compute the abelianized group (group styles)"
    ),
    solve: Optional[str] = typer.Option(
        None,
        "--solve",
        help="Count solutions over a group (group styles) or algebra (ternary styles)",
    ),
) -> None:
    """Write a presentation read off a diagram."""
    if style not in STYLES:
        raise typer.BadParameter(f"choose from {', '.join(STYLES)}", param_hint="--style")
    ctx = get_context()

    try:
        d = resolve_diagram(diagram)
        p: Presentation
        if style.startswith("ternary"):
            p = emit_ternary(shade(d, outer), style.split("-", 1)[1], head)
        elif style == "dehn":
            p = emit_dehn(shade(d, outer))
        else:
            p = emit_arc_presentation(d, style)
        data = p.to_dict()
        if abelianize:
            data["abelianization"] = str(abelianization(p))
        if solve is not None:
            structure = resolve_loop(solve) if p.is_group else resolve_algebra(solve)
            data["solutions"] = count_solutions(p, structure)
    except TernaError as e:
        fail(e)

    if ctx.output == "table":
        print_plain(p.text())
        if "abelianization" in data:
            print_plain(f"# abelianization: {data['abelianization']}")
        if "solutions" in data:
            print_plain(f"# solutions over {solve}: {data['solutions']}")
    else:
        format_output(data, ctx.output)
