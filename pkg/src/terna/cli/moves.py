"""Reidemeister move command."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer

from terna.cli.common import fail, parse_ints, resolve_diagram
from terna.core.context import get_context
from terna.core.fileformat import dump_diagram
from terna.core.moves import (
    R1_VARIANTS,
    R2_VARIANTS,
    MoveSpec,
    apply_move,
    first_site,
    r2_sites,
    r3_sites,
)
from terna.exceptions import TernaError
from terna.output.formatter import format_output, print_plain, print_success


def move(
    diagram: str = typer.Option(..., "--diagram", "-d", help="Diagram file or fixture name"),
    kind: str = typer.Option(..., "--kind", "-k", help="R1, R2 or R3"),
    edge: Optional[int] = typer.Option(None, "--edge", "-e", help="R1: edge to kink"),
    face: Optional[int] = typer.Option(None, "--face", "-f", help="R2/R3: face of the move"),
    edges: Optional[str] = typer.Option(None, "--edges", help="R2: two edges, e.g. '1,3'"),
    variant: str = typer.Option(
        "",
        "--variant",
        help=f"R1: {', '.join(R1_VARIANTS)}; R2: {', '.join(R2_VARIANTS)}",
    ),
    first: bool = typer.Option(False, "--first", help="Use the first available site"),
    sites: bool = typer.Option(False, "--sites", help="List the R2/R3 sites instead"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the result to a file"),
) -> None:
    """Apply one Reidemeister move and print the resulting PD code."""
    kind = kind.upper()
    if kind not in ("R1", "R2", "R3"):
        raise typer.BadParameter("must be R1, R2 or R3", param_hint="--kind")
    ctx = get_context()

    try:
        d = resolve_diagram(diagram)
        if sites:
            if kind == "R2":
                rows = [{"face": f, "edge_a": a, "edge_b": b} for f, a, b in r2_sites(d)]
            elif kind == "R3":
                rows = [{"face": f} for f in r3_sites(d)]
            else:
                rows = [{"edge": e} for e in d.edges]
            format_output(rows, ctx.output, title=f"{kind} sites of {d.name or diagram}")
            return
        if first:
            spec = first_site(d, kind, variant)
        else:
            pair = tuple(parse_ints(edges, "--edges")) if edges else ()
            spec = MoveSpec(
                kind, edge=edge, face=face, edges=pair, variant=variant  # type: ignore[arg-type]
            )
        result = apply_move(d, spec)
    except TernaError as e:
        fail(e)

    text = dump_diagram(result)
    if out is not None:
        out.write_text(text)
        print_success(f"Wrote {len(result.crossings)}-crossing diagram to {out}")
        return
    if ctx.output == "table":
        print_plain(text.rstrip())
    else:
        format_output(
            {
                "move": kind,
                "crossings": len(result.crossings),
                "pd": text.splitlines()[-1],
                "fingerprint": result.fingerprint,
            },
            ctx.output,
        )
