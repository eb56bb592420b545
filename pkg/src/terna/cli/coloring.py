"""Coloring commands: count, enumerate, verify and classify."""

from __future__ import annotations

from typing import Any, Optional

import typer

from terna.cli.common import (
    KIND_HELP,
    check_kind,
    fail,
    jobs_or_default,
    parse_ints,
    resolve_algebra,
    resolve_loop,
    resolve_shaded,
)
from terna.core.algebra import GROUP_WORDS
from terna.core.coloring import count_colorings, enumerate_colorings, verify_coloring
from terna.core.context import get_context
from terna.core.search import classify_group_pair
from terna.exceptions import TernaError
from terna.output.formatter import format_output, print_plain

DIAGRAM_HELP = "Diagram file (.pd or YAML) or fixture name"
ALGEBRA_HELP = "Built-in algebra name or algebra file"


def _outer_option() -> Any:
    return typer.Option(None, "--outer", help="Face treated as unbounded (default: largest)")


def count(
    diagram: str = typer.Option(..., "--diagram", "-d", help=DIAGRAM_HELP),
    algebra: str = typer.Option(..., "--algebra", "-a", help=ALGEBRA_HELP),
    kind: Optional[str] = typer.Option(None, "--kind", "-k", help=KIND_HELP),
    outer: Optional[int] = _outer_option(),
    unchecked: bool = typer.Option(
        False, "--unchecked", help="Count even if the algebra fails its axioms"
    ),
    jobs: Optional[int] = typer.Option(None, "--jobs", "-j", min=1, help="Worker processes"),
) -> None:
    """Count the ternary colorings of a diagram."""
    ctx = get_context()

    try:
        sd = resolve_shaded(diagram, outer)
        a = resolve_algebra(algebra, check_kind(kind))
        n = count_colorings(sd, a, checked=not unchecked, jobs=jobs_or_default(jobs))
    except TernaError as e:
        fail(e)

    if ctx.output == "table":
        print_plain(str(n))
    else:
        format_output(
            {
                "diagram": sd.diagram.name or diagram,
                "fingerprint": sd.diagram.fingerprint,
                "algebra": a.name,
                "outer_face": sd.outer_face,
                "count": n,
            },
            ctx.output,
        )


def enumerate_cmd(
    diagram: str = typer.Option(..., "--diagram", "-d", help=DIAGRAM_HELP),
    algebra: str = typer.Option(..., "--algebra", "-a", help=ALGEBRA_HELP),
    kind: Optional[str] = typer.Option(None, "--kind", "-k", help=KIND_HELP),
    outer: Optional[int] = _outer_option(),
    unchecked: bool = typer.Option(False, "--unchecked", help="Skip the axiom check"),
    jobs: Optional[int] = typer.Option(None, "--jobs", "-j", min=1, help="Worker processes"),
) -> None:
    """List every coloring as face values in face-id order."""
    ctx = get_context()

    try:
        sd = resolve_shaded(diagram, outer)
        a = resolve_algebra(algebra, check_kind(kind))
        report = enumerate_colorings(sd, a, checked=not unchecked, jobs=jobs_or_default(jobs))
    except TernaError as e:
        fail(e)

    colorings = [list(c) for c in report.colorings or []]
    if ctx.output == "table":
        format_output(colorings, "table", title=f"{report.count} colorings by {a.name}")
    else:
        format_output(
            {
                "diagram": sd.diagram.name or diagram,
                "fingerprint": report.fingerprint,
                "algebra": report.algebra,
                "count": report.count,
                "colorings": colorings,
            },
            ctx.output,
        )


def verify(
    diagram: str = typer.Option(..., "--diagram", "-d", help=DIAGRAM_HELP),
    algebra: str = typer.Option(..., "--algebra", "-a", help=ALGEBRA_HELP),
    coloring: str = typer.Option(
        ..., "--coloring", "-c", help="Comma-separated face values in face-id order"
    ),
    kind: Optional[str] = typer.Option(None, "--kind", "-k", help=KIND_HELP),
    outer: Optional[int] = _outer_option(),
) -> None:
    """Check one assignment against every head relation."""
    ctx = get_context()
    values = parse_ints(coloring, "--coloring")

    try:
        sd = resolve_shaded(diagram, outer)
        a = resolve_algebra(algebra, check_kind(kind))
        result = verify_coloring(sd, a, values)
    except TernaError as e:
        fail(e)

    if ctx.output == "table":
        print_plain("valid" if result.ok else f"invalid: {result.violation}")
    else:
        violation = None
        if result.violation is not None:
            v = result.violation
            violation = {
                "crossing": v.crossing,
                "quadrant": v.quadrant,
                "face": v.face,
                "expected": v.expected,
                "actual": v.actual,
            }
        format_output({"valid": result.ok, "violation": violation}, ctx.output)
    if not result.ok:
        raise typer.Exit(1)


def classify(
    group: str = typer.Option("s3", "--group", "-g", help="Nonabelian group"),
    pair: Optional[list[str]] = typer.Option(
        None, "--pair", "-p", help="Word pair g1..g9 (repeatable); all when omitted"
    ),
    diagram: Optional[list[str]] = typer.Option(
        None,
        "--diagram",
        "-d",
        help="Diagrams to test (repeatable); trefoil and figure8 by default",
    ),
) -> None:
    """Decide which arc-label scheme each group word pair induces."""
    ctx = get_context()
    pairs = pair or list(GROUP_WORDS)

    try:
        g = resolve_loop(group)
        diagrams = [resolve_shaded(d) for d in diagram or ["trefoil", "figure8"]]
        results = [classify_group_pair(p, g, diagrams) for p in pairs]
    except TernaError as e:
        fail(e)

    rows = [
        {
            "pair": r.pair_id,
            "op1": GROUP_WORDS[r.pair_id][0],
            "op2": GROUP_WORDS[r.pair_id][1],
            "core": r.core_ok,
            "knot": r.knot_ok,
            "type": r.kind,
            "rule": r.rule.describe() if r.rule else None,
        }
        for r in results
    ]
    if ctx.output == "table":
        format_output(rows, "table", title=f"Word pairs over {g.name}")
    else:
        format_output({"group": g.name, "pairs": rows}, ctx.output)
