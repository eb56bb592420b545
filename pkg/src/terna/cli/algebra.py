"""Algebra commands: axiom checks, loop identities and the built-in bank."""

from __future__ import annotations

from typing import Optional

import typer

from terna.cli.common import KIND_HELP, check_kind, fail, resolve_algebra, resolve_loop
from terna.core.algebra import (
    AXIOM_SETS,
    GROUP_WORDS,
    LOOP_WORDS,
    check_axioms,
    latin_cube_check,
)
from terna.core.builtin import ALGEBRAS, GROUPS, LOOPS, builtin_names
from terna.core.context import get_context
from terna.core.fileformat import dump_algebra
from terna.core.magma import PROPERTIES, loop_property
from terna.exceptions import TernaError
from terna.output.formatter import format_output, print_plain


def check_algebra(
    builtin: Optional[str] = typer.Option(
        None,
        "--builtin",
        "-b",
        help="Built-in algebra, e.g. paper-unoriented-4, g8:s3, m1:ms3",
    ),
    file: Optional[str] = typer.Option(
        None,
        "--file",
        "-f",
        help="Algebra file (YAML)",
    ),
    kind: Optional[str] = typer.Option(None, "--kind", "-k", help=KIND_HELP),
    axioms: str = typer.Option(
        "all",
        "--axioms",
        "-a",
        help=f"Axiom set: {', '.join(AXIOM_SETS)}",
    ),
    latin: bool = typer.Option(False, "--latin", help="Also report Latin-cube slices"),
) -> None:
    """Check an algebra against the axioms of its kind."""
    if (builtin is None) == (file is None):
        raise typer.BadParameter("give exactly one of --builtin or --file")
    if axioms not in AXIOM_SETS:
        raise typer.BadParameter(f"choose from {', '.join(AXIOM_SETS)}", param_hint="--axioms")
    ctx = get_context()

    try:
        algebra = resolve_algebra(builtin or file or "", check_kind(kind))
        report = check_axioms(algebra, axioms=axioms)
    except TernaError as e:
        fail(e)

    rows = [
        {
            "axiom": f"({r.number})",
            "equation": r.text,
            "holds": r.holds,
            "witness": list(r.witness) if r.witness else None,
        }
        for r in report.results
    ]
    data: dict[str, object] = {
        "algebra": algebra.name,
        "kind": algebra.kind,
        "size": algebra.n,
        "summary": report.summary(),
        "axioms": rows,
    }
    if latin:
        data["latin"] = {k: list(v) for k, v in latin_cube_check(algebra).slices.items()}

    if ctx.output == "table":
        format_output(rows, "table", title=f"{algebra.name} ({algebra.kind}, n={algebra.n})")
        if latin:
            format_output(data["latin"], "table", title="Latin slices (x, y, z)")
        print_plain(report.summary())
    else:
        format_output(data, ctx.output)
    if not report.passed:
        raise typer.Exit(1)


def check_loop(
    loop: str = typer.Argument(..., help="Built-in group/loop (c3, s3, ms3, ...) or Cayley file"),
    prop: Optional[list[str]] = typer.Option(
        None,
        "--property",
        "-p",
        help="Property to check (repeatable); all when omitted",
    ),
) -> None:
    """Check loop identities and varieties on a Cayley table."""
    ctx = get_context()
    names = prop or list(PROPERTIES)
    unknown = [p for p in names if p not in PROPERTIES]
    if unknown:
        raise typer.BadParameter(
            f"unknown {', '.join(unknown)}; choose from {', '.join(PROPERTIES)}",
            param_hint="--property",
        )

    try:
        table = resolve_loop(loop)
        results = [loop_property(table, p) for p in names]
    except TernaError as e:
        fail(e)

    rows = [
        {
            "property": r.name,
            "holds": r.holds,
            "witness": list(r.witness) if r.witness else None,
            "detail": r.detail or None,
        }
        for r in results
    ]
    if ctx.output == "table":
        format_output(rows, "table", title=f"{table.name} (order {table.n})")
    else:
        format_output({"loop": table.name, "order": table.n, "properties": rows}, ctx.output)


def builtin(
    show: Optional[str] = typer.Option(
        None,
        "--show",
        "-s",
        help="Print the tables of one algebra in the algebra file format",
    ),
    kind: Optional[str] = typer.Option(None, "--kind", "-k", help=KIND_HELP),
) -> None:
    """List the built-in groups, loops, word formulas and algebras."""
    ctx = get_context()
    if show is not None:
        try:
            algebra = resolve_algebra(show, check_kind(kind))
        except TernaError as e:
            fail(e)
        print_plain(dump_algebra(algebra).rstrip())
        return

    data = {
        "algebras": list(ALGEBRAS),
        "groups": list(GROUPS),
        "loops": list(LOOPS),
        "group_words": {k: list(v) for k, v in GROUP_WORDS.items()},
        "loop_words": {k: list(v) for k, v in LOOP_WORDS.items()},
        "names": builtin_names(),
    }
    if ctx.output == "table":
        rows = [{"kind": "algebra", "name": n, "op1": "", "op2": ""} for n in ALGEBRAS]
        rows += [{"kind": "group", "name": n, "op1": "", "op2": ""} for n in GROUPS]
        rows += [{"kind": "loop", "name": n, "op1": "", "op2": ""} for n in LOOPS]
        rows += [
            {"kind": "word", "name": k, "op1": w[0], "op2": w[1]}
            for k, w in {**GROUP_WORDS, **LOOP_WORDS}.items()
        ]
        format_output(rows, "table", title="Built-in bank")
    else:
        format_output(data, ctx.output)
