"""Main CLI entry point."""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console
from rich.logging import RichHandler

from terna.cli import algebra, coloring, config, emit, fixtures, moves, search
from terna.cli.common import fail
from terna.config.loader import get_fixtures_dir, get_jobs_from_env, get_mode_from_env, load_config
from terna.config.settings import MODES, OUTPUTS
from terna.core.context import CLIContext, reset_context, set_context
from terna.exceptions import ConfigError
from terna.version import __version__

console = Console()

app = typer.Typer(
    name="terna",
    help="terna - ternary region-coloring invariants of knot and link diagrams.",
    no_args_is_help=True,
    rich_markup_mode="rich",
)

# Register subcommands
app.command("check-algebra")(algebra.check_algebra)
app.command("check-loop")(algebra.check_loop)
app.command("builtin")(algebra.builtin)
app.command("count")(coloring.count)
app.command("enumerate")(coloring.enumerate_cmd)
app.command("verify")(coloring.verify)
app.command("classify")(coloring.classify)
app.command("emit")(emit.emit)
app.command("move")(moves.move)
app.command("search-words")(search.search_words_cmd)
app.command("search-cubes")(search.search_cubes_cmd)
app.add_typer(fixtures.app, name="fixtures", help="Bundled diagram and algebra fixtures")
app.add_typer(config.app, name="config", help="Configuration management")

# --format values and the output format each selects.
FORMATS = {"human": "table", "machine": "json"}


def version_callback(value: bool) -> None:
    """Handle --version flag."""
    if value:
        console.print(f"terna version {__version__}")
        raise typer.Exit()


def _setup_logging(verbose: int, agent: bool) -> None:
    """Attach a Rich handler on stderr to the package logger."""
    env_level = os.environ.get("TERNA_LOG_LEVEL", "").upper()
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    elif env_level in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        level = getattr(logging, env_level)
    else:
        level = logging.WARNING
    logger = logging.getLogger("terna")
    logger.setLevel(level)
    logger.handlers.clear()
    if agent:
        handler: logging.Handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    else:
        handler = RichHandler(console=Console(stderr=True), show_path=False)
    logger.addHandler(handler)
    logger.propagate = False


@app.callback(invoke_without_command=True)
def main_callback(
    ctx: typer.Context,
    mode: Optional[str] = typer.Option(
        None,
        "--mode",
        "-m",
        help="Output mode: agent (default) or human",
    ),
    output: Optional[str] = typer.Option(
        None,
        "--output",
        "-o",
        help="Output format: table, json, yaml (overrides mode default)",
    ),
    fmt: Optional[str] = typer.Option(
        None,
        "--format",
        help="human (tables) or machine (JSON); same as --output table/json",
    ),
    quiet: Optional[bool] = typer.Option(
        None,
        "--quiet",
        "-q",
        help="Suppress non-data output (overrides mode default)",
    ),
    verbose: int = typer.Option(
        0,
        "--verbose",
        "-v",
        count=True,
        help="Log progress to stderr (-vv for debug)",
    ),
    fixtures_dir: Optional[Path] = typer.Option(
        None,
        "--fixtures-dir",
        help="Directory searched for diagram and algebra names",
        envvar="TERNA_FIXTURES_DIR",
    ),
    version: Optional[bool] = typer.Option(
        None,
        "--version",
        "-V",
        help="Show version and exit",
        callback=version_callback,
        is_eager=True,
    ),
) -> None:
    """terna - ternary colorings of knot diagrams.

    Counts region colorings by finite ternary algebras, checks the
    algebra axioms, applies Reidemeister moves and searches for new
    operators.

    Modes:
      agent  - JSON output, no colors, quiet mode (default)
      human  - Table output with colors
    """
    # If no command is invoked, show help
    if ctx.invoked_subcommand is None:
        console.print(ctx.get_help())
        raise typer.Exit()

    if mode is not None and mode not in MODES:
        raise typer.BadParameter(f"choose from {', '.join(MODES)}", param_hint="--mode")
    if output is not None and output not in OUTPUTS:
        raise typer.BadParameter(f"choose from {', '.join(OUTPUTS)}", param_hint="--output")
    if fmt is not None and fmt not in FORMATS:
        raise typer.BadParameter(f"choose from {', '.join(FORMATS)}", param_hint="--format")

    try:
        settings = load_config()
        env_jobs = get_jobs_from_env()
    except ConfigError as e:
        # Report with a default context; the broken config cannot pick a mode.
        set_context(CLIContext())
        fail(e)

    # Determine mode: CLI > env > config > default
    env_mode = get_mode_from_env()
    effective_mode = mode or (env_mode if env_mode in MODES else None) or settings.mode

    cli_ctx = CLIContext(
        mode=effective_mode,
        jobs=env_jobs or settings.jobs,
        cube_budget=settings.cube_budget,
        fixtures_dir=fixtures_dir or get_fixtures_dir(settings),
    )
    # The configured output format applies in human mode only.
    if not cli_ctx.is_agent_mode:
        cli_ctx.output = settings.default_output

    # Apply explicit overrides if provided
    if fmt is not None:
        cli_ctx.output = FORMATS[fmt]
    if output is not None:
        cli_ctx.output = output
    if quiet is not None:
        cli_ctx.quiet = quiet

    set_context(cli_ctx)
    _setup_logging(verbose, cli_ctx.is_agent_mode)

    # Store in typer context for subcommands
    ctx.ensure_object(dict)
    ctx.obj["cli_ctx"] = cli_ctx


def main() -> None:
    """Main entry point."""
    try:
        app()
    finally:
        reset_context()


if __name__ == "__main__":
    main()
