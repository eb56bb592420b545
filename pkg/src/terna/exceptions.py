"""Custom exceptions for terna."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from terna.core.algebra import AxiomReport


class TernaError(Exception):
    """Base exception for terna."""

    pass


class ConfigError(TernaError):
    """Error in configuration."""

    pass


class FileFormatError(TernaError):
    """Malformed diagram, algebra or Cayley-table file."""

    pass


class DiagramError(TernaError):
    """Invalid PD code or diagram structure."""

    pass


class MoveError(DiagramError):
    """A Reidemeister move was requested at an invalid site."""

    pass


class AlgebraError(TernaError):
    """Invalid operation table or algebra construction."""

    pass


class KindMismatchError(AlgebraError):
    """Oriented algebra used where an unoriented one is required, or vice versa."""

    pass


class VarietyError(AlgebraError):
    """A group or loop does not belong to the variety a formula requires."""

    pass


class ColoringError(TernaError):
    """Error while building or checking colorings."""

    pass


class AxiomFailure(ColoringError):
    """Coloring requested with an algebra that fails its axiom suite."""

    def __init__(self, message: str, report: AxiomReport) -> None:
        super().__init__(message)
        self.report = report


class ArcLabelError(ColoringError):
    """Arc labels induced by a region coloring are not well defined."""

    pass


class SearchBudgetExceeded(TernaError):
    """A search stopped before exhausting its space."""

    pass
