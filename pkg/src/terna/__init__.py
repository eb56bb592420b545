"""terna - ternary region colorings of knot diagrams."""

from terna.version import __version__

__all__ = ["__version__"]
