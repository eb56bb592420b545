"""Core computations: diagrams, algebras, colorings, presentations, search."""
