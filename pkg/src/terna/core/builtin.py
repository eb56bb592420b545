"""Built-in groups, loops and algebras, addressable by name.

Algebra names:
    paper-unoriented-4, paper-oriented-4   the 4-element example tables
    std-unoriented-4, std-oriented-4       aliases of the two above
    g1..g9:<group>                          group word pairs
    core:<group>                            alias of g8 (core group operators)
    knot:<group>                            alias of g1 (knot group operators)
    m1..m6:<loop>, e1..e18:<loop>, b1..b4:<loop>

``<group>`` is one of c1..c8, s3, d4, q8. ``<loop>`` is a group, ``ms3``/``M(S3,2)``,
``md4``/``M(D4,2)`` or a path to a Cayley-table file.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Callable

import numpy as np

from terna.core.algebra import (
    GROUP_WORDS,
    LOOP_WORDS,
    FiniteTernaryAlgebra,
    Kind,
    from_group_word,
    from_loop_word,
)
from terna.core.magma import MagmaTable, cyclic, dihedral4, m_construction, quaternion8, symmetric3
from terna.exceptions import AlgebraError

# Slices of the 4-element tables: one 4x4 matrix per third argument
# z = 1..4, rows x, columns y, entries 1-based.
STD_W = {
    4: [[1, 2, 3, 4], [3, 4, 2, 1], [4, 3, 1, 2], [2, 1, 4, 3]],
    3: [[4, 3, 1, 2], [1, 2, 3, 4], [2, 1, 4, 3], [3, 4, 2, 1]],
    2: [[3, 4, 2, 1], [2, 1, 4, 3], [1, 2, 3, 4], [4, 3, 1, 2]],
    1: [[2, 1, 4, 3], [4, 3, 1, 2], [3, 4, 2, 1], [1, 2, 3, 4]],
}
STD_B = {
    4: [[3, 1, 4, 2], [2, 4, 1, 3], [1, 2, 3, 4], [4, 3, 2, 1]],
    3: [[2, 4, 1, 3], [3, 1, 4, 2], [4, 3, 2, 1], [1, 2, 3, 4]],
    2: [[1, 2, 3, 4], [4, 3, 2, 1], [2, 4, 1, 3], [3, 1, 4, 2]],
    1: [[4, 3, 2, 1], [1, 2, 3, 4], [3, 1, 4, 2], [2, 4, 1, 3]],
}
STD_C = {
    4: [[2, 3, 4, 1], [1, 4, 3, 2], [4, 1, 2, 3], [3, 2, 1, 4]],
    3: [[3, 4, 1, 2], [4, 1, 2, 3], [1, 2, 3, 4], [2, 3, 4, 1]],
    2: [[4, 1, 2, 3], [3, 2, 1, 4], [2, 3, 4, 1], [1, 4, 3, 2]],
    1: [[1, 2, 3, 4], [2, 3, 4, 1], [3, 4, 1, 2], [4, 1, 2, 3]],
}
STD_S = {
    4: [[2, 3, 4, 1], [3, 4, 1, 2], [4, 1, 2, 3], [1, 2, 3, 4]],
    3: [[3, 2, 1, 4], [4, 1, 2, 3], [1, 4, 3, 2], [2, 3, 4, 1]],
    2: [[4, 1, 2, 3], [1, 2, 3, 4], [2, 3, 4, 1], [3, 4, 1, 2]],
    1: [[1, 4, 3, 2], [2, 3, 4, 1], [3, 2, 1, 4], [4, 1, 2, 3]],
}


def cube_from_slices(slices: dict[int, list[list[int]]], base: int = 1) -> np.ndarray:
    """Stack per-``z`` slices into ``op[x, y, z]``, shifting entries and ``z`` by ``base``."""
    n = len(slices)
    cube = np.empty((n, n, n), dtype=np.int64)
    for z, matrix in slices.items():
        cube[:, :, z - base] = np.asarray(matrix, dtype=np.int64) - base
    return cube


def std_unoriented() -> FiniteTernaryAlgebra:
    return FiniteTernaryAlgebra(
        cube_from_slices(STD_W), cube_from_slices(STD_B), "unoriented", "std-unoriented-4"
    )


def std_oriented() -> FiniteTernaryAlgebra:
    return FiniteTernaryAlgebra(
        cube_from_slices(STD_C), cube_from_slices(STD_S), "oriented", "std-oriented-4"
    )


GROUPS: dict[str, Callable[[], MagmaTable]] = {
    **{f"c{n}": (lambda n=n: cyclic(n)) for n in range(1, 9)},
    "s3": symmetric3,
    "d4": dihedral4,
    "q8": quaternion8,
}

LOOPS: dict[str, Callable[[], MagmaTable]] = {
    "ms3": lambda: m_construction(symmetric3()),
    "md4": lambda: m_construction(dihedral4()),
}

_LOOP_ALIASES = {"m(s3,2)": "ms3", "m(d4,2)": "md4"}

# The std-* names are aliases of the first two.
FIXED_ALGEBRAS: dict[str, Callable[[], FiniteTernaryAlgebra]] = {
    "paper-unoriented-4": std_unoriented,
    "paper-oriented-4": std_oriented,
    "std-unoriented-4": std_unoriented,
    "std-oriented-4": std_oriented,
}

ALGEBRAS = tuple(FIXED_ALGEBRAS)

_ALGEBRA_RE = re.compile(r"^(?P<formula>[a-z]+\d*):(?P<base>.+)$")


def get_group(name: str) -> MagmaTable:
    key = name.strip().lower()
    if key not in GROUPS:
        raise AlgebraError(f"unknown group '{name}'; built-in groups: {', '.join(GROUPS)}")
    return GROUPS[key]()


def get_loop(name: str) -> MagmaTable:
    """A built-in group or loop, or a Cayley-table file."""
    key = _LOOP_ALIASES.get(name.strip().lower(), name.strip().lower())
    if key in LOOPS:
        return LOOPS[key]()
    if key in GROUPS:
        return GROUPS[key]()
    path = Path(name)
    if path.suffix in (".yaml", ".yml") or path.exists():
        from terna.core.fileformat import load_cayley

        return load_cayley(path)
    known = ", ".join([*GROUPS, *LOOPS])
    raise AlgebraError(f"unknown group or loop '{name}'; built-in: {known}")


def get_algebra(name: str, kind: Kind | None = None) -> FiniteTernaryAlgebra:
    """Resolve a built-in algebra name.

    Args:
        name: Algebra name, e.g. ``paper-unoriented-4`` or ``g2:s3``.
        kind: Kind for word-built algebras. Group words default to unoriented,
            loop words to oriented. Ignored for the fixed tables.

    Raises:
        AlgebraError: If the name cannot be resolved.
    """
    key = name.strip()
    if key in FIXED_ALGEBRAS:
        return _renamed(FIXED_ALGEBRAS[key](), key)
    match = _ALGEBRA_RE.match(key)
    if not match:
        raise AlgebraError(f"unknown algebra '{name}'")
    formula, base = match.group("formula").lower(), match.group("base")
    formula = {"core": "g8", "knot": "g1"}.get(formula, formula)
    if formula in GROUP_WORDS:
        algebra = from_group_word(get_group(base), formula, kind or "unoriented")
        return _renamed(algebra, key)
    if formula in LOOP_WORDS:
        return _renamed(from_loop_word(get_loop(base), formula, kind or "oriented"), key)
    raise AlgebraError(f"unknown operator formula '{match.group('formula')}' in '{name}'")


def _renamed(a: FiniteTernaryAlgebra, name: str) -> FiniteTernaryAlgebra:
    return FiniteTernaryAlgebra(a.op1, a.op2, a.kind, name)


def builtin_names() -> list[str]:
    """Every fixed-table and group-word algebra name, for listings."""
    names = list(ALGEBRAS)
    names += [f"{g}:<group>" for g in GROUP_WORDS]
    names += ["core:<group>", "knot:<group>"]
    names += [f"{f}:<loop>" for f in LOOP_WORDS]
    return names
