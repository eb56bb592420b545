"""Binary Cayley tables: groups, loops, divisions and loop identities."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from terna.core.words import evaluate, parse_word, variables
from terna.exceptions import AlgebraError, VarietyError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MagmaTable:
    """A binary operation on ``{0..n-1}`` given by its Cayley table.

    ``mul[x, y]`` is ``x * y``. ``identity`` is found automatically when not
    given. ``labels`` are display names for the elements.
    """

    mul: np.ndarray
    name: str = ""
    identity: int | None = None
    labels: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        mul = np.asarray(self.mul, dtype=np.int64)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
            raise AlgebraError(f"Cayley table of '{self.name}' must be a non-empty square")
        n = mul.shape[0]
        if mul.min() < 0 or mul.max() >= n:
            raise AlgebraError(f"Cayley table of '{self.name}' has entries outside 0..{n - 1}")
        mul.setflags(write=False)
        object.__setattr__(self, "mul", mul)
        if self.identity is None:
            object.__setattr__(self, "identity", self._find_identity())
        elif not (0 <= self.identity < n) or not self._is_identity(self.identity):
            raise AlgebraError(f"element {self.identity} is not an identity of '{self.name}'")
        if self.labels and len(self.labels) != n:
            raise AlgebraError(f"'{self.name}' has {len(self.labels)} labels for {n} elements")

    @property
    def n(self) -> int:
        return int(self.mul.shape[0])

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def _is_identity(self, e: int) -> bool:
        idx = np.arange(self.n)
        return bool(np.all(self.mul[e] == idx) and np.all(self.mul[:, e] == idx))

    def _find_identity(self) -> int | None:
        for e in range(self.n):
            if self._is_identity(e):
                return e
        return None

    # Structure

    @cached_property
    def is_quasigroup(self) -> bool:
        idx = np.arange(self.n)
        rows = np.all(np.sort(self.mul, axis=1) == idx)
        cols = np.all(np.sort(self.mul, axis=0) == idx[:, None])
        return bool(rows and cols)

    @property
    def is_loop(self) -> bool:
        return self.is_quasigroup and self.identity is not None

    @cached_property
    def is_associative(self) -> bool:
        return loop_property(self, "associative").holds

    @property
    def is_group(self) -> bool:
        return self.is_loop and self.is_associative

    @property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    # Divisions and inverses

    @cached_property
    def ldiv(self) -> np.ndarray:
        """``ldiv[x, z]`` is ``x \\ z``, the ``y`` with ``x * y = z``."""
        self._require_quasigroup("left division")
        table = np.empty_like(self.mul)
        rows = np.arange(self.n)[:, None]
        table[rows, self.mul] = np.arange(self.n)[None, :]
        return table

    @cached_property
    def rdiv(self) -> np.ndarray:
        """``rdiv[z, y]`` is ``z / y``, the ``x`` with ``x * y = z``."""
        self._require_quasigroup("right division")
        table = np.empty_like(self.mul)
        cols = np.arange(self.n)[None, :]
        table[self.mul, cols] = np.arange(self.n)[:, None]
        return table

    @cached_property
    def inverse(self) -> np.ndarray:
        """Two-sided inverses; every element must have one."""
        if not self.is_loop:
            raise VarietyError(f"'{self.name}' is not a loop; inverses are undefined")
        assert self.identity is not None
        right = self.ldiv[:, self.identity]
        left = self.rdiv[self.identity, :]
        bad = np.nonzero(right != left)[0]
        if bad.size:
            x = int(bad[0])
            raise VarietyError(
                f"element {self.label(x)} of '{self.name}' has different left and right inverses"
            )
        return right

    def _require_quasigroup(self, what: str) -> None:
        if not self.is_quasigroup:
            raise VarietyError(f"'{self.name}' is not a quasigroup; {what} is undefined")

    def require_group(self) -> None:
        if not self.is_loop:
            raise VarietyError(f"'{self.name}' is not a group: it is not a loop")
        result = loop_property(self, "associative")
        if not result.holds:
            x, y, z = result.witness or (0, 0, 0)
            raise VarietyError(
                f"'{self.name}' is not a group: (xy)z != x(yz) at x={x}, y={y}, z={z}"
            )

    def require_variety(self, variety: str) -> None:
        """Raise :class:`VarietyError` unless every identity of ``variety`` holds.

        A single identity such as ``left_bol`` names its own variety.
        """
        if not self.is_loop:
            raise VarietyError(f"'{self.name}' is not a loop")
        for prop in VARIETIES.get(variety, (variety,)):
            result = loop_property(self, prop)
            if not result.holds:
                raise VarietyError(
                    f"'{self.name}' is not {variety.replace('_', ' ')}: "
                    f"{prop} fails at {result.witness}"
                )


# Constructors


def cyclic(n: int) -> MagmaTable:
    if n < 1:
        raise AlgebraError("cyclic group order must be positive")
    idx = np.arange(n)
    return MagmaTable((idx[:, None] + idx[None, :]) % n, name=f"c{n}", identity=0)


def from_permutations(perms: Sequence[Sequence[int]], name: str) -> MagmaTable:
    """Group of permutations under composition ``(p*q)(x) = p(q(x))``."""
    elements = sorted({tuple(p) for p in perms})
    index = {p: i for i, p in enumerate(elements)}
    n = len(elements)
    mul = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(elements):
        for j, q in enumerate(elements):
            composed = tuple(p[x] for x in q)
            if composed not in index:
                raise AlgebraError(f"permutations of '{name}' are not closed under composition")
            mul[i, j] = index[composed]
    labels = tuple("".join(map(str, p)) for p in elements)
    return MagmaTable(mul, name=name, labels=labels)


def generate_permutations(generators: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Closure of ``generators`` under composition."""
    gens = [tuple(g) for g in generators]
    found = {tuple(range(len(gens[0])))}
    frontier = list(found)
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[x] for x in g)
                if q not in found:
                    found.add(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(found)


def symmetric3() -> MagmaTable:
    return from_permutations(list(itertools.permutations(range(3))), "s3")


def dihedral4() -> MagmaTable:
    """Symmetries of the square, order 8."""
    return from_permutations(generate_permutations([(1, 2, 3, 0), (0, 3, 2, 1)]), "d4")


_QUAT = {  # unit products without sign: (u, v) -> (sign, w) over 1, i, j, k
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}  # fmt: skip


def quaternion8() -> MagmaTable:
    """Quaternion group; element ``2u + s`` is ``(-1)^s`` times unit ``u``."""
    mul = np.empty((8, 8), dtype=np.int64)
    for x in range(8):
        for y in range(8):
            sign, w = _QUAT[(x // 2, y // 2)]
            negative = (x % 2) ^ (y % 2) ^ (sign < 0)
            mul[x, y] = 2 * w + negative
    labels = tuple(f"{s}{u}" for u in "1ijk" for s in ("", "-"))
    return MagmaTable(mul, name="q8", identity=0, labels=labels)


def m_construction(g: MagmaTable) -> MagmaTable:
    """The doubled loop on ``G x {0, 1}``; ``(h, 0)`` is ``h`` and ``(h, 1)`` is ``n + h``."""
    g.require_group()
    n = g.n
    inv = g.inverse
    mul = np.empty((2 * n, 2 * n), dtype=np.int64)
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    mul[:n, :n] = g.mul[a, b]
    mul[:n, n:] = n + g.mul[b, a]
    mul[n:, :n] = n + g.mul[a, inv[b]]
    mul[n:, n:] = g.mul[inv[b], a]
    labels = tuple(f"({g.label(h)},{k})" for k in (0, 1) for h in range(n))
    assert g.identity is not None
    return MagmaTable(mul, name=f"M({g.name.upper()},2)", identity=g.identity, labels=labels)


# Identities

# Each identity is an equation between two loop words in x, y, z.
IDENTITIES: dict[str, str] = {
    "associative": "(x*y)*z = x*(y*z)",
    "left_bol": "x*(y*(x*z)) = (x*(y*x))*z",
    "right_bol": "((z*x)*y)*x = z*((x*y)*x)",
    "moufang1": "z*(x*(z*y)) = ((z*x)*z)*y",
    "moufang2": "x*(z*(y*z)) = ((x*z)*y)*z",
    "moufang3": "(z*x)*(y*z) = (z*(x*y))*z",
    "moufang4": "(z*x)*(y*z) = z*((x*y)*z)",
    "extra1": "(x*(y*z))*y = (x*y)*(z*y)",
    "extra2": "(y*z)*(y*x) = y*((z*y)*x)",
    "extra3": "((x*y)*z)*x = x*(y*(z*x))",
    "cc1": "(x*y)*z = (x*z)*(z\\(y*z))",
    "cc2": "z*(y*x) = ((z*y)/z)*(z*x)",
    "c_loop": "x*(y*(y*z)) = ((x*y)*y)*z",
    "lc": "(x*x)*(y*z) = (x*(x*y))*z",
    "rc": "x*((y*z)*z) = (x*y)*(z*z)",
    "flexible": "x*(y*x) = (x*y)*x",
    "left_alternative": "x*(x*y) = (x*x)*y",
    "right_alternative": "x*(y*y) = (x*y)*y",
    "left_inverse": "x^-1*(x*y) = y",
    "right_inverse": "(y*x)*x^-1 = y",
    "aaip": "(x*y)^-1 = y^-1*x^-1",
    "commutative": "x*y = y*x",
}


VARIETIES: dict[str, tuple[str, ...]] = {
    "moufang": ("moufang1", "moufang2", "moufang3", "moufang4"),
    "extra": ("extra1", "extra2", "extra3"),
    "conjugacy_closed": ("cc1", "cc2"),
    "inverse_property": ("left_inverse", "right_inverse"),
}

PROPERTIES = ("quasigroup", "loop", *IDENTITIES, *VARIETIES)


@dataclass(frozen=True)
class PropertyResult:
    """Outcome of one property check; ``witness`` is the least failing tuple."""

    name: str
    holds: bool
    witness: tuple[int, ...] | None = None
    detail: str = ""


def loop_property(table: MagmaTable, prop: str) -> PropertyResult:
    """Check one identity, variety or structural property exhaustively."""
    if prop == "quasigroup":
        return PropertyResult(prop, table.is_quasigroup)
    if prop == "loop":
        return PropertyResult(prop, table.is_loop)
    if prop in VARIETIES:
        for member in VARIETIES[prop]:
            result = loop_property(table, member)
            if not result.holds:
                return PropertyResult(prop, False, result.witness, f"{member} fails")
        return PropertyResult(prop, True)
    if prop not in IDENTITIES:
        raise AlgebraError(f"unknown loop property '{prop}'; choose from {', '.join(PROPERTIES)}")
    lhs_word, rhs_word = (parse_word(side) for side in IDENTITIES[prop].split("="))
    names = sorted(variables(lhs_word) | variables(rhs_word))
    grids = np.indices((table.n,) * len(names))
    env = dict(zip(names, grids))
    try:
        lhs = evaluate(lhs_word, table, env)
        rhs = evaluate(rhs_word, table, env)
    except VarietyError as e:
        return PropertyResult(prop, False, None, str(e))
    lhs, rhs = np.broadcast_arrays(lhs, rhs)
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        witness = tuple(int(v) for v in bad[0])
        logger.debug("%s fails on %s at %s", prop, table.name, witness)
        return PropertyResult(prop, False, witness)
    return PropertyResult(prop, True)
