"""Finite ternary algebras and their axiom suites.

An algebra carries two operation cubes indexed ``op[x, y, z]``. Unoriented
algebras hold ``(W, B)``, oriented ones ``(C, S)``; in both cases the first
cube is ``op1``. Axioms are written in postfix order, so ``xyzT`` is
``T(x, y, z)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Literal

import numpy as np

from terna.core.magma import MagmaTable
from terna.core.words import parse_word, ternary_table, uses
from terna.exceptions import AlgebraError, KindMismatchError, VarietyError

logger = logging.getLogger(__name__)

Kind = Literal["unoriented", "oriented"]
KINDS: tuple[Kind, ...] = ("unoriented", "oriented")

# Which axioms to evaluate: every axiom, or only the distributivity ones.
AXIOM_SETS = ("all", "distributivity")


@dataclass(frozen=True, eq=False)
class FiniteTernaryAlgebra:
    """A carrier ``{0..n-1}`` with two ternary operations."""

    op1: np.ndarray
    op2: np.ndarray
    kind: Kind = "unoriented"
    name: str = ""

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise AlgebraError(f"unknown algebra kind '{self.kind}'")
        cubes = []
        for label, op in (("op1", self.op1), ("op2", self.op2)):
            cube = np.asarray(op, dtype=np.int64)
            if cube.ndim != 3 or len(set(cube.shape)) != 1 or cube.shape[0] == 0:
                raise AlgebraError(f"{label} of '{self.name}' must be an n x n x n cube")
            cubes.append(cube)
        if cubes[0].shape != cubes[1].shape:
            raise AlgebraError(f"operations of '{self.name}' have different sizes")
        n = cubes[0].shape[0]
        for label, cube in zip(("op1", "op2"), cubes):
            if cube.min() < 0 or cube.max() >= n:
                raise AlgebraError(f"{label} of '{self.name}' has entries outside 0..{n - 1}")
            cube.setflags(write=False)
        object.__setattr__(self, "op1", cubes[0])
        object.__setattr__(self, "op2", cubes[1])

    @property
    def n(self) -> int:
        return int(self.op1.shape[0])

    @property
    def op_names(self) -> tuple[str, str]:
        return ("W", "B") if self.kind == "unoriented" else ("C", "S")

    def swapped(self) -> FiniteTernaryAlgebra:
        """The algebra with the two operations exchanged."""
        return FiniteTernaryAlgebra(self.op2, self.op1, self.kind, f"{self.name} (swapped)")

    def same_tables(self, other: FiniteTernaryAlgebra) -> bool:
        return bool(np.array_equal(self.op1, other.op1) and np.array_equal(self.op2, other.op2))


# Axiom suites

Grid = tuple[np.ndarray, ...]
Equation = Callable[[np.ndarray, np.ndarray, Grid], tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True)
class Axiom:
    number: int
    text: str
    arity: int
    equations: tuple[Equation, ...]


def _unoriented_axioms() -> tuple[Axiom, ...]:
    # p = W, q = B
    return (
        Axiom(1, "b(acbB)aB = c", 3, (lambda p, q, g: (q[g[1], q[g[0], g[2], g[1]], g[0]], g[2]),)),
        Axiom(2, "b(acbW)aW = c", 3, (lambda p, q, g: (p[g[1], p[g[0], g[2], g[1]], g[0]], g[2]),)),
        Axiom(3, "ba(abcB)W = c = ba(abcW)B", 3, (
            lambda p, q, g: (p[g[1], g[0], q[g[0], g[1], g[2]]], g[2]),
            lambda p, q, g: (q[g[1], g[0], p[g[0], g[1], g[2]]], g[2]),
        )),
        Axiom(4, "(cabB)baW = c = (cabW)baB", 3, (
            lambda p, q, g: (p[q[g[2], g[0], g[1]], g[1], g[0]], g[2]),
            lambda p, q, g: (q[p[g[2], g[0], g[1]], g[1], g[0]], g[2]),
        )),
        Axiom(5, "(abcW)cdB = [ab(bcdB)W](bcdB)dB", 4, (_distributive(0, 1),)),
        Axiom(6, "ab(bcdB)W = a(abcW)[(abcW)cdB]W", 4, (_distributive_inner(0, 1),)),
        Axiom(7, "(abcB)cdW = [ab(bcdW)B](bcdW)dW", 4, (_distributive(1, 0),)),
        Axiom(8, "ab(bcdW)B = a(abcB)[(abcB)cdW]B", 4, (_distributive_inner(1, 0),)),
    )  # fmt: skip


def _oriented_axioms() -> tuple[Axiom, ...]:
    # p = C, q = S
    return (
        Axiom(1, "b(acbC)aC = c", 3, (lambda p, q, g: (p[g[1], p[g[0], g[2], g[1]], g[0]], g[2]),)),
        Axiom(2, "b(acbS)aS = c", 3, (lambda p, q, g: (q[g[1], q[g[0], g[2], g[1]], g[0]], g[2]),)),
        Axiom(3, "ba(abcC)S = ba(abcS)C = c", 3, (
            lambda p, q, g: (q[g[1], g[0], p[g[0], g[1], g[2]]], g[2]),
            lambda p, q, g: (p[g[1], g[0], q[g[0], g[1], g[2]]], g[2]),
        )),
        Axiom(4, "(cabC)baS = (cabS)baC = c", 3, (
            lambda p, q, g: (q[p[g[2], g[0], g[1]], g[1], g[0]], g[2]),
            lambda p, q, g: (p[q[g[2], g[0], g[1]], g[1], g[0]], g[2]),
        )),
        Axiom(5, "(abcC)cdC = [ab(bcdC)C](bcdC)dC", 4, (_distributive(0, 0),)),
        Axiom(6, "ab(bcdC)C = a(abcC)[(abcC)cdC]C", 4, (_distributive_inner(0, 0),)),
    )  # fmt: skip


def _pick(p: np.ndarray, q: np.ndarray, which: int) -> np.ndarray:
    return p if which == 0 else q


def _distributive(inner: int, outer: int) -> Equation:
    """``(abcI)cdO = [ab(bcdO)I](bcdO)dO``."""

    def equation(p: np.ndarray, q: np.ndarray, g: Grid) -> tuple[np.ndarray, np.ndarray]:
        i, o = _pick(p, q, inner), _pick(p, q, outer)
        a, b, c, d = g
        bcd = o[b, c, d]
        return o[i[a, b, c], c, d], o[i[a, b, bcd], bcd, d]

    return equation


def _distributive_inner(inner: int, outer: int) -> Equation:
    """``ab(bcdO)I = a(abcI)[(abcI)cdO]I``."""

    def equation(p: np.ndarray, q: np.ndarray, g: Grid) -> tuple[np.ndarray, np.ndarray]:
        i, o = _pick(p, q, inner), _pick(p, q, outer)
        a, b, c, d = g
        abc = i[a, b, c]
        return i[a, b, o[b, c, d]], i[a, abc, o[abc, c, d]]

    return equation


AXIOMS: dict[Kind, tuple[Axiom, ...]] = {
    "unoriented": _unoriented_axioms(),
    "oriented": _oriented_axioms(),
}

DISTRIBUTIVITY: dict[Kind, tuple[int, ...]] = {
    "unoriented": (5, 6, 7, 8),
    "oriented": (5, 6),
}


@dataclass(frozen=True)
class AxiomResult:
    number: int
    text: str
    holds: bool
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom outcome; failed axioms carry the least violating tuple."""

    algebra: str
    kind: Kind
    results: tuple[AxiomResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(r.holds for r in self.results)

    @property
    def passed_count(self) -> int:
        return sum(r.holds for r in self.results)

    @property
    def failures(self) -> tuple[AxiomResult, ...]:
        return tuple(r for r in self.results if not r.holds)

    def summary(self) -> str:
        return f"{self.passed_count}/{len(self.results)} axioms pass"


def _first_violation(axiom: Axiom, a: FiniteTernaryAlgebra) -> tuple[int, ...] | None:
    grid = tuple(np.indices((a.n,) * axiom.arity))
    witnesses = []
    for equation in axiom.equations:
        lhs, rhs = equation(a.op1, a.op2, grid)
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            witnesses.append(tuple(int(v) for v in bad[0]))
    return min(witnesses) if witnesses else None


def check_axioms(
    a: FiniteTernaryAlgebra, kind: Kind | None = None, axioms: str = "all"
) -> AxiomReport:
    """Evaluate the axiom suite of ``kind`` exhaustively over all tuples."""
    kind = kind or a.kind
    if kind != a.kind:
        raise KindMismatchError(f"'{a.name}' is {a.kind}; the {kind} axioms do not apply")
    if axioms not in AXIOM_SETS:
        raise AlgebraError(f"unknown axiom set '{axioms}'; choose from {', '.join(AXIOM_SETS)}")
    selected = [
        ax for ax in AXIOMS[kind] if axioms == "all" or ax.number in DISTRIBUTIVITY[kind]
    ]
    results = []
    for axiom in selected:
        witness = _first_violation(axiom, a)
        results.append(AxiomResult(axiom.number, axiom.text, witness is None, witness))
    report = AxiomReport(a.name, kind, tuple(results))
    logger.debug("axioms of %s: %s", a.name, report.summary())
    return report


def axioms_hold(a: FiniteTernaryAlgebra, axioms: str = "all") -> bool:
    """Like :func:`check_axioms` but stops at the first failing equation."""
    for axiom in AXIOMS[a.kind]:
        if axioms != "all" and axiom.number not in DISTRIBUTIVITY[a.kind]:
            continue
        grid = tuple(np.indices((a.n,) * axiom.arity))
        for equation in axiom.equations:
            lhs, rhs = equation(a.op1, a.op2, grid)
            if not np.array_equal(lhs, rhs):
                return False
    return True


def check_unoriented_axioms(a: FiniteTernaryAlgebra, axioms: str = "all") -> AxiomReport:
    return check_axioms(a, "unoriented", axioms)


def check_oriented_axioms(a: FiniteTernaryAlgebra, axioms: str = "all") -> AxiomReport:
    return check_axioms(a, "oriented", axioms)


def witness_violates(a: FiniteTernaryAlgebra, number: int, witness: tuple[int, ...]) -> bool:
    """Re-evaluate axiom ``number`` at one tuple."""
    axiom = next(ax for ax in AXIOMS[a.kind] if ax.number == number)
    grid = tuple(np.array(v) for v in witness)
    return any(bool(lhs != rhs) for lhs, rhs in (eq(a.op1, a.op2, grid) for eq in axiom.equations))


# Latin cubes


@dataclass(frozen=True)
class LatinReport:
    """``slices[op][position]`` is True when every slice along ``position`` is a bijection."""

    slices: dict[str, tuple[bool, bool, bool]]

    @property
    def is_latin(self) -> bool:
        return all(all(v) for v in self.slices.values())


def is_latin(cube: np.ndarray) -> tuple[bool, bool, bool]:
    """Bijectivity of the slices along each argument position."""
    idx = np.arange(cube.shape[0])

    def along(axis: int) -> bool:
        expected = np.expand_dims(idx, tuple(k for k in range(3) if k != axis))
        return bool(np.all(np.sort(cube, axis=axis) == expected))

    return along(0), along(1), along(2)


def latin_cube_check(a: FiniteTernaryAlgebra) -> LatinReport:
    names = a.op_names
    return LatinReport({names[0]: is_latin(a.op1), names[1]: is_latin(a.op2)})


def derive_op2(op1: np.ndarray) -> np.ndarray:
    """The unique ``op2`` with ``op2(b, a, op1(a, b, c)) = c``."""
    op1 = np.asarray(op1, dtype=np.int64)
    if not is_latin(op1)[2]:
        raise AlgebraError("op1 is not a bijection in its third argument")
    a, b, c = np.indices(op1.shape)
    op2 = np.empty_like(op1)
    op2[b, a, op1] = c
    return op2


# Constructions from words

# Group word pairs, (op1, op2) = (W, B); oriented algebras read them as (C, S).
GROUP_WORDS: dict[str, tuple[str, str]] = {
    "g1": ("ab^-1c", "ab^-1c"),
    "g2": ("ac^-1b", "ac^-1b"),
    "g3": ("ba^-1c", "ba^-1c"),
    "g4": ("bc^-1a", "bc^-1a"),
    "g5": ("ca^-1b", "ca^-1b"),
    "g6": ("cb^-1a", "cb^-1a"),
    "g7": ("bca^-1", "a^-1cb"),
    "g8": ("bac^-1", "c^-1ab"),
    "g9": ("a^-1b^-1c^-1", "c^-1b^-1a^-1"),
}

# Loop word pairs in listing order, taken as (op1, op2).
LOOP_WORDS: dict[str, tuple[str, str]] = {
    "m1": ("(b*a^-1)*c", "(b*a^-1)*c"),
    "m2": ("(b*c^-1)*a", "(b*c^-1)*a"),
    "m3": ("a*(c^-1*b)", "a*(c^-1*b)"),
    "m4": ("c*(a^-1*b)", "c*(a^-1*b)"),
    "m5": ("a^-1*(c*b)", "(b*c)*a^-1"),
    "m6": ("c^-1*(a*b)", "(b*a)*c^-1"),
    "e1": ("(a*b^-1)*c", "(a*b^-1)*c"),
    "e2": ("(a*c^-1)*b", "(a*c^-1)*b"),
    "e3": ("(b*a^-1)*c", "(b*a^-1)*c"),
    "e4": ("(b*c^-1)*a", "(b*c^-1)*a"),
    "e5": ("(c*a^-1)*b", "(c*a^-1)*b"),
    "e6": ("(c*b^-1)*a", "(c*b^-1)*a"),
    "e7": ("a*(b^-1*c)", "a*(b^-1*c)"),
    "e8": ("a*(c^-1*b)", "a*(c^-1*b)"),
    "e9": ("b*(a^-1*c)", "b*(a^-1*c)"),
    "e10": ("b*(c^-1*a)", "b*(c^-1*a)"),
    "e11": ("c*(a^-1*b)", "c*(a^-1*b)"),
    "e12": ("c*(b^-1*a)", "c*(b^-1*a)"),
    "e13": ("(a^-1*c)*b", "b*(c*a^-1)"),
    "e14": ("(c^-1*a)*b", "b*(a*c^-1)"),
    "e15": ("a^-1*(c*b)", "(b*c)*a^-1"),
    "e16": ("c^-1*(a*b)", "(b*a)*c^-1"),
    "e17": ("(a^-1*b^-1)*c^-1", "c^-1*(b^-1*a^-1)"),
    "e18": ("a^-1*(b^-1*c^-1)", "(c^-1*b^-1)*a^-1"),
    "b1": ("(b/a)*c", "(b/a)*c"),
    "b2": ("(b/c)*a", "(b/c)*a"),
    "b3": ("(b/a^-1)*c^-1", "((a/b^-1)\\c)^-1"),
    "b4": ("(b/c^-1)*a^-1", "((c/b^-1)\\a)^-1"),
}

# Formula family -> variety its loop must belong to.
LOOP_FAMILIES = {"m": "moufang", "e": "extra", "b": "left_bol"}


def from_words(
    table: MagmaTable, words: tuple[str, str], kind: Kind, name: str
) -> FiniteTernaryAlgebra:
    """Materialize two ternary words over ``table``."""
    parsed = [parse_word(w) for w in words]
    if any("^-1" in uses(w) for w in parsed):
        _ = table.inverse  # raises unless inverses are two-sided
    return FiniteTernaryAlgebra(
        ternary_table(parsed[0], table), ternary_table(parsed[1], table), kind, name
    )


def from_group_word(g: MagmaTable, pair_id: str, kind: Kind = "unoriented") -> FiniteTernaryAlgebra:
    if pair_id not in GROUP_WORDS:
        raise AlgebraError(f"unknown group word pair '{pair_id}'; choose from g1..g9")
    g.require_group()
    return from_words(g, GROUP_WORDS[pair_id], kind, f"{pair_id}:{g.name}")


def from_loop_word(
    loop: MagmaTable, formula_id: str, kind: Kind = "oriented"
) -> FiniteTernaryAlgebra:
    if formula_id not in LOOP_WORDS:
        raise AlgebraError(f"unknown loop formula '{formula_id}'")
    variety = LOOP_FAMILIES[formula_id[0]]
    try:
        loop.require_variety(variety)
    except VarietyError as e:
        needed = variety.replace("_", " ")
        raise VarietyError(f"formula {formula_id} needs a {needed} loop: {e}") from e
    return from_words(loop, LOOP_WORDS[formula_id], kind, f"{formula_id}:{loop.name}")


def constant_algebra(n: int, kind: Kind = "unoriented") -> FiniteTernaryAlgebra:
    zeros = np.zeros((n, n, n), dtype=np.int64)
    return FiniteTernaryAlgebra(zeros, zeros, kind, f"const{n}")
