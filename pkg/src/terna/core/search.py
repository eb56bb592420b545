"""Searches for operator pairs satisfying the axiom suites.

Word search enumerates ternary words of depth two::

    (X o Y) o Z      or      X o (Y o Z)

where ``X Y Z`` is a permutation of ``a b c``, each leaf may be inverted and
each ``o`` is one of ``* \\ /`` (only ``*`` when every battery member is a
group). Words are deduplicated by their tables on the battery; the first word
in enumeration order names each class.

Cube search enumerates ``op1`` as a Latin cube, layer by layer over the third
argument, derives ``op2`` from axiom (3) and keeps the cubes passing the rest.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Literal, Sequence

import numpy as np

from terna.core.algebra import (
    AXIOM_SETS,
    GROUP_WORDS,
    FiniteTernaryAlgebra,
    Kind,
    axioms_hold,
    derive_op2,
    from_group_word,
    is_latin,
)
from terna.core.arcs import LabelRule, Scheme, arc_labels, label_rules, verify_arc_relations
from terna.core.coloring import enumerate_colorings
from terna.core.diagram import ShadedDiagram
from terna.core.magma import MagmaTable
from terna.core.words import ternary_table
from terna.exceptions import AlgebraError, ArcLabelError, SearchBudgetExceeded, VarietyError

logger = logging.getLogger(__name__)

Shape = Literal["left", "right"]

SHAPES: tuple[Shape, ...] = ("left", "right")
GROUP_OPS = ("*",)
LOOP_OPS = ("*", "\\", "/")

DEFAULT_CUBE_BUDGET = 200_000


@dataclass(frozen=True)
class WordTemplate:
    """A depth-two word using each of ``a``, ``b``, ``c`` once."""

    shape: Shape
    order: tuple[str, str, str]
    inverted: tuple[bool, bool, bool]
    ops: tuple[str, str]

    def text(self) -> str:
        x, y, z = (v + ("^-1" if inv else "") for v, inv in zip(self.order, self.inverted))
        inner, outer = self.ops
        if self.shape == "left":
            return f"({x}{inner}{y}){outer}{z}"
        return f"{x}{outer}({y}{inner}{z})"


def templates(ops: Sequence[str]) -> Iterator[WordTemplate]:
    """Every template in a fixed enumeration order."""
    for shape in SHAPES:
        for order in itertools.permutations("abc"):
            for mask in range(8):
                inverted = (bool(mask & 4), bool(mask & 2), bool(mask & 1))
                for pair in itertools.product(ops, repeat=2):
                    yield WordTemplate(shape, (order[0], order[1], order[2]), inverted, pair)


@dataclass(frozen=True)
class SearchHit:
    """One surviving operator pair with its algebra on every battery member."""

    op1: str | None
    op2: str | None
    algebras: tuple[FiniteTernaryAlgebra, ...]

    @property
    def symmetric(self) -> bool:
        return all(np.array_equal(a.op1, a.op2) for a in self.algebras)

    def to_dict(self) -> dict[str, object]:
        return {
            "op1": self.op1,
            "op2": self.op2,
            "members": [a.name for a in self.algebras],
            "symmetric": self.symmetric,
        }


@dataclass(frozen=True)
class SearchResult:
    case: Kind
    axioms: str
    source: tuple[str, ...]
    hits: tuple[SearchHit, ...] = field(default_factory=tuple)
    explored: int = 0
    complete: bool = True

    def to_dict(self) -> dict[str, object]:
        return {
            "case": self.case,
            "axioms": self.axioms,
            "source": list(self.source),
            "explored": self.explored,
            "complete": self.complete,
            "hits": [h.to_dict() for h in self.hits],
        }


def _check_options(case: str, axioms: str) -> None:
    if case not in ("unoriented", "oriented"):
        raise AlgebraError(f"unknown case '{case}'; choose unoriented or oriented")
    if axioms not in AXIOM_SETS:
        raise AlgebraError(f"unknown axiom set '{axioms}'; choose from {', '.join(AXIOM_SETS)}")


def _validate_battery(battery: Sequence[MagmaTable]) -> None:
    if not battery:
        raise AlgebraError("the search battery is empty")
    for member in battery:
        if not member.is_loop:
            raise AlgebraError(f"battery member '{member.name}' is not a loop")
        try:
            _ = member.inverse
        except VarietyError as e:
            raise AlgebraError(f"battery member '{member.name}' is unusable: {e}") from e


# Word search


def _involutive(op: np.ndarray) -> bool:
    """``T(b, T(a, c, b), a) = c``, the single-operation axiom."""
    a, b, c = np.indices(op.shape)
    return bool(np.array_equal(op[b, op[a, c, b], a], c))


def search_words(
    battery: Sequence[MagmaTable], case: Kind = "unoriented", axioms: str = "all"
) -> SearchResult:
    """Operator pairs passing the axiom suite of ``case`` on every battery member.

    Pairs are reported once up to exchanging the two roles. With
    ``axioms="all"`` the second operation is forced by axiom (3), so each
    candidate word is paired with at most one partner; the distributivity-only
    filter compares every pair.
    """
    _check_options(case, axioms)
    _validate_battery(battery)
    ops = GROUP_OPS if all(m.is_group for m in battery) else LOOP_OPS

    classes: dict[tuple[bytes, ...], int] = {}
    words: list[str] = []
    tables: list[tuple[np.ndarray, ...]] = []
    explored = 0
    for template in templates(ops):
        explored += 1
        text = template.text()
        cubes = tuple(ternary_table(text, m) for m in battery)
        key = tuple(c.tobytes() for c in cubes)
        if key in classes:
            continue
        classes[key] = len(words)
        words.append(text)
        tables.append(cubes)
    logger.debug("%d templates, %d distinct operations", explored, len(words))

    def algebras(i: int, j: int) -> tuple[FiniteTernaryAlgebra, ...]:
        return tuple(
            FiniteTernaryAlgebra(p, q, case, f"{m.name}")
            for p, q, m in zip(tables[i], tables[j], battery)
        )

    def passes(i: int, j: int) -> bool:
        return all(axioms_hold(a, axioms) for a in algebras(i, j))

    found: dict[frozenset[int], tuple[int, int]] = {}
    if axioms == "all":
        for i in range(len(words)):
            if not all(_involutive(t) for t in tables[i]):
                continue
            if not all(is_latin(t)[2] for t in tables[i]):
                continue
            partner = tuple(derive_op2(t).tobytes() for t in tables[i])
            j = classes.get(partner)
            if j is None or frozenset((i, j)) in found:
                continue
            if passes(i, j):
                found[frozenset((i, j))] = (i, j)
    else:
        for i, j in itertools.product(range(len(words)), repeat=2):
            if frozenset((i, j)) not in found and passes(i, j):
                found[frozenset((i, j))] = (i, j)

    hits = tuple(
        SearchHit(words[i], words[j], algebras(i, j)) for i, j in sorted(found.values())
    )
    logger.info("word search (%s, %s): %d pairs", case, axioms, len(hits))
    return SearchResult(case, axioms, tuple(m.name for m in battery), hits, explored)


# Cube search


def latin_squares(n: int) -> np.ndarray:
    """All Latin squares of order ``n``, shape ``(count, n, n)``, in lexicographic order."""
    rows = [np.array(p, dtype=np.int64) for p in itertools.permutations(range(n))]
    found: list[np.ndarray] = []

    def extend(chosen: list[np.ndarray]) -> None:
        if len(chosen) == n:
            found.append(np.stack(chosen))
            return
        for row in rows:
            if all(np.all(row != prev) for prev in chosen):
                chosen.append(row)
                extend(chosen)
                chosen.pop()

    extend([])
    return np.stack(found) if found else np.empty((0, n, n), dtype=np.int64)


@dataclass
class _CubeWalker:
    squares: np.ndarray
    case: Kind
    axioms: str
    budget: int
    explored: int = 0
    # (ordinal within the branch, op1)
    survivors: list[tuple[int, np.ndarray]] = field(default_factory=list)
    exhausted: bool = False

    def run(self, first: int) -> None:
        n = self.squares.shape[1]
        allowed = np.all(self.squares != self.squares[first], axis=(1, 2))
        self._extend([self.squares[first]], allowed, n)

    def _extend(self, layers: list[np.ndarray], allowed: np.ndarray, n: int) -> None:
        if len(layers) == n:
            if self.explored == self.budget:
                self.exhausted = True
                return
            self.explored += 1
            self._test(np.stack(layers, axis=2))
            return
        for k in np.flatnonzero(allowed):
            layer = self.squares[k]
            layers.append(layer)
            self._extend(layers, allowed & np.all(self.squares != layer, axis=(1, 2)), n)
            layers.pop()
            if self.exhausted:
                return

    def _test(self, op1: np.ndarray) -> None:
        if self.axioms == "all" and not _involutive(op1):
            return
        if axioms_hold(FiniteTernaryAlgebra(op1, derive_op2(op1), self.case), self.axioms):
            self.survivors.append((self.explored, op1))


def _cube_branch(
    args: tuple[np.ndarray, Kind, str, int, int],
) -> tuple[int, bool, list[tuple[int, np.ndarray]]]:
    squares, case, axioms, budget, first = args
    walker = _CubeWalker(squares, case, axioms, budget)
    walker.run(first)
    return walker.explored, walker.exhausted, walker.survivors


def search_cubes(
    n: int,
    case: Kind = "unoriented",
    axioms: str = "all",
    *,
    budget: int = DEFAULT_CUBE_BUDGET,
    jobs: int = 1,
    strict: bool = False,
) -> SearchResult:
    """Algebras on ``{0..n-1}`` whose ``op1`` is a Latin cube and ``op2`` comes from axiom (3).

    Args:
        n: Carrier size.
        case: Axiom suite to check.
        axioms: ``all`` or ``distributivity``.
        budget: Most cubes to examine; the result is marked incomplete when hit.
        jobs: Worker processes; branches split on the first layer.
        strict: Raise instead of returning a partial result.

    Raises:
        SearchBudgetExceeded: If ``strict`` and the budget runs out.
    """
    _check_options(case, axioms)
    if n < 1:
        raise AlgebraError("carrier size must be at least 1")
    squares = latin_squares(n)
    tasks = [(squares, case, axioms, budget, k) for k in range(len(squares))]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            branches = list(pool.map(_cube_branch, tasks))
    else:
        branches = []
        spent = 0
        for squares_, case_, axioms_, _, first in tasks:
            branch = _cube_branch((squares_, case_, axioms_, budget - spent, first))
            branches.append(branch)
            spent += branch[0]
            if branch[1]:
                break

    # Merge in branch order, cutting each branch at the remaining budget, so
    # the outcome does not depend on the worker count.
    explored = 0
    complete = True
    survivors: list[np.ndarray] = []
    for count, exhausted, found in branches:
        remaining = budget - explored
        survivors.extend(op1 for ordinal, op1 in found if ordinal <= remaining)
        explored += min(count, remaining)
        if exhausted or count > remaining:
            complete = False
            break
    if not complete:
        message = f"cube search for n={n} stopped after {explored} cubes (budget {budget})"
        if strict:
            raise SearchBudgetExceeded(message)
        logger.warning(message)

    hits = tuple(
        SearchHit(
            None,
            None,
            (FiniteTernaryAlgebra(op1, derive_op2(op1), case, f"cube{n}-{k}"),),
        )
        for k, op1 in enumerate(survivors)
    )
    logger.info("cube search (n=%d, %s): %d survivors of %d", n, case, len(hits), explored)
    return SearchResult(case, axioms, (f"n={n}",), hits, explored, complete)


# Classification of the group word pairs


@dataclass(frozen=True)
class Classification:
    """Label rule found for each arc scheme, or ``None`` when none works."""

    pair_id: str
    group: str
    core_rule: LabelRule | None
    knot_rule: LabelRule | None

    @property
    def core_ok(self) -> bool:
        return self.core_rule is not None

    @property
    def knot_ok(self) -> bool:
        return self.knot_rule is not None

    @property
    def kind(self) -> str:
        if self.core_ok:
            return "core"
        if self.knot_ok:
            return "knot"
        return "neither"

    @property
    def rule(self) -> LabelRule | None:
        return self.core_rule or self.knot_rule


def _rule_holds(
    batches: Sequence[tuple[ShadedDiagram, Sequence[Sequence[int]]]],
    g: MagmaTable,
    scheme: Scheme,
    rule: LabelRule,
) -> bool:
    for sd, colorings in batches:
        for coloring in colorings:
            try:
                labeling = arc_labels(sd, coloring, g, scheme, rule)
            except ArcLabelError:
                return False
            if not verify_arc_relations(labeling, g):
                return False
    return True


def _find_rule(
    batches: Sequence[tuple[ShadedDiagram, Sequence[Sequence[int]]]],
    g: MagmaTable,
    scheme: Scheme,
) -> LabelRule | None:
    return next((r for r in label_rules(scheme) if _rule_holds(batches, g, scheme, r)), None)


def classify_group_pair(
    pair_id: str, g: MagmaTable, diagrams: Sequence[ShadedDiagram]
) -> Classification:
    """Which arc-label scheme the region colorings of ``pair_id`` over ``g`` induce.

    A scheme qualifies when one of its label rules labels every arc
    consistently and satisfies the crossing relation for every coloring of
    every diagram. Rules may read the arcs of the mirror image, so the
    answer does not depend on the handedness of the marker convention.
    """
    if pair_id not in GROUP_WORDS:
        raise AlgebraError(f"unknown group word pair '{pair_id}'; choose from g1..g9")
    g.require_group()
    if g.is_commutative:
        raise AlgebraError(f"'{g.name}' is abelian and cannot separate the arc schemes")

    algebra = from_group_word(g, pair_id)
    batches = [
        (sd, enumerate_colorings(sd, algebra, checked=False).colorings or []) for sd in diagrams
    ]
    result = Classification(
        pair_id, g.name, _find_rule(batches, g, "core"), _find_rule(batches, g, "knot")
    )
    logger.debug(
        "%s over %s: %s (%s)",
        pair_id,
        g.name,
        result.kind,
        result.rule.describe() if result.rule else "no rule",
    )
    return result
