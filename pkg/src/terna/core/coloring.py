"""Ternary region colorings of shaded diagrams.

Every quadrant ``h`` of a crossing carries a head relation ``h = T(x, y, z)``
whose inputs are the other three quadrants, read counterclockwise starting
just after ``h`` when ``h`` is a marker quadrant and clockwise starting just
before ``h`` otherwise. Unoriented algebras use ``op1`` (W) on white heads and
``op2`` (B) on black ones; oriented algebras use ``op1`` (C) when "head is a
marker" agrees with "crossing is positive", else ``op2`` (S).

A coloring must satisfy all four head relations at every crossing. For
axiom-passing algebras any one of them implies the others.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from terna.core.algebra import FiniteTernaryAlgebra, check_axioms
from terna.core.diagram import ShadedDiagram
from terna.exceptions import AxiomFailure, ColoringError, KindMismatchError

logger = logging.getLogger(__name__)

# Largest n ** faces the exhaustive oracle will enumerate.
ORACLE_LIMIT = 4**9


@dataclass(frozen=True)
class CrossingConstraint:
    """The four head relations at one crossing.

    ``faces[q]`` is the face in quadrant ``q``; head ``q`` reads
    ``faces[inputs[q][k]]`` and applies ``op1`` when ``ops[q] == 0``, else ``op2``.
    """

    crossing: int
    faces: tuple[int, int, int, int]
    markers: tuple[int, int]
    ops: tuple[int, int, int, int]
    inputs: tuple[tuple[int, int, int], ...]

    def relation(self, q: int, names: tuple[str, str], face_name: str = "r") -> str:
        inputs = ",".join(f"{face_name}{self.faces[k]}" for k in self.inputs[q])
        return f"{face_name}{self.faces[q]} = {names[self.ops[q]]}({inputs})"


def head_inputs(q: int, markers: Sequence[int]) -> tuple[int, int, int]:
    if q in markers:
        return (q + 1) % 4, (q + 2) % 4, (q + 3) % 4
    return (q - 1) % 4, (q - 2) % 4, (q - 3) % 4


def build_constraints(
    sd: ShadedDiagram, kind: str = "unoriented"
) -> list[CrossingConstraint]:
    """One constraint per crossing for algebras of ``kind``."""
    if kind == "oriented" and sd.signs is None:
        raise KindMismatchError("oriented algebras need an oriented diagram (crossing signs)")
    constraints = []
    for i, faces in enumerate(sd.corner_faces):
        markers = sd.markers[i]
        ops = []
        for q in range(4):
            if kind == "oriented":
                assert sd.signs is not None
                ops.append(0 if (q in markers) == (sd.signs[i] > 0) else 1)
            else:
                ops.append(0 if sd.is_white(faces[q]) else 1)
        constraints.append(
            CrossingConstraint(
                crossing=i,
                faces=faces,
                markers=(markers[0], markers[1]),
                ops=(ops[0], ops[1], ops[2], ops[3]),
                inputs=tuple(head_inputs(q, markers) for q in range(4)),
            )
        )
    return constraints


@dataclass(frozen=True)
class Violation:
    crossing: int
    quadrant: int
    face: int
    expected: int
    actual: int

    def __str__(self) -> str:
        return (
            f"crossing {self.crossing}, quadrant {self.quadrant}: face {self.face} "
            f"is {self.actual} but its head relation gives {self.expected}"
        )


@dataclass(frozen=True)
class ColoringReport:
    """Result of counting (and optionally listing) colorings."""

    count: int
    algebra: str
    fingerprint: str
    colorings: list[tuple[int, ...]] | None = None
    checked: bool = True


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    violation: Violation | None = None


def _first_violation(
    constraints: Sequence[CrossingConstraint],
    ops: tuple[np.ndarray, np.ndarray],
    values: Sequence[int],
) -> Violation | None:
    for con in constraints:
        for q in range(4):
            x, y, z = (values[con.faces[k]] for k in con.inputs[q])
            expected = int(ops[con.ops[q]][x, y, z])
            actual = values[con.faces[q]]
            if expected != actual:
                return Violation(con.crossing, q, con.faces[q], expected, actual)
    return None


def verify_coloring(
    sd: ShadedDiagram, a: FiniteTernaryAlgebra, assignment: Sequence[int | None]
) -> VerifyResult:
    """Check every head relation at every crossing."""
    if len(assignment) != sd.face_count:
        raise ColoringError(
            f"assignment has {len(assignment)} values for {sd.face_count} faces"
        )
    missing = [f for f, v in enumerate(assignment) if v is None or v < 0]
    if missing:
        raise ColoringError(f"assignment leaves faces {missing} uncolored")
    values = [int(v) for v in assignment if v is not None]
    if max(values) >= a.n:
        raise ColoringError(f"assignment uses elements outside 0..{a.n - 1}")
    violation = _first_violation(build_constraints(sd, a.kind), (a.op1, a.op2), values)
    return VerifyResult(violation is None, violation)


# Solver


@dataclass
class _Solver:
    """Backtracking over faces with forcing through single unknown quadrants."""

    n: int
    face_count: int
    constraints: list[CrossingConstraint]
    ops: tuple[np.ndarray, np.ndarray]
    collect: bool = False
    values: list[int] = field(init=False)
    order: list[int] = field(init=False)
    by_face: list[list[CrossingConstraint]] = field(init=False)
    count: int = field(init=False, default=0)
    found: list[tuple[int, ...]] = field(init=False, default_factory=list)

    def __post_init__(self) -> None:
        self.values = [-1] * self.face_count
        self.by_face = [[] for _ in range(self.face_count)]
        incidence = [0] * self.face_count
        for con in self.constraints:
            for f in set(con.faces):
                self.by_face[f].append(con)
            for f in con.faces:
                incidence[f] += 1
        self.order = sorted(range(self.face_count), key=lambda f: (-incidence[f], f))

    def _holds(self, con: CrossingConstraint) -> bool:
        v = self.values
        for q in range(4):
            x, y, z = (v[con.faces[k]] for k in con.inputs[q])
            if self.ops[con.ops[q]][x, y, z] != v[con.faces[q]]:
                return False
        return True

    def _inspect(self, con: CrossingConstraint) -> bool | tuple[int, int]:
        """False on conflict, a forced ``(face, value)`` or True."""
        v = self.values
        unknown = {f for f in con.faces if v[f] < 0}
        if not unknown:
            return self._holds(con)
        if len(unknown) == 1:
            (g,) = unknown
            quadrants = [q for q in range(4) if con.faces[q] == g]
            if len(quadrants) == 1:
                q = quadrants[0]
                x, y, z = (v[con.faces[k]] for k in con.inputs[q])
                return g, int(self.ops[con.ops[q]][x, y, z])
        return True

    def _assign(self, face: int, value: int, trail: list[int]) -> bool:
        pending = [(face, value)]
        while pending:
            f, val = pending.pop()
            if self.values[f] >= 0:
                if self.values[f] != val:
                    return False
                continue
            self.values[f] = val
            trail.append(f)
            for con in self.by_face[f]:
                result = self._inspect(con)
                if result is False:
                    return False
                if isinstance(result, tuple):
                    pending.append(result)
        return True

    def _undo(self, trail: list[int]) -> None:
        for f in trail:
            self.values[f] = -1

    def run(self, prefix: Sequence[int] = ()) -> None:
        """Search below a fixed assignment of the first ``len(prefix)`` faces in order."""
        trail: list[int] = []
        ok = all(self._assign(self.order[k], val, trail) for k, val in enumerate(prefix))
        if ok:
            self._search()
        self._undo(trail)

    def _search(self) -> None:
        face = next((f for f in self.order if self.values[f] < 0), None)
        if face is None:
            self.count += 1
            if self.collect:
                self.found.append(tuple(self.values))
            return
        for value in range(self.n):
            trail: list[int] = []
            if self._assign(face, value, trail):
                self._search()
            self._undo(trail)


def _solve_branch(
    args: tuple[int, int, list[CrossingConstraint], tuple[np.ndarray, np.ndarray], bool, int],
) -> tuple[int, list[tuple[int, ...]]]:
    n, face_count, constraints, ops, collect, first = args
    solver = _Solver(n, face_count, constraints, ops, collect)
    solver.run((first,))
    return solver.count, solver.found


def _solve(
    sd: ShadedDiagram, a: FiniteTernaryAlgebra, collect: bool, jobs: int
) -> tuple[int, list[tuple[int, ...]]]:
    constraints = build_constraints(sd, a.kind)
    ops = (a.op1, a.op2)
    if jobs <= 1 or not constraints:
        solver = _Solver(a.n, sd.face_count, constraints, ops, collect)
        solver.run()
        return solver.count, sorted(solver.found)
    tasks = [(a.n, sd.face_count, constraints, ops, collect, v) for v in range(a.n)]
    count = 0
    found: list[tuple[int, ...]] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for branch_count, branch_found in pool.map(_solve_branch, tasks):
            count += branch_count
            found.extend(branch_found)
    return count, sorted(found)


def _require_axioms(a: FiniteTernaryAlgebra) -> None:
    report = check_axioms(a)
    if not report.passed:
        failed = ", ".join(f"({r.number})" for r in report.failures)
        raise AxiomFailure(
            f"'{a.name}' fails {a.kind} axioms {failed}; use --unchecked to count anyway",
            report,
        )


def count_colorings(
    sd: ShadedDiagram, a: FiniteTernaryAlgebra, *, checked: bool = True, jobs: int = 1
) -> int:
    """Number of face assignments satisfying every head relation."""
    if checked:
        _require_axioms(a)
    count, _ = _solve(sd, a, collect=False, jobs=jobs)
    logger.debug("%s on %s: %d colorings", a.name, sd.diagram.name or "diagram", count)
    return count


def enumerate_colorings(
    sd: ShadedDiagram, a: FiniteTernaryAlgebra, *, checked: bool = True, jobs: int = 1
) -> ColoringReport:
    """All colorings in lexicographic order of the face-value tuple."""
    if checked:
        _require_axioms(a)
    count, found = _solve(sd, a, collect=True, jobs=jobs)
    return ColoringReport(count, a.name, sd.diagram.fingerprint, found, checked)


def oracle_colorings(sd: ShadedDiagram, a: FiniteTernaryAlgebra) -> np.ndarray:
    """Every valid coloring by brute force over all ``n ** faces`` assignments."""
    faces = sd.face_count
    if a.n**faces > ORACLE_LIMIT:
        raise ColoringError(f"{a.n}^{faces} assignments exceed the oracle limit {ORACLE_LIMIT}")
    idx = np.arange(a.n**faces)
    powers = a.n ** np.arange(faces - 1, -1, -1)
    grid = (idx[:, None] // powers[None, :]) % a.n
    ok = np.ones(len(idx), dtype=bool)
    ops = (a.op1, a.op2)
    for con in build_constraints(sd, a.kind):
        for q in range(4):
            x, y, z = (grid[:, con.faces[k]] for k in con.inputs[q])
            ok &= ops[con.ops[q]][x, y, z] == grid[:, con.faces[q]]
    return grid[ok]


def oracle_count(sd: ShadedDiagram, a: FiniteTernaryAlgebra) -> int:
    return int(len(oracle_colorings(sd, a)))
