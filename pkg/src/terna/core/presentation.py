"""Finite presentations read off a diagram.

Text grammar::

    gen r0 r1 r2
    rel r0 = W(r2,r0,r1)
    rel r0 = r2*r0^-1*r1
    rel r1 = 1
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Literal, Sequence

import numpy as np
from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.domains import ZZ

from terna.core.algebra import FiniteTernaryAlgebra
from terna.core.arcs import crossing_arcs, find_arcs
from terna.core.coloring import build_constraints
from terna.core.diagram import Diagram, ShadedDiagram
from terna.core.magma import MagmaTable
from terna.exceptions import ColoringError, KindMismatchError

logger = logging.getLogger(__name__)

Style = Literal["ternary-unoriented", "ternary-oriented", "dehn", "wirtinger", "core"]

SOLUTION_LIMIT = 1 << 20

# A group word as (generator index, exponent) factors.
Factors = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class GroupRelation:
    lhs: Factors
    rhs: Factors


@dataclass(frozen=True)
class TernaryRelation:
    head: int
    op: int
    args: tuple[int, int, int]


Relation = GroupRelation | TernaryRelation


@dataclass(frozen=True)
class Presentation:
    style: Style
    generators: tuple[str, ...]
    relations: tuple[Relation, ...] = field(default_factory=tuple)
    op_names: tuple[str, str] = ("W", "B")

    @property
    def is_group(self) -> bool:
        return not self.style.startswith("ternary")

    def _word(self, factors: Factors) -> str:
        if not factors:
            return "1"
        return "*".join(
            self.generators[g] + ("" if e == 1 else "^-1") for g, e in factors
        )

    def relation_text(self, rel: Relation) -> str:
        if isinstance(rel, TernaryRelation):
            args = ",".join(self.generators[g] for g in rel.args)
            return f"{self.generators[rel.head]} = {self.op_names[rel.op]}({args})"
        return f"{self._word(rel.lhs)} = {self._word(rel.rhs)}"

    def text(self) -> str:
        lines = ["gen " + " ".join(self.generators)]
        lines += [f"rel {self.relation_text(r)}" for r in self.relations]
        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        return {
            "style": self.style,
            "generators": list(self.generators),
            "relations": [self.relation_text(r) for r in self.relations],
        }


def _head_quadrant(faces: Sequence[int], head: int | None) -> int:
    """Quadrant of the lowest face id unless a fixed quadrant is requested."""
    if head is not None:
        return head % 4
    return list(faces).index(min(faces))


def emit_ternary(
    sd: ShadedDiagram, case: str = "unoriented", head: int | None = None
) -> Presentation:
    """One generator per face and one head relation per crossing.

    Args:
        sd: The shaded diagram.
        case: ``unoriented`` (W, B) or ``oriented`` (C, S).
        head: Quadrant used as head at every crossing; by default the
            quadrant holding the lowest face id.
    """
    if case not in ("unoriented", "oriented"):
        raise KindMismatchError(f"unknown presentation case '{case}'")
    relations = []
    for con in build_constraints(sd, case):
        q = _head_quadrant(con.faces, head)
        args = tuple(con.faces[k] for k in con.inputs[q])
        relations.append(TernaryRelation(con.faces[q], con.ops[q], (args[0], args[1], args[2])))
    return Presentation(
        style="ternary-oriented" if case == "oriented" else "ternary-unoriented",
        generators=tuple(f"r{f.id}" for f in sd.faces),
        relations=tuple(relations),
        op_names=("C", "S") if case == "oriented" else ("W", "B"),
    )


def emit_dehn(sd: ShadedDiagram) -> Presentation:
    """Region generators, ``h = x*y^-1*z`` per crossing and ``outer = 1``."""
    relations: list[Relation] = []
    for con in build_constraints(sd, "unoriented"):
        q = _head_quadrant(con.faces, None)
        x, y, z = (con.faces[k] for k in con.inputs[q])
        relations.append(GroupRelation(((con.faces[q], 1),), ((x, 1), (y, -1), (z, 1))))
    relations.append(GroupRelation(((sd.outer_face, 1),), ()))
    return Presentation("dehn", tuple(f"r{f.id}" for f in sd.faces), tuple(relations))


def emit_arc_presentation(d: Diagram, theory: str = "wirtinger") -> Presentation:
    """One generator per arc and one relation per crossing."""
    if theory not in ("wirtinger", "core"):
        raise ColoringError(f"unknown arc theory '{theory}'")
    if theory == "wirtinger" and not d.oriented:
        raise ColoringError("the Wirtinger presentation needs an oriented diagram")
    arcs = find_arcs(d)
    relations: list[Relation] = []
    for c in crossing_arcs(d, arcs):
        if theory == "core":
            rhs: Factors = ((c.over, 1), (c.under_in, -1), (c.over, 1))
        else:
            rhs = ((c.over, c.sign), (c.under_in, 1), (c.over, -c.sign))
        relations.append(GroupRelation(((c.under_out, 1),), rhs))
    style: Style = "core" if theory == "core" else "wirtinger"
    return Presentation(style, tuple(f"x{k}" for k in range(arcs.count)), tuple(relations))


# Checks


@dataclass(frozen=True)
class Abelianization:
    """``Z^free_rank`` plus the cyclic torsion factors."""

    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def relation_matrix(p: Presentation) -> list[list[int]]:
    """Exponent sums of ``lhs * rhs^-1`` per relation."""
    if not p.is_group:
        raise ColoringError("relation matrices are defined for group presentations only")
    rows = []
    for rel in p.relations:
        assert isinstance(rel, GroupRelation)
        row = [0] * len(p.generators)
        for g, e in rel.lhs:
            row[g] += e
        for g, e in rel.rhs:
            row[g] -= e
        rows.append(row)
    return rows


def abelianization(p: Presentation) -> Abelianization:
    """Abelianized group from the integer Smith normal form of the relation matrix."""
    rows = [r for r in relation_matrix(p) if any(r)]
    factors: list[int] = []
    if rows:
        factors = [abs(int(f)) for f in invariant_factors(Matrix(rows), domain=ZZ) if int(f)]
    return Abelianization(
        free_rank=len(p.generators) - len(factors),
        torsion=tuple(f for f in factors if f > 1),
    )


def _word_value(group: MagmaTable, factors: Factors, grid: np.ndarray) -> np.ndarray:
    assert group.identity is not None
    acc = np.full(grid.shape[0], group.identity, dtype=np.int64)
    for g, e in factors:
        x = grid[:, g] if e == 1 else group.inverse[grid[:, g]]
        acc = group.mul[acc, x]
    return acc


def count_solutions(p: Presentation, structure: MagmaTable | FiniteTernaryAlgebra) -> int:
    """Assignments of generators to elements satisfying every relation."""
    n = structure.n
    gens = len(p.generators)
    if n**gens > SOLUTION_LIMIT:
        raise ColoringError(f"{n}^{gens} assignments exceed {SOLUTION_LIMIT}")
    idx = np.arange(n**gens)
    powers = n ** np.arange(gens - 1, -1, -1)
    grid = (idx[:, None] // powers[None, :]) % n
    ok = np.ones(len(idx), dtype=bool)
    for rel in p.relations:
        if isinstance(rel, TernaryRelation):
            if not isinstance(structure, FiniteTernaryAlgebra):
                raise ColoringError("ternary presentations are solved over ternary algebras")
            op = structure.op1 if rel.op == 0 else structure.op2
            x, y, z = (grid[:, g] for g in rel.args)
            ok &= op[x, y, z] == grid[:, rel.head]
        else:
            if not isinstance(structure, MagmaTable):
                raise ColoringError("group presentations are solved over groups")
            ok &= _word_value(structure, rel.lhs, grid) == _word_value(structure, rel.rhs, grid)
    return int(ok.sum())
