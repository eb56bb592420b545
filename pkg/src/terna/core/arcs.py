"""Arc labels induced by region colorings, and arc-coloring oracles.

An arc is a maximal over-strand segment: edges meeting in the over slots of a
crossing belong to the same arc, and every crossingless circle is one arc.
Reading under-strand segments instead gives the arcs of the mirror image.

Schemes:
    knot   labels built from the faces ``u`` and ``v`` where the co-orientation
           of the component points from ``u`` to ``v``; each component is
           co-oriented from white to black at its smallest edge. The default
           rule is ``x = u * v^-1``.
    core   labels built from the white face ``u`` and the black face ``v``.
           The default rule is ``x = u * v``.

At a crossing with under-arcs ``beta`` (incoming) and ``gamma`` (outgoing)
and over-arc ``alpha``, the knot scheme satisfies the Wirtinger relation
``gamma = alpha^e beta alpha^-e`` and the core scheme ``gamma = alpha beta^-1 alpha``.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from terna.core.diagram import Diagram, ShadedDiagram
from terna.core.magma import MagmaTable
from terna.exceptions import ArcLabelError, ColoringError

logger = logging.getLogger(__name__)

Scheme = Literal["knot", "core"]
Theory = Literal["wirtinger", "core"]
Strand = Literal["over", "under"]
Form = Literal["u*v^-1", "u^-1*v", "u*v", "v*u"]

ARC_ORACLE_LIMIT = 1 << 20

FORMS: tuple[Form, ...] = ("u*v^-1", "u^-1*v", "u*v", "v*u")


@dataclass(frozen=True)
class LabelRule:
    """How an edge label is formed from the two faces beside it.

    Attributes:
        form: Word in the two face colors.
        invert_white: Replace white face colors by their inverses first.
        strand: Which strand segments form the arcs.
        conjugation: ``-1`` swaps the Wirtinger exponent convention.
    """

    form: Form
    invert_white: bool = False
    strand: Strand = "over"
    conjugation: int = 1

    def describe(self) -> str:
        parts = [f"x = {self.form}"]
        if self.invert_white:
            parts.append("white inverted")
        if self.strand == "under":
            parts.append("under-strand arcs")
        if self.conjugation < 0:
            parts.append("reversed conjugation")
        return ", ".join(parts)


DEFAULT_RULES: dict[str, LabelRule] = {
    "knot": LabelRule("u*v^-1"),
    "core": LabelRule("u*v"),
}


def label_rules(scheme: Scheme) -> tuple[LabelRule, ...]:
    """Every rule tried for ``scheme``, the default first.

    Core labels are insensitive to inverting one color class (the forms
    already cover it) and to the conjugation convention, so only knot rules
    vary those.
    """
    if scheme == "core":
        rules = [LabelRule(f, False, s) for s, f in itertools.product(("over", "under"), FORMS)]
    else:
        rules = [
            LabelRule(f, w, s, c)
            for s, w, f, c in itertools.product(("over", "under"), (False, True), FORMS, (1, -1))
        ]
    default = DEFAULT_RULES[scheme]
    return (default, *(r for r in rules if r != default))


@dataclass(frozen=True)
class Arcs:
    """Arc of every edge; circles take the ids after the edge arcs."""

    of_edge: dict[int, int]
    count: int
    circle_arcs: tuple[int, ...]


def find_arcs(d: Diagram, strand: Strand = "over") -> Arcs:
    parent = {e: e for e in d.edges}
    lo, hi = (1, 3) if strand == "over" else (0, 2)

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in d.crossings:
        a, b = find(c[lo]), find(c[hi])
        if a != b:
            parent[max(a, b)] = min(a, b)
    roots = sorted({find(e) for e in d.edges})
    index = {r: i for i, r in enumerate(roots)}
    of_edge = {e: index[find(e)] for e in d.edges}
    circles = tuple(range(len(roots), len(roots) + d.circles))
    return Arcs(of_edge, len(roots) + d.circles, circles)


@dataclass(frozen=True)
class CrossingArcs:
    """Arcs at a crossing under a chosen direction of every component.

    For under-strand arcs the roles swap: ``over`` holds the under-strand
    and the sign is that of the mirror crossing.
    """

    under_in: int
    under_out: int
    over: int
    sign: int


def _component_flips(sd: ShadedDiagram) -> list[bool]:
    """Reverse a component when the face left of its smallest edge is white."""
    d = sd.diagram
    flips = []
    for trace in d.traces:
        edge = min(step.edge for step in trace)
        left, _ = d.edge_sides(edge)
        flips.append(sd.is_white(left))
    return flips


def crossing_arcs(
    d: Diagram,
    arcs: Arcs,
    flips: Sequence[bool] | None = None,
    strand: Strand = "over",
) -> list[CrossingArcs]:
    """Incoming/outgoing under-arcs, over-arc and sign per crossing.

    ``flips[k]`` reverses component ``k``; by default the diagram's own
    directions are used.
    """
    component = {step.edge: k for k, trace in enumerate(d.traces) for step in trace}
    flips = flips or [False] * len(d.traces)
    result = []
    for i, c in enumerate(d.crossings):
        under_in = 2 if flips[component[c[0]]] else 0
        over_in = d.over_in_slot(i)
        if flips[component[c[1]]]:
            over_in = (over_in + 2) % 4
        sign = 1 if over_in == (under_in + 1) % 4 else -1
        if strand == "under":
            under_in, sign = over_in, -sign
        result.append(
            CrossingArcs(
                under_in=arcs.of_edge[c[under_in]],
                under_out=arcs.of_edge[c[(under_in + 2) % 4]],
                over=arcs.of_edge[c[1] if strand == "over" else c[0]],
                sign=sign,
            )
        )
    return result


@dataclass(frozen=True)
class ArcLabeling:
    scheme: Scheme
    labels: tuple[int, ...]
    crossings: tuple[CrossingArcs, ...]
    rule: LabelRule


def arc_labels(
    sd: ShadedDiagram,
    coloring: Sequence[int],
    group: MagmaTable,
    scheme: Scheme,
    rule: LabelRule | None = None,
) -> ArcLabeling:
    """Label every arc from the colors of the faces beside it.

    Raises:
        ArcLabelError: If two edges of one arc produce different labels.
    """
    if scheme not in ("knot", "core"):
        raise ColoringError(f"unknown arc scheme '{scheme}'")
    rule = rule or DEFAULT_RULES[scheme]
    d = sd.diagram
    arcs = find_arcs(d, rule.strand)
    flips = _component_flips(sd)
    component = {step.edge: k for k, trace in enumerate(d.traces) for step in trace}
    mul, inv = group.mul, group.inverse
    labels: list[int | None] = [None] * arcs.count

    def color(face: int) -> int:
        value = int(coloring[face])
        return int(inv[value]) if rule.invert_white and sd.is_white(face) else value

    def combine(u: int, v: int) -> int:
        x, y = color(u), color(v)
        if rule.form == "u*v^-1":
            return int(mul[x, inv[y]])
        if rule.form == "u^-1*v":
            return int(mul[inv[x], y])
        if rule.form == "u*v":
            return int(mul[x, y])
        return int(mul[y, x])

    def put(arc: int, value: int, where: str) -> None:
        if labels[arc] is None:
            labels[arc] = value
        elif labels[arc] != value:
            raise ArcLabelError(
                f"{scheme} scheme gives arc {arc} two labels "
                f"{group.label(labels[arc])} and {group.label(value)} at {where}"
            )

    for edge in d.edges:
        left, right = d.edge_sides(edge)
        if scheme == "knot":
            u, v = (left, right) if flips[component[edge]] else (right, left)
        else:
            u, v = (left, right) if sd.is_white(left) else (right, left)
        put(arcs.of_edge[edge], combine(u, v), f"edge {edge}")
    for k, arc in enumerate(arcs.circle_arcs):
        disc = next(f.id for f in sd.faces if f.circle == k)
        outer = sd.outer_face
        white, black = (outer, disc) if sd.is_white(outer) else (disc, outer)
        put(arc, combine(white, black), f"circle {k}")
    return ArcLabeling(
        scheme,
        tuple(int(x) for x in labels if x is not None),
        tuple(crossing_arcs(d, arcs, flips, rule.strand)),
        rule,
    )


def _relation_holds(
    group: MagmaTable,
    scheme: Scheme | Theory,
    alpha: np.ndarray,
    beta: np.ndarray,
    gamma: np.ndarray,
    sign: int,
) -> np.ndarray:
    mul, inv = group.mul, group.inverse
    if scheme == "core":
        return mul[mul[alpha, inv[beta]], alpha] == gamma
    if sign > 0:
        return mul[mul[alpha, beta], inv[alpha]] == gamma
    return mul[mul[inv[alpha], beta], alpha] == gamma


def verify_arc_relations(labeling: ArcLabeling, group: MagmaTable) -> bool:
    """Wirtinger relations (knot scheme) or ``gamma = alpha beta^-1 alpha`` (core)."""
    x = np.asarray(labeling.labels, dtype=np.int64)
    flip = labeling.rule.conjugation
    return all(
        bool(
            _relation_holds(
                group,
                labeling.scheme,
                x[c.over],
                x[c.under_in],
                x[c.under_out],
                c.sign * flip,
            )
        )
        for c in labeling.crossings
    )


def count_arc_colorings(d: Diagram, group: MagmaTable, theory: Theory) -> int:
    """Exhaustive count of arc assignments satisfying every crossing relation."""
    if theory == "wirtinger" and not d.oriented:
        raise ColoringError("Wirtinger arc colorings need an oriented diagram")
    if theory not in ("wirtinger", "core"):
        raise ColoringError(f"unknown arc theory '{theory}'")
    arcs = find_arcs(d)
    n = group.n
    if n**arcs.count > ARC_ORACLE_LIMIT:
        raise ColoringError(f"{n}^{arcs.count} arc assignments exceed {ARC_ORACLE_LIMIT}")
    idx = np.arange(n**arcs.count)
    powers = n ** np.arange(arcs.count - 1, -1, -1)
    grid = (idx[:, None] // powers[None, :]) % n
    ok = np.ones(len(idx), dtype=bool)
    for c in crossing_arcs(d, arcs):
        ok &= _relation_holds(
            group, theory, grid[:, c.over], grid[:, c.under_in], grid[:, c.under_out], c.sign
        )
    count = int(ok.sum())
    logger.debug("%s arc colorings of %s over %s: %d", theory, d.name, group.name, count)
    return count
