"""Reidemeister moves as PD rewrites.

Moves only ever insert (R1, R2) or slide (R3); they exist to produce pairs
of equivalent diagrams for invariance checks. Inserted pieces of a split edge
``e`` carry provisional labels ``(e, k)`` ordered along the edge direction and
are renumbered by :func:`terna.core.diagram.relabel_by_traversal`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Literal

from terna.core.diagram import Arm, Diagram, relabel_by_traversal
from terna.exceptions import MoveError

logger = logging.getLogger(__name__)

MoveKind = Literal["R1", "R2", "R3"]

R1_VARIANTS = ("right-under", "right-over", "left-under", "left-over")
R2_VARIANTS = ("over", "under")


@dataclass(frozen=True)
class MoveSpec:
    """A move and its site.

    R1: ``edge`` (``None`` on a crossingless diagram). R2: ``face`` with
    ``edges = (a, b)``. R3: triangular ``face``.
    """

    kind: MoveKind
    edge: int | None = None
    face: int | None = None
    edges: tuple[int, ...] = field(default_factory=tuple)
    variant: str = ""


def _split(d: Diagram) -> list[list[tuple[int, int]]]:
    return [[(e, 0) for e in c] for c in d.crossings]


def apply_r1(d: Diagram, edge: int | None = None, variant: str = "right-under") -> Diagram:
    """Insert a kink into ``edge``.

    ``variant`` is ``<side>-<first>``: the side of the strand the loop lies on
    and whether the strand first passes under or over itself.
    """
    if variant not in R1_VARIANTS:
        raise MoveError(f"unknown R1 variant '{variant}'; choose from {', '.join(R1_VARIANTS)}")
    side, first = variant.split("-")
    crossings = _split(d)
    circles = d.circles
    if edge is None:
        if d.crossings or d.circles == 0:
            raise MoveError("R1 without an edge is only defined on a crossingless circle")
        circles -= 1
        e_in = e_out = (1, 0)
        loop = (1, 1)
    else:
        if edge not in d.arms:
            raise MoveError(f"edge {edge} does not exist")
        step = d.directions[edge]
        e_in, loop, e_out = (edge, 0), (edge, 1), (edge, 2)
        crossings[step.tail[0]][step.tail[1]] = e_in
        crossings[step.head[0]][step.head[1]] = e_out
    if side == "right":
        # Counterclockwise: in1, in2, out1, out2.
        new = [e_in, loop, loop, e_out] if first == "under" else [loop, loop, e_out, e_in]
    else:
        # Counterclockwise: in1, out2, out1, in2.
        new = [e_in, e_out, loop, loop] if first == "under" else [loop, e_in, e_out, loop]
    crossings.append(new)
    logger.debug("R1 on edge %s (%s)", edge, variant)
    return relabel_by_traversal(crossings, circles=circles, oriented=d.oriented, name=d.name)


def r2_sites(d: Diagram) -> list[tuple[int, int, int]]:
    """All (face, edge_a, edge_b) with distinct edges on the face boundary."""
    sites = []
    for face in d.faces:
        edges = sorted(set(face.boundary_edges))
        for a in edges:
            for b in edges:
                if a != b and _side(d, a, face.id) and _side(d, b, face.id):
                    sites.append((face.id, a, b))
    return sites


def _side(d: Diagram, edge: int, face: int) -> int:
    """+1 if ``face`` lies left of ``edge``, -1 if right, 0 if both or neither."""
    left, right = d.edge_sides(edge)
    if left == right:
        return 0
    return 1 if face == left else -1 if face == right else 0


def apply_r2(
    d: Diagram, face: int, edge_a: int, edge_b: int, variant: str = "over"
) -> Diagram:
    """Push a finger of ``edge_a`` across ``face`` over (or under) ``edge_b``.

    Locally, with ``face`` between them, A runs along the top and B along the
    bottom; the finger dips from A through B at P (left) and Q (right).
    Each new crossing is laid out counterclockwise as (E, N, W, S).
    """
    if variant not in R2_VARIANTS:
        raise MoveError(f"unknown R2 variant '{variant}'; choose 'over' or 'under'")
    if not d.crossings:
        raise MoveError("R2 needs at least one crossing")
    if face < 0 or face >= len(d.faces):
        raise MoveError(f"face {face} does not exist")
    if edge_a == edge_b:
        raise MoveError("R2 needs two distinct edges")
    boundary = d.faces[face].boundary_edges
    for e in (edge_a, edge_b):
        if e not in d.arms:
            raise MoveError(f"edge {e} does not exist")
        if e not in boundary:
            raise MoveError(f"edges {edge_a} and {edge_b} are not both on face {face}")
    sigma_a = _side(d, edge_a, face)
    sigma_b = _side(d, edge_b, face)
    if not sigma_a or not sigma_b:
        raise MoveError(f"face {face} lies on both sides of one of the edges")

    crossings = _split(d)
    a0, a1, a2 = (edge_a, 0), (edge_a, 1), (edge_a, 2)
    b0, b1, b2 = (edge_b, 0), (edge_b, 1), (edge_b, 2)
    for edge, first, last in ((edge_a, a0, a2), (edge_b, b0, b2)):
        step = d.directions[edge]
        crossings[step.tail[0]][step.tail[1]] = first
        crossings[step.head[0]][step.head[1]] = last

    a_east = sigma_a < 0  # face on A's right: A runs left to right on top
    b_east = sigma_b > 0  # face on B's left: B runs left to right below
    a_top_left, a_top_right = (a0, a2) if a_east else (a2, a0)
    b_left, b_right = (b0, b2) if b_east else (b2, b0)
    p = [b1, a_top_left, b_left, a1]
    q = [b_right, a_top_right, b1, a1]
    if variant == "over":
        p_in = 2 if b_east else 0
        q_in = 2 if b_east else 0
    else:
        p_in = 1 if a_east else 3
        q_in = 3 if a_east else 1
    crossings.append(p[p_in:] + p[:p_in])
    crossings.append(q[q_in:] + q[:q_in])
    logger.debug("R2 on face %d pushing %d %s %d", face, edge_a, variant, edge_b)
    return relabel_by_traversal(crossings, circles=d.circles, oriented=d.oriented, name=d.name)


@dataclass(frozen=True)
class _Triangle:
    corners: tuple[tuple[int, int], ...]
    edges: tuple[int, ...]


def _triangle(d: Diagram, face: int) -> _Triangle:
    if face < 0 or face >= len(d.faces):
        raise MoveError(f"face {face} does not exist")
    f = d.faces[face]
    if len(f.corners) != 3 or len({i for i, _ in f.corners}) != 3:
        raise MoveError(f"face {face} is not a triangle bounded by three crossings")
    return _Triangle(f.corners, f.boundary_edges)


def _r3_top_strand(d: Diagram, tri: _Triangle) -> int | None:
    """Triangle edge whose strand is over at both of its triangle crossings."""
    for e in tri.edges:
        ends = d.arms[e]
        if all(slot % 2 == 1 for _, slot in ends):
            return e
    return None


def r3_sites(d: Diagram) -> list[int]:
    """Faces where a third Reidemeister move can be applied."""
    sites = []
    for f in d.faces:
        try:
            tri = _triangle(d, f.id)
        except MoveError:
            continue
        if _r3_top_strand(d, tri) is not None:
            sites.append(f.id)
    return sites


def apply_r3(d: Diagram, face: int) -> Diagram:
    """Slide a strand across the opposite crossing of a triangular face.

    Every triangle crossing keeps its strands, its over/under data and the
    cyclic position of its arms; in each strand's two arms the triangle edge
    and the outer edge swap, the outer edge coming from that strand's other
    triangle crossing. Edge numbering along components is preserved.
    """
    tri = _triangle(d, face)
    if _r3_top_strand(d, tri) is None:
        raise MoveError(f"face {face} has no strand passing over both others")
    crossings = [list(c) for c in d.crossings]
    updates: dict[Arm, int] = {}
    for e in tri.edges:
        (i, s), (j, t) = d.arms[e]
        outer_i = d.label((i, s + 2))
        outer_j = d.label((j, t + 2))
        updates[(i, s)] = outer_j
        updates[(i, (s + 2) % 4)] = e
        updates[(j, t)] = outer_i
        updates[(j, (t + 2) % 4)] = e
    for (i, s), e in updates.items():
        crossings[i][s] = e
    logger.debug("R3 on face %d", face)
    return Diagram(
        tuple((c[0], c[1], c[2], c[3]) for c in crossings),
        circles=d.circles,
        oriented=d.oriented,
        name=d.name,
    )


def apply_move(d: Diagram, spec: MoveSpec) -> Diagram:
    if spec.kind == "R1":
        return apply_r1(d, spec.edge, spec.variant or "right-under")
    if spec.kind == "R2":
        if spec.face is None or len(spec.edges) != 2:
            raise MoveError("R2 needs a face and two edges")
        return apply_r2(d, spec.face, spec.edges[0], spec.edges[1], spec.variant or "over")
    if spec.kind == "R3":
        if spec.face is None:
            raise MoveError("R3 needs a triangular face")
        if spec.variant:
            raise MoveError(f"R3 has no variants, got '{spec.variant}'")
        return apply_r3(d, spec.face)
    raise MoveError(f"unknown move kind '{spec.kind}'")


def first_site(d: Diagram, kind: str, variant: str = "") -> MoveSpec:
    """The move of ``kind`` at the lowest available site."""
    if kind == "R1":
        return MoveSpec("R1", edge=min(d.edges) if d.crossings else None, variant=variant)
    if kind == "R2":
        sites = r2_sites(d)
        if not sites:
            raise MoveError(f"no R2 site in '{d.name or 'diagram'}'")
        face, a, b = sites[0]
        return MoveSpec("R2", face=face, edges=(a, b), variant=variant)
    if kind == "R3":
        faces = r3_sites(d)
        if not faces:
            raise MoveError(f"no R3 site in '{d.name or 'diagram'}'")
        return MoveSpec("R3", face=faces[0], variant=variant)
    raise MoveError(f"unknown move kind '{kind}'")
