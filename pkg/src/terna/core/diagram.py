"""Planar diagram codes, regions, checkerboard shading and crossing signs.

PD convention:
    ``X(a,b,c,d)`` lists the four edges met at a crossing counterclockwise,
    starting with the incoming under-strand, so the under-strand runs a -> c.
    Arm ``i`` is slot ``i`` of the tuple; quadrant ``i`` is the corner lying
    counterclockwise between arm ``i`` and arm ``i + 1`` (mod 4).

Markers:
    The positive-marker quadrants are the ones immediately counterclockwise of
    the two over arms. With the under-strand in slots 0 and 2 this is always
    quadrants 1 and 3. Read together with the relation layout in
    ``terna.core.coloring`` this reproduces the knot-group and core-group arc
    relations; the mirror convention is pinned by tests, not by a picture.

Signs:
    A crossing is positive when the over-strand enters through slot 1, i.e.
    runs b -> d, and negative when it enters through slot 3.
"""

from __future__ import annotations

import hashlib
import logging
import re
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Sequence

from terna.exceptions import DiagramError

logger = logging.getLogger(__name__)

Arm = tuple[int, int]
Corner = tuple[int, int]
Crossing = tuple[int, int, int, int]

MARKER_QUADRANTS = (1, 3)
WHITE = "white"
BLACK = "black"

_CROSSING_RE = re.compile(r"X\s*[(\[]([^)\]]*)[)\]]")


@dataclass(frozen=True)
class Face:
    """A region of the diagram: its corners in traversal order and bounding edges."""

    id: int
    corners: tuple[Corner, ...]
    boundary_edges: tuple[int, ...]
    circle: int | None = None  # disc bounded by a crossingless circle

    @property
    def size(self) -> int:
        return len(self.boundary_edges)


@dataclass(frozen=True)
class Step:
    """One edge of a traced component, directed from tail arm to head arm."""

    edge: int
    tail: Arm
    head: Arm


@dataclass(frozen=True)
class Diagram:
    """A link diagram given by its crossings in PD normal form.

    ``circles`` counts crossingless components drawn in the outer face.
    ``outer_face`` optionally pins the face treated as unbounded.
    """

    crossings: tuple[Crossing, ...]
    circles: int = 0
    oriented: bool = False
    outer_face: int | None = None
    name: str = ""

    def __post_init__(self) -> None:
        if self.circles < 0:
            raise DiagramError("circle count cannot be negative")
        if not self.crossings and self.circles == 0:
            raise DiagramError("empty PD code needs an explicit circle count")
        counts = Counter(e for crossing in self.crossings for e in crossing)
        bad = sorted(e for e, n in counts.items() if n != 2)
        if bad:
            raise DiagramError(
                f"edges {', '.join(map(str, bad))} occur "
                f"{'/'.join(str(counts[e]) for e in bad)} times; each edge must occur twice"
            )
        if self.crossings and not self._connected():
            raise DiagramError("diagram is split; only crossingless circles may be disjoint")
        # Tracing validates orientation data eagerly.
        _ = self.traces

    # Structure

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(sorted({e for crossing in self.crossings for e in crossing}))

    @property
    def edge_count(self) -> int:
        return len(self.edges) + self.circles

    @property
    def components(self) -> int:
        return len(self.traces) + self.circles

    @cached_property
    def arms(self) -> dict[int, tuple[Arm, Arm]]:
        """Edge label -> its two arms."""
        found: dict[int, list[Arm]] = {}
        for i, crossing in enumerate(self.crossings):
            for s, e in enumerate(crossing):
                found.setdefault(e, []).append((i, s))
        return {e: (a[0], a[1]) for e, a in found.items()}

    def label(self, arm: Arm) -> int:
        return self.crossings[arm[0]][arm[1] % 4]

    def other_end(self, arm: Arm) -> Arm:
        arm = (arm[0], arm[1] % 4)
        first, second = self.arms[self.label(arm)]
        return second if arm == first else first

    def _connected(self) -> bool:
        parent = list(range(len(self.crossings)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (i, _), (j, _) in self.arms.values():
            parent[find(i)] = find(j)
        return len({find(i) for i in range(len(self.crossings))}) == 1

    # Orientation

    @cached_property
    def traces(self) -> tuple[tuple[Step, ...], ...]:
        """Components as directed edge sequences, each starting at its smallest edge."""
        seen: set[int] = set()
        result = []
        for start in self.edges:
            if start in seen:
                continue
            steps = self._walk(start)
            seen.update(step.edge for step in steps)
            result.append(self._orient(steps))
        return tuple(result)

    def _walk(self, start: int) -> list[Step]:
        tail, head = self.arms[start]
        steps = [Step(start, tail, head)]
        while True:
            out = (head[0], (head[1] + 2) % 4)
            edge = self.label(out)
            nxt = self.other_end(out)
            if (edge, out) == (start, tail):
                return steps
            steps.append(Step(edge, out, nxt))
            head = nxt

    def _orient(self, steps: list[Step]) -> tuple[Step, ...]:
        forward = sum(1 for s in steps if s.head[1] == 0) + sum(1 for s in steps if s.tail[1] == 2)
        backward = sum(1 for s in steps if s.head[1] == 2) + sum(1 for s in steps if s.tail[1] == 0)
        if forward and backward:
            raise DiagramError(
                "under-strand data is inconsistent along the component "
                f"through edge {steps[0].edge}"
            )
        reverse = [Step(s.edge, s.head, s.tail) for s in reversed(steps)]
        if backward:
            chosen = reverse
        elif forward:
            chosen = steps
        else:
            # Over-only component: the numbering decides, b -> d winning ties.
            candidates = [c for c in (steps, reverse) if _consecutive([s.edge for s in c])]
            if not candidates:
                raise DiagramError(
                    f"cannot infer the direction of the component through edge {steps[0].edge}"
                )
            chosen = next((c for c in candidates if c[0].head[1] == 1), candidates[0])
        if self.oriented and not _consecutive([s.edge for s in chosen]):
            raise DiagramError(
                "oriented diagrams need edges numbered consecutively along each component; "
                f"got {[s.edge for s in chosen]}"
            )
        low = min(range(len(chosen)), key=lambda k: chosen[k].edge)
        return tuple(chosen[low:] + chosen[:low])

    @cached_property
    def directions(self) -> dict[int, Step]:
        """Edge label -> directed step."""
        return {step.edge: step for trace in self.traces for step in trace}

    def over_in_slot(self, crossing: int) -> int:
        """Slot (1 or 3) through which the over-strand enters ``crossing``."""
        for slot in (1, 3):
            if self.directions[self.crossings[crossing][slot]].head == (crossing, slot):
                return slot
        raise DiagramError(f"over-strand direction undefined at crossing {crossing}")

    # Regions

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return tuple(extract_faces(self))

    @cached_property
    def corner_faces(self) -> tuple[tuple[int, int, int, int], ...]:
        """Face id of every quadrant, per crossing."""
        table = [[-1] * 4 for _ in self.crossings]
        for face in self.faces:
            for i, q in face.corners:
                table[i][q] = face.id
        return tuple((r[0], r[1], r[2], r[3]) for r in table)

    def edge_sides(self, edge: int) -> tuple[int, int]:
        """(left face, right face) of ``edge`` relative to its direction."""
        tail = self.directions[edge].tail
        return self.corner_faces[tail[0]][tail[1]], self.corner_faces[tail[0]][(tail[1] - 1) % 4]

    def default_outer_face(self) -> int:
        """Face with the most boundary edges; smallest id wins ties."""
        return max(self.faces, key=lambda f: (f.size, -f.id)).id

    @property
    def fingerprint(self) -> str:
        text = f"{serialize_pd(self)}|circles={self.circles}|oriented={self.oriented}"
        return hashlib.sha256(text.encode()).hexdigest()[:12]


def _consecutive(edges: list[int]) -> bool:
    low, high = min(edges), max(edges)
    if sorted(edges) != list(range(low, high + 1)):
        return False
    return all(
        nxt == (cur + 1 if cur < high else low)
        for cur, nxt in zip(edges, edges[1:] + edges[:1])
    )


@dataclass(frozen=True)
class ShadedDiagram:
    """A diagram with regions, outer face, checkerboard shading, markers and signs."""

    diagram: Diagram
    faces: tuple[Face, ...]
    outer_face: int
    shading: tuple[str, ...]
    markers: dict[int, tuple[int, int]]
    signs: dict[int, int] | None

    @property
    def corner_faces(self) -> tuple[tuple[int, int, int, int], ...]:
        return self.diagram.corner_faces

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def is_white(self, face: int) -> bool:
        return self.shading[face] == WHITE


def parse_pd(
    text: str,
    *,
    oriented: bool = False,
    circles: int = 0,
    outer_face: int | None = None,
    name: str = "",
) -> Diagram:
    """Parse whitespace-separated ``X(a,b,c,d)`` tuples into a diagram."""
    crossings: list[Crossing] = []
    for match in _CROSSING_RE.finditer(text):
        parts = [p.strip() for p in match.group(1).split(",")]
        if len(parts) != 4 or not all(re.fullmatch(r"-?\d+", p) for p in parts):
            raise DiagramError(f"malformed crossing tuple: '{match.group(0)}'")
        a, b, c, d = (int(p) for p in parts)
        crossings.append((a, b, c, d))
    leftover = _CROSSING_RE.sub("", text).replace(",", " ").strip()
    if leftover:
        raise DiagramError(f"unexpected text in PD code: '{leftover[:40]}'")
    if not crossings and circles == 0 and text.strip() == "":
        raise DiagramError("empty PD code needs an explicit circle count")
    return Diagram(
        crossings=tuple(crossings),
        circles=circles,
        oriented=oriented,
        outer_face=outer_face,
        name=name,
    )


def serialize_pd(d: Diagram) -> str:
    return " ".join(f"X({a},{b},{c},{e})" for a, b, c, e in d.crossings)


def extract_faces(d: Diagram) -> list[Face]:
    """Regions of the diagram, found by walking corners of the rotation system.

    From corner (i, q) the walk follows arm q + 1 to its other end (j, t) and
    continues at corner (j, t).
    """
    faces: list[Face] = []
    seen: set[Corner] = set()
    for i in range(len(d.crossings)):
        for q in range(4):
            if (i, q) in seen:
                continue
            corners: list[Corner] = []
            boundary: list[int] = []
            corner = (i, q)
            while corner not in seen:
                seen.add(corner)
                corners.append(corner)
                arm = (corner[0], (corner[1] + 1) % 4)
                boundary.append(d.label(arm))
                corner = d.other_end(arm)
            if corner != (i, q):
                raise DiagramError("corner walk did not close; the PD code is not planar")
            faces.append(Face(len(faces), tuple(corners), tuple(boundary)))
    if d.crossings and len(faces) != len(d.crossings) + 2:
        raise DiagramError(
            f"{len(faces)} faces for {len(d.crossings)} crossings; the PD code is not planar"
        )
    if not d.crossings:
        faces.append(Face(0, (), ()))
    for k in range(d.circles):
        faces.append(Face(len(faces), (), (), circle=k))
    return faces


def face_adjacency(faces: list[Face] | tuple[Face, ...], outer_face: int) -> dict[int, set[int]]:
    """Faces sharing an edge. Circle discs touch the outer face."""
    by_corner = {c: f.id for f in faces for c in f.corners}
    adjacent: dict[int, set[int]] = {f.id: set() for f in faces}
    for (i, q), fid in by_corner.items():
        other = by_corner[(i, (q + 1) % 4)]
        adjacent[fid].add(other)
        adjacent[other].add(fid)
    for f in faces:
        if f.circle is not None:
            adjacent[f.id].add(outer_face)
            adjacent[outer_face].add(f.id)
    return adjacent


def checkerboard(faces: list[Face] | tuple[Face, ...], outer_face: int) -> tuple[str, ...]:
    """The proper 2-coloring of the faces with ``outer_face`` white."""
    ids = {f.id for f in faces}
    if outer_face not in ids:
        raise DiagramError(f"outer face {outer_face} does not exist")
    adjacent = face_adjacency(faces, outer_face)
    colors: dict[int, str] = {outer_face: WHITE}
    queue = deque([outer_face])
    while queue:
        fid = queue.popleft()
        flipped = BLACK if colors[fid] == WHITE else WHITE
        for other in sorted(adjacent[fid]):
            if other not in colors:
                colors[other] = flipped
                queue.append(other)
            elif colors[other] != flipped:
                raise DiagramError(f"faces {fid} and {other} cannot be shaded apart")
    if len(colors) != len(ids):
        raise DiagramError("face graph is disconnected")
    return tuple(colors[i] for i in sorted(ids))


def compute_markers(d: Diagram) -> dict[int, tuple[int, int]]:
    """Positive-marker quadrants per crossing."""
    return {i: MARKER_QUADRANTS for i in range(len(d.crossings))}


def crossing_signs(d: Diagram) -> dict[int, int]:
    """+1 or -1 per crossing, from the inferred strand directions."""
    if not d.oriented:
        raise DiagramError("crossing signs need an oriented diagram")
    return {i: 1 if d.over_in_slot(i) == 1 else -1 for i in range(len(d.crossings))}


def shade(d: Diagram, outer_face: int | None = None) -> ShadedDiagram:
    """Faces, shading, markers and (for oriented diagrams) signs in one value."""
    outer = outer_face if outer_face is not None else d.outer_face
    if outer is None:
        outer = d.default_outer_face()
    faces = d.faces
    shading = checkerboard(faces, outer)
    logger.debug("shaded %s: %d faces, outer %d", d.name or d.fingerprint, len(faces), outer)
    return ShadedDiagram(
        diagram=d,
        faces=faces,
        outer_face=outer,
        shading=shading,
        markers=compute_markers(d),
        signs=crossing_signs(d) if d.oriented else None,
    )


def mirror(d: Diagram) -> Diagram:
    """Swap over and under at every crossing."""
    crossings = []
    for i, c in enumerate(d.crossings):
        o = d.over_in_slot(i)
        crossings.append((c[o], c[(o + 1) % 4], c[(o + 2) % 4], c[(o + 3) % 4]))
    return Diagram(tuple(crossings), d.circles, d.oriented, d.outer_face, d.name)


def reverse(d: Diagram) -> Diagram:
    """Reverse every component, keeping edges consecutive along the new direction."""
    relabel: dict[int, int] = {}
    for trace in d.traces:
        low = min(s.edge for s in trace)
        m = len(trace)
        for k, step in enumerate(trace):
            relabel[step.edge] = low + ((m - k) % m)
    crossings = tuple(
        (relabel[c[2]], relabel[c[3]], relabel[c[0]], relabel[c[1]]) for c in d.crossings
    )
    return Diagram(crossings, d.circles, d.oriented, d.outer_face, d.name)


def relabel_by_traversal(
    crossings: Sequence[Sequence[Any]],
    *,
    circles: int = 0,
    oriented: bool = False,
    name: str = "",
) -> Diagram:
    """Build a diagram from crossings with arbitrary sortable edge labels.

    Labels are renumbered 1..E consecutively along each component, following
    the direction fixed by the under-strands; components are ordered, and
    entered, at their smallest original label.
    """
    keys = sorted({lab for c in crossings for lab in c})
    index = {k: n + 1 for n, k in enumerate(keys)}
    provisional = Diagram(
        tuple((index[c[0]], index[c[1]], index[c[2]], index[c[3]]) for c in crossings),
        circles=circles,
        oriented=False,
        name=name,
    )
    relabel: dict[int, int] = {}
    nxt = 1
    for trace in provisional.traces:
        for step in trace:
            relabel[step.edge] = nxt
            nxt += 1
    return Diagram(
        tuple(
            (relabel[a], relabel[b], relabel[c], relabel[e])
            for a, b, c, e in provisional.crossings
        ),
        circles=circles,
        oriented=oriented,
        name=name,
    )
