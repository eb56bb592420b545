"""Readers and writers for diagram, algebra, Cayley-table and move-script files.

PD files (``.pd``)::

    # name: trefoil
    # oriented: true
    # outer: 1
    # circles: 0
    X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)

Structured files are YAML:

    diagram       ``pd`` text or ``crossings`` list, plus ``oriented``,
                  ``outer``, ``circles`` and ``name``
    algebra       ``size``, ``kind``, ``op1``, ``op2`` as ``op[x][y][z]``;
                  ``layout: slices`` maps each ``z`` to an ``x`` by ``y``
                  matrix instead, and ``base: 1`` shifts 1-based entries
    cayley        ``size``, ``mul``, optional ``identity`` and ``labels``
    move script   ``base`` (path relative to the script, or inline diagram)
                  and ``moves``, each ``{kind, edge, face, edges, variant}``
                  or ``{kind, site: first}``
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np
import yaml

from terna.core.algebra import FiniteTernaryAlgebra
from terna.core.builtin import cube_from_slices
from terna.core.diagram import Diagram, parse_pd, serialize_pd
from terna.core.magma import MagmaTable
from terna.core.moves import MoveSpec, apply_move, first_site
from terna.exceptions import FileFormatError, TernaError

logger = logging.getLogger(__name__)

PD_SUFFIXES = (".pd", ".txt")
YAML_SUFFIXES = (".yaml", ".yml")

_ANNOTATION_RE = re.compile(r"^#\s*(name|oriented|outer|circles)\s*:\s*(.*?)\s*$")


def _read_text(path: Path) -> str:
    if not path.exists():
        raise FileFormatError(f"file not found: {path}")
    try:
        return path.read_text()
    except OSError as e:
        raise FileFormatError(f"cannot read {path}: {e}") from e


def _read_yaml(path: Path) -> dict[str, Any]:
    try:
        data = yaml.safe_load(_read_text(path))
    except yaml.YAMLError as e:
        raise FileFormatError(f"{path} is not valid YAML: {e}") from e
    if not isinstance(data, dict):
        raise FileFormatError(f"{path} must contain a mapping")
    return data


def _as_bool(value: Any, where: str) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ("true", "yes", "1"):
        return True
    if text in ("false", "no", "0"):
        return False
    raise FileFormatError(f"{where}: expected true or false, got '{value}'")


def _as_int(value: Any, where: str) -> int:
    try:
        return int(value)
    except (TypeError, ValueError) as e:
        raise FileFormatError(f"{where}: expected an integer, got '{value}'") from e


# Diagrams


def parse_pd_file(text: str, name: str = "") -> Diagram:
    """PD text with optional ``# key: value`` annotations."""
    options: dict[str, Any] = {"name": name, "oriented": False, "outer": None, "circles": 0}
    body = []
    for line in text.splitlines():
        stripped = line.strip()
        match = _ANNOTATION_RE.match(stripped)
        if match:
            options[match.group(1)] = match.group(2)
        elif not stripped.startswith("#"):
            body.append(stripped)
    return _diagram_from_options(" ".join(body), options, "PD file")


def _diagram_from_options(pd: str, options: dict[str, Any], where: str) -> Diagram:
    outer = options.get("outer")
    try:
        return parse_pd(
            pd,
            oriented=_as_bool(options.get("oriented", False), f"{where} 'oriented'"),
            circles=_as_int(options.get("circles", 0), f"{where} 'circles'"),
            outer_face=None if outer in (None, "") else _as_int(outer, f"{where} 'outer'"),
            name=str(options.get("name") or ""),
        )
    except FileFormatError:
        raise
    except TernaError as e:
        raise FileFormatError(f"{where}: {e}") from e


def diagram_from_dict(data: dict[str, Any], name: str = "") -> Diagram:
    if "pd" in data:
        pd = str(data["pd"])
    elif "crossings" in data:
        try:
            pd = " ".join("X({},{},{},{})".format(*map(int, c)) for c in data["crossings"])
        except (TypeError, ValueError, IndexError) as e:
            raise FileFormatError(f"malformed 'crossings' list: {e}") from e
    else:
        pd = ""
    options = {**data, "name": data.get("name", name)}
    return _diagram_from_options(pd, options, "diagram")


def load_diagram(path: str | Path) -> Diagram:
    """A ``.pd`` file or a YAML diagram or move script."""
    path = Path(path)
    if path.suffix in YAML_SUFFIXES:
        data = _read_yaml(path)
        if "moves" in data:
            return load_move_script(path)
        return diagram_from_dict(data, path.stem)
    return parse_pd_file(_read_text(path), path.stem)


def dump_diagram(d: Diagram) -> str:
    lines = []
    if d.name:
        lines.append(f"# name: {d.name}")
    if d.oriented:
        lines.append("# oriented: true")
    if d.outer_face is not None:
        lines.append(f"# outer: {d.outer_face}")
    if d.circles:
        lines.append(f"# circles: {d.circles}")
    lines.append(serialize_pd(d))
    return "\n".join(lines) + "\n"


# Move scripts


@dataclass(frozen=True)
class MoveScript:
    base: Diagram
    moves: tuple[MoveSpec, ...]
    result: Diagram


def _move_from_dict(d: Diagram, entry: dict[str, Any], index: int) -> MoveSpec:
    where = f"move {index}"
    kind = str(entry.get("kind", "")).upper()
    if kind not in ("R1", "R2", "R3"):
        raise FileFormatError(f"{where}: kind must be R1, R2 or R3")
    variant = str(entry.get("variant", ""))
    if entry.get("site") == "first":
        return first_site(d, kind, variant)
    edge = entry.get("edge")
    face = entry.get("face")
    return MoveSpec(
        kind,  # type: ignore[arg-type]
        edge=None if edge is None else _as_int(edge, f"{where} 'edge'"),
        face=None if face is None else _as_int(face, f"{where} 'face'"),
        edges=tuple(_as_int(e, f"{where} 'edges'") for e in entry.get("edges", ())),
        variant=variant,
    )


def run_move_script(data: dict[str, Any], root: Path, name: str = "") -> MoveScript:
    """Resolve the base diagram and the moves; sites are chosen as moves apply."""
    base_ref = data.get("base")
    if isinstance(base_ref, dict):
        base = diagram_from_dict(base_ref, name)
    elif isinstance(base_ref, str):
        base = load_diagram(root / base_ref)
    else:
        raise FileFormatError("move script needs a 'base' diagram")
    entries = data.get("moves") or []
    if not isinstance(entries, list):
        raise FileFormatError("'moves' must be a list")
    d = base
    specs = []
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise FileFormatError(f"move {i} must be a mapping")
        spec = _move_from_dict(d, entry, i)
        specs.append(spec)
        d = apply_move(d, spec)
    return MoveScript(base, tuple(specs), d)


def load_move_script(path: str | Path) -> Diagram:
    """The diagram produced by a move script."""
    path = Path(path)
    data = _read_yaml(path)
    script = run_move_script(data, path.parent, path.stem)
    d = script.result
    logger.debug("%s: %d moves applied to %s", path.name, len(script.moves), script.base.name)
    return Diagram(
        crossings=d.crossings,
        circles=d.circles,
        oriented=d.oriented,
        outer_face=data.get("outer"),
        name=str(data.get("name", path.stem)),
    )


# Algebras and Cayley tables


def _cube(data: dict[str, Any], key: str, size: int, base: int, slices: bool) -> np.ndarray:
    raw = data.get(key)
    if raw is None:
        raise FileFormatError(f"algebra file is missing '{key}'")
    try:
        if slices:
            if not isinstance(raw, dict):
                raise FileFormatError(f"'{key}' must map each z to a matrix in the slices layout")
            cube = cube_from_slices({int(z): m for z, m in raw.items()}, base)
        else:
            cube = np.asarray(raw, dtype=np.int64) - base
    except (TypeError, ValueError) as e:
        raise FileFormatError(f"'{key}' is not an integer cube: {e}") from e
    if cube.shape != (size, size, size):
        raise FileFormatError(f"'{key}' has shape {cube.shape}, expected {(size,) * 3}")
    return cube


def algebra_from_dict(data: dict[str, Any], name: str = "") -> FiniteTernaryAlgebra:
    size = _as_int(data.get("size"), "algebra 'size'")
    base = _as_int(data.get("base", 0), "algebra 'base'")
    layout = data.get("layout", "nested")
    if layout not in ("nested", "slices"):
        raise FileFormatError(f"unknown algebra layout '{layout}'")
    slices = layout == "slices"
    kind = data.get("kind", "unoriented")
    try:
        return FiniteTernaryAlgebra(
            _cube(data, "op1", size, base, slices),
            _cube(data, "op2", size, base, slices),
            kind,
            str(data.get("name", name)),
        )
    except FileFormatError:
        raise
    except TernaError as e:
        raise FileFormatError(f"invalid algebra: {e}") from e


def load_algebra(path: str | Path) -> FiniteTernaryAlgebra:
    path = Path(path)
    return algebra_from_dict(_read_yaml(path), path.stem)


def dump_algebra(a: FiniteTernaryAlgebra) -> str:
    data = {
        "name": a.name,
        "kind": a.kind,
        "size": a.n,
        "op1": a.op1.tolist(),
        "op2": a.op2.tolist(),
    }
    return yaml.safe_dump(data, default_flow_style=None, sort_keys=False)


def load_cayley(path: str | Path) -> MagmaTable:
    """A Cayley table ``mul[x][y] = x * y`` from YAML."""
    path = Path(path)
    data = _read_yaml(path)
    size = _as_int(data.get("size"), "cayley 'size'")
    try:
        mul = np.asarray(data.get("mul"), dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise FileFormatError(f"'mul' is not an integer table: {e}") from e
    if mul.shape != (size, size):
        raise FileFormatError(f"'mul' has shape {mul.shape}, expected {(size, size)}")
    identity = data.get("identity")
    labels = tuple(str(x) for x in data.get("labels") or ())
    try:
        return MagmaTable(
            mul,
            name=str(data.get("name", path.stem)),
            identity=None if identity is None else _as_int(identity, "cayley 'identity'"),
            labels=labels,
        )
    except TernaError as e:
        raise FileFormatError(f"invalid Cayley table in {path}: {e}") from e


def dump_cayley(table: MagmaTable) -> str:
    data: dict[str, Any] = {"name": table.name, "size": table.n, "mul": table.mul.tolist()}
    if table.identity is not None:
        data["identity"] = table.identity
    if table.labels:
        data["labels"] = list(table.labels)
    return yaml.safe_dump(data, default_flow_style=None, sort_keys=False)
