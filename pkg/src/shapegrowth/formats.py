"""Text formats: ASCII grids and JSON documents for shapes, constructors,
partitions and traces."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import FormatError, ShapeError
from .ops import Constructor
from .partition import RectPartition
from .shape import Shape, components, normalize

OCCUPIED = "#"
EMPTY = "."


def parse_ascii(text: str) -> Shape:
    """Parse '#'/'.' rows; the top line has the greatest y, the bottom line is y = 0.

    Blank lines at either end are ignored; rows may have different lengths.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    first = 0
    while first < len(lines) and not lines[first].strip():
        first += 1
    rows = lines[first:]
    pts = set()
    height = len(rows)
    for i, line in enumerate(rows):
        y = height - 1 - i
        for x, ch in enumerate(line.rstrip()):
            if ch == OCCUPIED:
                pts.add((x, y))
            elif ch != EMPTY:
                raise FormatError(f"unexpected character {ch!r}", first + i + 1, x + 1)
    if not pts:
        raise FormatError("shape has no occupied cells")
    comps = components(pts)
    if len(comps) > 1:
        where = []
        for c in comps:
            x, y = min(c, key=lambda p: (-p[1], p[0]))
            where.append(f"{len(c)} cell(s) at line {first + height - y}, column {x + 1}")
        raise FormatError(f"shape is disconnected into {len(comps)} components: " + "; ".join(where))
    return Shape.trusted(frozenset(pts))


def format_ascii(s: Shape) -> str:
    min_x, min_y, max_x, max_y = s.bounds
    lines = []
    for y in range(max_y, min_y - 1, -1):
        lines.append("".join(OCCUPIED if (x, y) in s else EMPTY for x in range(min_x, max_x + 1)))
    return "\n".join(lines) + "\n"


def shape_to_dict(s: Shape, name: str | None = None, normalized: bool = False) -> dict:
    out: dict[str, Any] = {"points": [list(p) for p in (normalize(s) if normalized else s).sorted_points()]}
    if name is not None:
        out["name"] = name
    if normalized:
        out["normalized"] = True
    return out


def shape_from_dict(data: Any) -> Shape:
    if not isinstance(data, dict) or "points" not in data:
        raise FormatError('expected an object with a "points" list')
    raw = data["points"]
    if not isinstance(raw, list):
        raise FormatError('"points" must be a list')
    pts = []
    for i, p in enumerate(raw):
        if not (isinstance(p, list) and len(p) == 2 and all(type(v) is int for v in p)):
            raise FormatError(f"point {i} is not an [x, y] integer pair")
        pts.append((p[0], p[1]))
    try:
        s = Shape(pts)
    except ShapeError as exc:
        raise FormatError(str(exc)) from exc
    return normalize(s) if data.get("normalized") else s


def parse_shape(text: str, fmt: str | None = None) -> Shape:
    """Parse a shape in ``fmt`` ("ascii" or "structured"); guessed when ``None``."""
    if fmt is None:
        fmt = "structured" if text.lstrip().startswith("{") else "ascii"
    if fmt == "ascii":
        return parse_ascii(text)
    if fmt == "structured":
        return shape_from_dict(_load_json(text))
    raise ValueError(f"unknown shape format {fmt!r}")


def format_shape(s: Shape, fmt: str = "ascii", name: str | None = None) -> str:
    if fmt == "ascii":
        return format_ascii(s)
    if fmt == "structured":
        return json.dumps(shape_to_dict(s, name)) + "\n"
    raise ValueError(f"unknown shape format {fmt!r}")


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, exc.lineno, exc.colno) from exc


def dump_constructor(c: Constructor) -> str:
    return json.dumps(c.to_dict(), indent=1) + "\n"


def load_constructor(text: str) -> Constructor:
    return Constructor.from_dict(_load_json(text))


def dump_partition(p: RectPartition) -> str:
    return json.dumps(p.to_dict(), indent=1) + "\n"


def load_partition(text: str) -> RectPartition:
    data = _load_json(text)
    try:
        return RectPartition.from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad partition: {exc}") from exc


def dump_trace(trace: list[Shape], fmt: str = "ascii") -> str:
    """One shape per time-step; ASCII frames are separated by ``--- t`` headers."""
    if fmt == "structured":
        return json.dumps({"trace": [shape_to_dict(s) for s in trace]}) + "\n"
    parts = [f"--- {t}\n{format_ascii(s)}" for t, s in enumerate(trace)]
    return "".join(parts)


def load_trace(text: str, fmt: str = "ascii") -> list[Shape]:
    if fmt == "structured":
        data = _load_json(text)
        return [shape_from_dict(d) for d in data["trace"]]
    frames: list[list[str]] = []
    for line in text.splitlines():
        if line.startswith("---"):
            frames.append([])
        elif frames:
            frames[-1].append(line)
    return [parse_ascii("\n".join(f)) for f in frames]


def read_text(path: str | Path) -> str:
    return Path(path).read_text()
