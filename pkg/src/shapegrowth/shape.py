"""Grid geometry: points, directions, shapes, rectangles and baseline profiles.

Coordinates follow the usual Cartesian convention: ``x`` is the column
index and grows to the east, ``y`` is the row index and grows to the north.
A :class:`Shape` is an immutable, non-empty, 4-connected set of points.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .errors import ShapeError

Point = tuple[int, int]
GridPoint = Point
Edge = tuple[Point, Point]

NEIGHBOR_STEPS: tuple[Point, ...] = ((0, 1), (1, 0), (0, -1), (-1, 0))


class Direction(Enum):
    NORTH = "north"
    EAST = "east"
    SOUTH = "south"
    WEST = "west"

    @property
    def vector(self) -> Point:
        return _VECTORS[self]

    @property
    def opposite(self) -> Direction:
        return _OPPOSITE[self]

    @property
    def horizontal(self) -> bool:
        return self in (Direction.EAST, Direction.WEST)

    @property
    def axis(self) -> str:
        """``"column"`` for east/west (columns double), ``"row"`` otherwise."""
        return "column" if self.horizontal else "row"

    @classmethod
    def parse(cls, value: str | Direction) -> Direction:
        if isinstance(value, Direction):
            return value
        key = value.strip().lower()
        for d in cls:
            if d.value == key or d.value[0] == key:
                return d
        raise ValueError(f"unknown direction {value!r}")


_VECTORS = {
    Direction.NORTH: (0, 1),
    Direction.EAST: (1, 0),
    Direction.SOUTH: (0, -1),
    Direction.WEST: (-1, 0),
}
_OPPOSITE = {
    Direction.NORTH: Direction.SOUTH,
    Direction.SOUTH: Direction.NORTH,
    Direction.EAST: Direction.WEST,
    Direction.WEST: Direction.EAST,
}

# Fixed exploration order used wherever a deterministic neighbour order matters.
DIRECTION_ORDER = (Direction.NORTH, Direction.EAST, Direction.SOUTH, Direction.WEST)


def edge(p: Point, q: Point) -> Edge:
    """Canonical (sorted) form of the grid edge between two neighbours."""
    return (p, q) if p <= q else (q, p)


def neighbors(p: Point) -> Iterator[Point]:
    x, y = p
    for dx, dy in NEIGHBOR_STEPS:
        yield (x + dx, y + dy)


def components(points: Iterable[Point]) -> list[set[Point]]:
    """4-connected components, largest first (ties by smallest point)."""
    remaining = set(points)
    comps: list[set[Point]] = []
    while remaining:
        start = min(remaining)
        remaining.discard(start)
        comp = {start}
        queue = deque([start])
        while queue:
            x, y = queue.popleft()
            for dx, dy in NEIGHBOR_STEPS:
                q = (x + dx, y + dy)
                if q in remaining:
                    remaining.discard(q)
                    comp.add(q)
                    queue.append(q)
        comps.append(comp)
    comps.sort(key=lambda c: (-len(c), min(c)))
    return comps


def is_connected(points: Iterable[Point]) -> bool:
    pts = points if isinstance(points, (set, frozenset)) else set(points)
    if not pts:
        return False
    start = next(iter(pts))
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for dx, dy in NEIGHBOR_STEPS:
            q = (x + dx, y + dy)
            if q in pts and q not in seen:
                seen.add(q)
                stack.append(q)
    return len(seen) == len(pts)


class Shape:
    """Immutable non-empty 4-connected set of grid points.

    Equality and hashing are on the exact point set; use
    :func:`equal_up_to_translation` for translation-invariant comparison.
    """

    __slots__ = ("_points", "_bounds", "_hash")

    def __init__(self, points: Iterable[Point], *, check: bool = True):
        pts = frozenset((int(x), int(y)) for x, y in points) if check else frozenset(points)
        if check:
            if not pts:
                raise ShapeError("a shape must contain at least one point")
            if not is_connected(pts):
                comps = components(pts)
                desc = "; ".join(f"{len(c)} point(s) starting at {min(c)}" for c in comps)
                raise ShapeError(f"shape is disconnected: {len(comps)} components ({desc})")
        self._points = pts
        self._bounds: tuple[int, int, int, int] | None = None
        self._hash: int | None = None

    @classmethod
    def trusted(cls, points: Iterable[Point]) -> Shape:
        """Build without validation; callers guarantee non-empty and connected."""
        return cls(points if isinstance(points, frozenset) else frozenset(points), check=False)

    @property
    def points(self) -> frozenset[Point]:
        return self._points

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __contains__(self, p: object) -> bool:
        return p in self._points

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Shape):
            return self._points == other._points
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._points)
        return self._hash

    def __repr__(self) -> str:
        return f"Shape({sorted(self._points)})"

    @property
    def size(self) -> int:
        return len(self._points)

    @property
    def bounds(self) -> tuple[int, int, int, int]:
        """``(min_x, min_y, max_x, max_y)``."""
        if self._bounds is None:
            xs = [p[0] for p in self._points]
            ys = [p[1] for p in self._points]
            self._bounds = (min(xs), min(ys), max(xs), max(ys))
        return self._bounds

    @property
    def width(self) -> int:
        b = self.bounds
        return b[2] - b[0] + 1

    @property
    def height(self) -> int:
        b = self.bounds
        return b[3] - b[1] + 1

    def sorted_points(self) -> list[Point]:
        return sorted(self._points)


@dataclass(frozen=True, order=True)
class Rect:
    """The ``(w, h)``-rectangle whose south-west corner is ``origin``."""

    origin: Point
    w: int
    h: int

    def __post_init__(self):
        if self.w < 1 or self.h < 1:
            raise ValueError(f"rectangle sides must be positive, got {self.w}x{self.h}")

    @property
    def area(self) -> int:
        return self.w * self.h

    @property
    def x_range(self) -> range:
        return range(self.origin[0], self.origin[0] + self.w)

    @property
    def y_range(self) -> range:
        return range(self.origin[1], self.origin[1] + self.h)

    def cells(self) -> set[Point]:
        return {(x, y) for x in self.x_range for y in self.y_range}

    def __contains__(self, p: object) -> bool:
        x, y = p  # type: ignore[misc]
        ox, oy = self.origin
        return ox <= x < ox + self.w and oy <= y < oy + self.h

    def contains_rect(self, other: Rect) -> bool:
        ox, oy = other.origin
        return (ox, oy) in self and (ox + other.w - 1, oy + other.h - 1) in self

    def corners(self) -> list[Point]:
        ox, oy = self.origin
        xs = sorted({ox, ox + self.w - 1})
        ys = sorted({oy, oy + self.h - 1})
        return [(x, y) for y in ys for x in xs]


def rectangle(origin: Point, w: int, h: int) -> Shape:
    """``Rec(origin, w, h)`` as a shape."""
    return Shape.trusted(frozenset(Rect(origin, w, h).cells()))


# ---------------------------------------------------------------------------
# basic operations
# ---------------------------------------------------------------------------


def translate(s: Shape, d: Direction, k: int = 1) -> Shape:
    if k < 0:
        raise ValueError("translation amount must be non-negative")
    if k == 0:
        return s
    dx, dy = d.vector
    return shift(s, dx * k, dy * k)


def shift(s: Shape, dx: int, dy: int) -> Shape:
    if dx == 0 and dy == 0:
        return s
    return Shape.trusted(frozenset((x + dx, y + dy) for x, y in s.points))


def column(s: Shape, j: int) -> set[Point]:
    return {p for p in s.points if p[0] == j}


def row(s: Shape, i: int) -> set[Point]:
    return {p for p in s.points if p[1] == i}


def west_offset(s: Shape, u: Point) -> int:
    """Number of columns of ``s`` strictly west of ``u``."""
    if u not in s:
        raise ShapeError(f"point {u} is not in the shape")
    return u[0] - s.bounds[0]


def south_offset(s: Shape, u: Point) -> int:
    """Number of rows of ``s`` strictly south of ``u``."""
    if u not in s:
        raise ShapeError(f"point {u} is not in the shape")
    return u[1] - s.bounds[1]


def normalize(s: Shape) -> Shape:
    min_x, min_y, _, _ = s.bounds
    return shift(s, -min_x, -min_y)


def equal_up_to_translation(a: Shape, b: Shape) -> bool:
    if len(a) != len(b) or a.width != b.width or a.height != b.height:
        return False
    ax, ay, _, _ = a.bounds
    bx, by, _, _ = b.bounds
    dx, dy = bx - ax, by - ay
    bp = b.points
    return all((x + dx, y + dy) in bp for x, y in a.points)


def columns_of(s: Shape) -> dict[int, frozenset[int]]:
    """Map column index -> set of occupied y coordinates."""
    cols: dict[int, set[int]] = defaultdict(set)
    for x, y in s.points:
        cols[x].add(y)
    return {x: frozenset(ys) for x, ys in cols.items()}


def rows_of(s: Shape) -> dict[int, frozenset[int]]:
    """Map row index -> set of occupied x coordinates."""
    rows: dict[int, set[int]] = defaultdict(set)
    for x, y in s.points:
        rows[y].add(x)
    return {y: frozenset(xs) for y, xs in rows.items()}


# ---------------------------------------------------------------------------
# baseline profiles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BaselineProfile:
    """A normalized baseline shape with column and row multiplicity vectors.

    ``col_mult[c]`` is the length of the run of identical consecutive
    columns that baseline column ``c`` stands for (west to east), and
    ``row_mult[r]`` likewise for rows (south to north).
    """

    baseline: Shape
    col_mult: tuple[int, ...]
    row_mult: tuple[int, ...]

    def expand(self) -> Shape:
        """Rebuild the (normalized) profiled shape."""
        return expand_profile(self.baseline, self.col_mult, self.row_mult)


def _runs(lines: list[frozenset[int]]) -> tuple[list[int], list[int]]:
    """Indices of run heads and run lengths of equal consecutive lines."""
    heads: list[int] = []
    mult: list[int] = []
    prev = None
    for i, line in enumerate(lines):
        if i > 0 and line == prev:
            mult[-1] += 1
        else:
            heads.append(i)
            mult.append(1)
        prev = line
    return heads, mult


def baseline(s: Shape) -> BaselineProfile:
    """Compress runs of identical consecutive columns, then rows.

    Every point takes part in a bounded number of set comparisons, so the
    cost is linear in ``len(s)`` (up to hashing).
    """
    min_x, min_y, max_x, max_y = s.bounds
    cols = columns_of(s)
    col_lines = [cols[x] for x in range(min_x, max_x + 1)]
    col_heads, col_mult = _runs(col_lines)

    # Keep the first column of every run; renumber columns 0.. and rows from 0.
    rows: dict[int, set[int]] = defaultdict(set)
    for c, head in enumerate(col_heads):
        for y in col_lines[head]:
            rows[y - min_y].add(c)
    row_lines = [frozenset(rows[y]) for y in range(max_y - min_y + 1)]
    row_heads, row_mult = _runs(row_lines)

    pts = frozenset((x, r) for r, head in enumerate(row_heads) for x in row_lines[head])
    return BaselineProfile(Shape.trusted(pts), tuple(col_mult), tuple(row_mult))


def expand_profile(base: Shape, col_mult: Iterable[int], row_mult: Iterable[int]) -> Shape:
    """Replicate column ``c`` of ``base`` ``col_mult[c]`` times, then rows likewise."""
    col_mult = list(col_mult)
    row_mult = list(row_mult)
    base = normalize(base)
    if len(col_mult) != base.width or len(row_mult) != base.height:
        raise ValueError("multiplicity vectors must match the baseline dimensions")
    if min(col_mult) < 1 or min(row_mult) < 1:
        raise ValueError("multiplicities must be positive")
    col_start = [0]
    for m in col_mult:
        col_start.append(col_start[-1] + m)
    row_start = [0]
    for m in row_mult:
        row_start.append(row_start[-1] + m)
    pts = frozenset(
        (X, Y)
        for x, y in base.points
        for X in range(col_start[x], col_start[x + 1])
        for Y in range(row_start[y], row_start[y + 1])
    )
    return Shape.trusted(pts)


def is_baseline(s: Shape) -> bool:
    prof = baseline(s)
    return len(prof.baseline) == len(s)
