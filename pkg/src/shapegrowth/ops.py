"""Growth-operation values and constructors (ordered step sequences).

Every step is an immutable value carrying a ``family`` tag that matches the
``"family"`` key of its serialized form:

``full``    full doubling in one direction
``rc``      parallel row/column doubling
``node``    single-node doubling (rigidity preserving or breaking)
``growth``  pure growth into empty cells, no translation
``rect``    in-place doubling of sub-rectangles confined to a footprint
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Mapping, Union

from .errors import FormatError
from .shape import Direction, Edge, Point, Rect, Shape, edge

AXES = ("column", "row")


def _pt(p: Any) -> Point:
    x, y = p
    return (int(x), int(y))


@dataclass(frozen=True)
class FullDoublingOp:
    direction: Direction
    family = "full"

    def to_dict(self) -> dict:
        return {"family": "full", "direction": self.direction.value}

    def translated(self, dx: int, dy: int) -> FullDoublingOp:
        return self


@dataclass(frozen=True)
class RcOp:
    """Double the listed columns (east/west) or rows (north/south)."""

    axis: str
    direction: Direction
    indices: tuple[int, ...]
    family = "rc"

    def __post_init__(self):
        if self.axis not in AXES:
            raise ValueError(f"axis must be one of {AXES}, got {self.axis!r}")
        if self.direction.axis != self.axis:
            raise ValueError(f"direction {self.direction.value} cannot double a {self.axis}")
        idx = tuple(sorted(set(int(i) for i in self.indices)))
        if not idx:
            raise ValueError("an RC operation needs at least one index")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def columns(cls, indices: Iterable[int], direction: Direction = Direction.EAST) -> RcOp:
        return cls("column", direction, tuple(indices))

    @classmethod
    def rows(cls, indices: Iterable[int], direction: Direction = Direction.NORTH) -> RcOp:
        return cls("row", direction, tuple(indices))

    def to_dict(self) -> dict:
        return {
            "family": "rc",
            "axis": self.axis,
            "direction": self.direction.value,
            "indices": list(self.indices),
        }

    def translated(self, dx: int, dy: int) -> RcOp:
        off = dx if self.axis == "column" else dy
        return RcOp(self.axis, self.direction, tuple(i + off for i in self.indices))


@dataclass(frozen=True)
class NodeDoubleOp:
    """One node doubles towards ``direction``.

    In ``breaking`` mode the edges listed in ``breaks`` (a subset of the
    bicolor edges of the operation) are removed instead of being grown over.
    """

    node: Point
    direction: Direction
    mode: str = "preserving"
    breaks: frozenset[Edge] = field(default_factory=frozenset)
    family = "node"

    def __post_init__(self):
        if self.mode not in ("preserving", "breaking"):
            raise ValueError(f"mode must be 'preserving' or 'breaking', got {self.mode!r}")
        object.__setattr__(self, "node", _pt(self.node))
        object.__setattr__(self, "breaks", frozenset(edge(_pt(a), _pt(b)) for a, b in self.breaks))
        if self.mode == "preserving" and self.breaks:
            raise ValueError("rigidity-preserving doubling cannot remove edges")

    def to_dict(self) -> dict:
        d: dict[str, Any] = {
            "family": "node",
            "node": list(self.node),
            "direction": self.direction.value,
            "mode": self.mode,
        }
        if self.mode == "breaking":
            d["breaks"] = [[list(a), list(b)] for a, b in sorted(self.breaks)]
        return d

    def translated(self, dx: int, dy: int) -> NodeDoubleOp:
        def mv(p: Point) -> Point:
            return (p[0] + dx, p[1] + dy)

        return NodeDoubleOp(
            mv(self.node), self.direction, self.mode, frozenset((mv(a), mv(b)) for a, b in self.breaks)
        )


@dataclass(frozen=True)
class PureGrowthOp:
    """Each generator creates one node in its direction; nothing is pushed."""

    generators: tuple[tuple[Point, Direction], ...]
    family = "growth"

    def __post_init__(self):
        gens = tuple(sorted(((_pt(p), d) for p, d in self.generators), key=lambda g: g[0]))
        if not gens:
            raise ValueError("a growth step needs at least one generator")
        if len({p for p, _ in gens}) != len(gens):
            raise ValueError("a node can generate at most one node per step")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_mapping(cls, generators: Mapping[Point, Direction]) -> PureGrowthOp:
        return cls(tuple(generators.items()))

    def targets(self) -> list[Point]:
        out = []
        for (x, y), d in self.generators:
            dx, dy = d.vector
            out.append((x + dx, y + dy))
        return out

    def to_dict(self) -> dict:
        return {
            "family": "growth",
            "generators": [{"node": list(p), "direction": d.value} for p, d in self.generators],
        }

    def translated(self, dx: int, dy: int) -> PureGrowthOp:
        return PureGrowthOp(tuple(((x + dx, y + dy), d) for (x, y), d in self.generators))


@dataclass(frozen=True)
class RectBlock:
    """Grow the filled rectangle ``current`` by ``count`` lines inside ``footprint``."""

    footprint: Rect
    current: Rect
    count: int

    def grown(self, d: Direction) -> Rect:
        (x, y), w, h, c = self.current.origin, self.current.w, self.current.h, self.count
        if d is Direction.EAST:
            return Rect((x, y), w + c, h)
        if d is Direction.WEST:
            return Rect((x - c, y), w + c, h)
        if d is Direction.NORTH:
            return Rect((x, y), w, h + c)
        return Rect((x, y - c), w, h + c)


@dataclass(frozen=True)
class RectGrowthOp:
    """Parallel in-place rectangle doubling, one block per growing rectangle.

    For each block, ``count`` of the current rectangle's lines (columns for
    east/west, rows for north/south) double in ``direction``; the lines
    beyond them translate inside the footprint and every edge to a node
    outside the footprint is broken for the step.
    """

    direction: Direction
    blocks: tuple[RectBlock, ...]
    family = "rect"

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("a rect step needs at least one block")
        object.__setattr__(self, "blocks", tuple(self.blocks))

    def to_dict(self) -> dict:
        return {
            "family": "rect",
            "direction": self.direction.value,
            "blocks": [
                {
                    "footprint": rect_to_dict(b.footprint),
                    "current": rect_to_dict(b.current),
                    "count": b.count,
                }
                for b in self.blocks
            ],
        }

    def translated(self, dx: int, dy: int) -> RectGrowthOp:
        def mv(r: Rect) -> Rect:
            return Rect((r.origin[0] + dx, r.origin[1] + dy), r.w, r.h)

        return RectGrowthOp(
            self.direction, tuple(RectBlock(mv(b.footprint), mv(b.current), b.count) for b in self.blocks)
        )


GrowthOp = Union[FullDoublingOp, RcOp, NodeDoubleOp, PureGrowthOp, RectGrowthOp]


@dataclass(frozen=True)
class Constructor:
    """An ordered sequence of growth steps, one per time-step.

    ``initial`` is the shape the steps were computed against, when known;
    step coordinates always refer to the shape as it exists at that step.
    """

    steps: tuple[GrowthOp, ...] = ()
    initial: Shape | None = None

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[GrowthOp]:
        return iter(self.steps)

    def __getitem__(self, i: int) -> GrowthOp:
        return self.steps[i]

    def then(self, other: Constructor) -> Constructor:
        return Constructor(self.steps + other.steps, self.initial)

    def to_dict(self) -> dict:
        d: dict[str, Any] = {"steps": [s.to_dict() for s in self.steps]}
        if self.initial is not None:
            d["initial"] = [list(p) for p in self.initial.sorted_points()]
        return d

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> Constructor:
        if not isinstance(data, Mapping) or "steps" not in data:
            raise FormatError("constructor must be an object with a 'steps' list")
        steps = []
        for i, raw in enumerate(data["steps"]):
            try:
                steps.append(step_from_dict(raw))
            except (KeyError, TypeError, ValueError) as exc:
                raise FormatError(f"step {i}: {exc}") from exc
        initial = None
        if data.get("initial") is not None:
            initial = Shape(_pt(p) for p in data["initial"])
        return cls(tuple(steps), initial)


def rect_to_dict(r: Rect) -> dict:
    return {"origin": list(r.origin), "w": r.w, "h": r.h}


def rect_from_dict(d: Mapping[str, Any]) -> Rect:
    return Rect(_pt(d["origin"]), int(d["w"]), int(d["h"]))


def step_from_dict(d: Mapping[str, Any]) -> GrowthOp:
    family = d["family"]
    if family == "full":
        return FullDoublingOp(Direction.parse(d["direction"]))
    if family == "rc":
        return RcOp(d["axis"], Direction.parse(d["direction"]), tuple(int(i) for i in d["indices"]))
    if family == "node":
        breaks = frozenset((_pt(a), _pt(b)) for a, b in d.get("breaks", []))
        return NodeDoubleOp(_pt(d["node"]), Direction.parse(d["direction"]), d.get("mode", "preserving"), breaks)
    if family == "growth":
        return PureGrowthOp(tuple((_pt(g["node"]), Direction.parse(g["direction"])) for g in d["generators"]))
    if family == "rect":
        blocks = tuple(
            RectBlock(rect_from_dict(b["footprint"]), rect_from_dict(b["current"]), int(b["count"]))
            for b in d["blocks"]
        )
        return RectGrowthOp(Direction.parse(d["direction"]), blocks)
    raise ValueError(f"unknown step family {family!r}")
