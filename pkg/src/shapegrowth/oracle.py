"""Brute-force ground truth for small instances.

Nothing here calls the deciders or synthesizers it is used to check:
reachability is plain breadth-first search over normalized shapes,
partition minimality is an exhaustive corner-anchored search, and the
baseline route compresses lines in random order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .errors import InvalidOperation, ModelError, ReplayError, ShapeGrowthError
from .full import apply_full_doubling, full_doubling_trace
from .general import (
    apply_node_doubling,
    apply_pure_growth,
    apply_rect_growth,
    bicolor_edges,
    node_doubling_trace,
    rect_growth_cells,
)
from .ops import (
    Constructor,
    FullDoublingOp,
    GrowthOp,
    NodeDoubleOp,
    PureGrowthOp,
    RcOp,
    RectGrowthOp,
)
from .rc import apply_rc, rc_trace
from .shape import (
    DIRECTION_ORDER,
    BaselineProfile,
    Direction,
    Point,
    Shape,
    is_connected,
    normalize,
)

FAMILIES = ("full", "rc-single", "rc-parallel", "node-preserving", "node-breaking")

# Up to this size every subset of breakable edges is tried.
BREAK_SUBSET_LIMIT = 8


# ---------------------------------------------------------------------------
# step dispatch and replay
# ---------------------------------------------------------------------------


def apply_step(s: Shape, step: GrowthOp) -> Shape:
    if isinstance(step, FullDoublingOp):
        return apply_full_doubling(s, step.direction)
    if isinstance(step, RcOp):
        return apply_rc(s, step)
    if isinstance(step, NodeDoubleOp):
        return apply_node_doubling(s, step)
    if isinstance(step, PureGrowthOp):
        return apply_pure_growth(s, step)
    if isinstance(step, RectGrowthOp):
        return apply_rect_growth(s, step)
    raise TypeError(f"not a growth step: {step!r}")


def step_generated(s: Shape, step: GrowthOp) -> set[Point]:
    """Nodes created by ``step`` (in the coordinates of the result)."""
    if isinstance(step, FullDoublingOp):
        return full_doubling_trace(s, step.direction)[1]
    if isinstance(step, RcOp):
        return rc_trace(s, step)[1]
    if isinstance(step, NodeDoubleOp):
        return node_doubling_trace(s, step)[1]
    if isinstance(step, PureGrowthOp):
        return set(step.targets())
    if isinstance(step, RectGrowthOp):
        return rect_growth_cells(s, step)
    raise TypeError(f"not a growth step: {step!r}")


def replay(s_init: Shape, steps: Constructor | Sequence[GrowthOp]) -> list[Shape]:
    """Apply every step, checking legality, connectivity and strict growth.

    Returns the trace ``[s_init, S_1, ..., S_last]``.
    """
    trace = [s_init]
    cur = s_init
    for i, step in enumerate(steps):
        try:
            nxt = apply_step(cur, step)
        except (ShapeGrowthError, ValueError, TypeError) as exc:
            raise ReplayError(i, str(exc)) from exc
        if len(nxt) <= len(cur):
            raise ReplayError(i, f"size did not grow ({len(cur)} -> {len(nxt)})")
        if not is_connected(nxt.points):
            raise ReplayError(i, "result is disconnected")
        trace.append(nxt)
        cur = nxt
    return trace


def replay_generated(s_init: Shape, steps: Constructor | Sequence[GrowthOp]) -> list[set[Point]]:
    """Generated nodes of every step, aligned with ``replay``'s trace[1:]."""
    out = []
    cur = s_init
    for i, step in enumerate(steps):
        try:
            out.append(step_generated(cur, step))
            cur = apply_step(cur, step)
        except (ShapeGrowthError, ValueError) as exc:
            raise ReplayError(i, str(exc)) from exc
    return out


# ---------------------------------------------------------------------------
# reachability search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReachQuery:
    start: Shape
    target: Shape
    family: str
    max_nodes: int = 200_000
    max_steps: int = 64

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}")
        if self.max_nodes < 1 or self.max_steps < 1:
            raise ValueError("budgets must be positive")
        if len(self.target) < len(self.start):
            raise ValueError("target is smaller than start")


@dataclass
class ReachResult:
    status: str  # "yes" | "no" | "budget-exceeded"
    steps: int | None = None
    witness: Constructor | None = None
    explored: int = 0
    # False when node-breaking search skipped break subsets on large shapes
    exhaustive: bool = True

    def __bool__(self) -> bool:
        return self.status == "yes"


def _node_ops(s: Shape, breaking: bool, exhaustive: list[bool]) -> Iterator[NodeDoubleOp]:
    for p in sorted(s.points):
        for d in DIRECTION_ORDER:
            if not breaking:
                yield NodeDoubleOp(p, d)
                continue
            es = bicolor_edges(s, p, d)
            if len(s) <= BREAK_SUBSET_LIMIT:
                subsets = (c for r in range(len(es) + 1) for c in combinations(es, r))
            else:
                if len(es) > 1:
                    exhaustive[0] = False
                subsets = iter([(), tuple(es)] if es else [()])
            for sub in subsets:
                yield NodeDoubleOp(p, d, "breaking", frozenset(sub))


def expansions(s: Shape, family: str, exhaustive: list[bool] | None = None) -> Iterator[GrowthOp]:
    """Every single legal operation of ``family`` on ``s``."""
    flag = exhaustive if exhaustive is not None else [True]
    if family == "full":
        for d in DIRECTION_ORDER:
            yield FullDoublingOp(d)
    elif family == "rc-single":
        min_x, min_y, max_x, max_y = s.bounds
        for x in range(min_x, max_x + 1):
            yield RcOp("column", Direction.EAST, (x,))
            yield RcOp("column", Direction.WEST, (x,))
        for y in range(min_y, max_y + 1):
            yield RcOp("row", Direction.NORTH, (y,))
            yield RcOp("row", Direction.SOUTH, (y,))
    elif family == "rc-parallel":
        # every non-empty set of lines; only practical for narrow shapes
        min_x, min_y, max_x, max_y = s.bounds
        for axis, lo, hi, dirs in (
            ("column", min_x, max_x, (Direction.EAST, Direction.WEST)),
            ("row", min_y, max_y, (Direction.NORTH, Direction.SOUTH)),
        ):
            lines = range(lo, hi + 1)
            for r in range(1, len(lines) + 1):
                for sub in combinations(lines, r):
                    for d in dirs:
                        yield RcOp(axis, d, sub)
    elif family in ("node-preserving", "node-breaking"):
        yield from _node_ops(s, family == "node-breaking", flag)
    else:
        raise ValueError(f"unknown family {family!r}")


def _search(
    start: Shape,
    family: str,
    max_size: int,
    target: Shape | None,
    max_nodes: int,
    max_steps: int,
) -> tuple[dict[Shape, tuple[Shape, GrowthOp] | None], dict[Shape, int], str, bool]:
    start = normalize(start)
    parents: dict[Shape, tuple[Shape, GrowthOp] | None] = {start: None}
    depth = {start: 0}
    exhaustive = [True]
    if target is not None and start == target:
        return parents, depth, "yes", True
    frontier = [start]
    level = 0
    while frontier:
        if level >= max_steps:
            return parents, depth, "budget-exceeded", exhaustive[0]
        nxt = []
        for state in frontier:
            for op in expansions(state, family, exhaustive):
                try:
                    raw = apply_step(state, op)
                except InvalidOperation:
                    continue
                if len(raw) > max_size:
                    continue
                child = normalize(raw)
                if child in parents:
                    continue
                parents[child] = (state, op)
                depth[child] = level + 1
                if target is not None and child == target:
                    return parents, depth, "yes", exhaustive[0]
                if len(parents) > max_nodes:
                    return parents, depth, "budget-exceeded", exhaustive[0]
                # a state at the size bound cannot grow into anything useful
                if len(child) < max_size:
                    nxt.append(child)
        frontier = nxt
        level += 1
    return parents, depth, "no", exhaustive[0]


def _witness(parents: dict[Shape, tuple[Shape, GrowthOp] | None], start: Shape, goal: Shape) -> Constructor:
    """Steps from ``start`` (any translate of the searched start) to ``goal``."""
    chain: list[GrowthOp] = []
    node = goal
    while parents[node] is not None:
        prev, op = parents[node]  # type: ignore[misc]
        chain.append(op)
        node = prev
    chain.reverse()
    # ops are relative to normalized states; re-address to the replayed shape
    cur = start
    steps = []
    for op in chain:
        min_x, min_y, _, _ = cur.bounds
        real = op.translated(min_x, min_y)
        steps.append(real)
        cur = apply_step(cur, real)
    return Constructor(tuple(steps), start)


def reachable(q: ReachQuery) -> ReachResult:
    start, target = normalize(q.start), normalize(q.target)
    parents, depth, status, exhaustive = _search(
        start, q.family, len(target), target, q.max_nodes, q.max_steps
    )
    if status == "yes":
        return ReachResult("yes", depth[target], _witness(parents, q.start, target), len(parents), exhaustive)
    if status == "no" and not exhaustive:
        # a pruned break-set search cannot certify unreachability
        return ReachResult("budget-exceeded", explored=len(parents), exhaustive=False)
    return ReachResult(status, explored=len(parents), exhaustive=exhaustive)


def min_steps(q: ReachQuery) -> int | None:
    """Length of a shortest constructor, or ``None`` if not found."""
    res = reachable(q)
    return res.steps if res.status == "yes" else None


def reachable_set(start: Shape, family: str, max_size: int, max_nodes: int = 10_000_000) -> dict[Shape, int]:
    """Every normalized shape of size ``<= max_size`` reachable from ``start``,
    mapped to its minimum number of steps."""
    _, depth, status, _ = _search(start, family, max_size, None, max_nodes, max_steps=10**9)
    if status == "budget-exceeded":
        raise ModelError("reachable_set exceeded its node budget")
    return depth


# ---------------------------------------------------------------------------
# baseline by random-order compression
# ---------------------------------------------------------------------------


def compress_randomly(s: Shape, rng: random.Random) -> BaselineProfile:
    """Remove duplicate adjacent columns/rows one at a time in random order,
    accumulating multiplicities, until none remain."""
    s = normalize(s)
    cols = [set() for _ in range(s.width)]
    for x, y in s.points:
        cols[x].add(y)
    col_mult = [1] * s.width
    row_mult = [1] * s.height
    while True:
        rows: list[set[int]] = [set() for _ in range(len(row_mult))]
        for x, ys in enumerate(cols):
            for y in ys:
                rows[y].add(x)
        moves = [("c", j) for j in range(len(cols) - 1) if cols[j] == cols[j + 1]]
        moves += [("r", i) for i in range(len(rows) - 1) if rows[i] == rows[i + 1]]
        if not moves:
            break
        kind, j = rng.choice(moves)
        if kind == "c":
            col_mult[j] += col_mult.pop(j + 1)
            del cols[j + 1]
        else:
            row_mult[j] += row_mult.pop(j + 1)
            cols = [{y if y <= j else y - 1 for y in ys if y != j + 1} for ys in cols]
    pts = frozenset((x, y) for x, ys in enumerate(cols) for y in ys)
    return BaselineProfile(Shape(pts), tuple(col_mult), tuple(row_mult))


# ---------------------------------------------------------------------------
# exhaustive minimum rectangle partition
# ---------------------------------------------------------------------------


def brute_min_partition(s: Shape, max_cells: int = 30) -> int:
    """Exact minimum number of rectangles partitioning ``s``.

    The first uncovered cell in (y, x) order is always the south-west
    corner of the rectangle covering it, so only those rectangles are
    branched on; results are memoized on the uncovered set.
    """
    if len(s) > max_cells:
        raise ValueError(f"brute force limited to {max_cells} cells, got {len(s)}")
    order = sorted(s.points, key=lambda p: (p[1], p[0]))
    bit = {p: 1 << i for i, p in enumerate(order)}
    # row[p][w]: bits of the w cells running east from p
    row: dict[Point, list[int]] = {}
    for x, y in sorted(s.points, reverse=True):
        east = row.get((x + 1, y), [0])
        b = bit[(x, y)]
        row[(x, y)] = [0] + [b | m for m in east]
    # candidate rectangles anchored at each cell, as bitmasks
    anchored: list[list[int]] = []
    for x, y in order:
        masks = []
        for w in range(1, len(row[(x, y)])):
            acc = 0
            h = 0
            while len(row.get((x, y + h), ())) > w:
                acc |= row[(x, y + h)][w]
                masks.append(acc)
                h += 1
        anchored.append(masks)
    full = (1 << len(order)) - 1
    memo: dict[int, int] = {0: 0}

    def solve(mask: int) -> int:
        got = memo.get(mask)
        if got is not None:
            return got
        low = (mask & -mask).bit_length() - 1
        best = len(order)
        for rect in anchored[low]:
            if rect & mask == rect:
                best = min(best, 1 + solve(mask & ~rect))
        memo[mask] = best
        return best

    return solve(full)


__all__ = [
    "FAMILIES",
    "ReachQuery",
    "ReachResult",
    "apply_step",
    "brute_min_partition",
    "compress_randomly",
    "expansions",
    "min_steps",
    "reachable",
    "reachable_set",
    "replay",
    "replay_generated",
    "step_generated",
]
