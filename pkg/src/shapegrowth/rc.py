"""Row/column (RC) doubling: decision and logarithmic constructor synthesis."""

from __future__ import annotations

from bisect import bisect_left, bisect_right

from .errors import InvalidOperation, NotReachable
from .ops import Constructor, RcOp
from .shape import BaselineProfile, Direction, Point, Shape, baseline


def _check_indices(s: Shape, op: RcOp) -> int:
    coord = 0 if op.axis == "column" else 1
    occupied = {p[coord] for p in s.points}
    missing = [i for i in op.indices if i not in occupied]
    if missing:
        raise InvalidOperation(f"{op.axis}(s) {missing} of the shape are empty")
    return coord


def rc_trace(s: Shape, op: RcOp) -> tuple[dict[Point, Point], set[Point]]:
    """Image of every node under ``op`` and the set of generated copies."""
    coord = _check_indices(s, op)
    dsel = op.indices
    forward = op.direction in (Direction.EAST, Direction.NORTH)
    moved: dict[Point, Point] = {}
    copies: set[Point] = set()
    selected = set(dsel)
    for p in s.points:
        t = p[coord]
        if forward:
            new_t, copy_t = t + bisect_left(dsel, t), t + bisect_left(dsel, t) + 1
        else:
            shift = len(dsel) - bisect_right(dsel, t)
            new_t, copy_t = t - shift, t - shift - 1
        moved[p] = (new_t, p[1]) if coord == 0 else (p[0], new_t)
        if t in selected:
            copies.add((copy_t, p[1]) if coord == 0 else (p[0], copy_t))
    return moved, copies


def apply_rc(s: Shape, op: RcOp) -> Shape:
    moved, copies = rc_trace(s, op)
    copies.update(moved.values())
    return Shape.trusted(frozenset(copies))


def apply_single_rc(s: Shape, axis: str, d: Direction, index: int) -> Shape:
    return apply_rc(s, RcOp(axis, d, (index,)))


def serialize_parallel(s: Shape, op: RcOp) -> list[RcOp]:
    """Split ``op`` into single-line operations, processed in ascending line order.

    Each index is re-addressed to the coordinates of the shape produced by
    the operations before it.
    """
    _check_indices(s, op)
    forward = op.direction in (Direction.EAST, Direction.NORTH)
    done: list[int] = []
    out = []
    for t in op.indices:
        cur = t
        for c in done:
            # a doubled line at c pushes lines beyond it by one
            if forward and cur > c:
                cur += 1
            elif not forward and cur < c:
                cur -= 1
        out.append(RcOp(op.axis, op.direction, (cur,)))
        done.append(cur)
    return out


def decide_rc(s_init: Shape, s_final: Shape) -> bool:
    """Whether ``s_final`` is reachable from ``s_init`` by RC doubling."""
    return rc_reachable_profiles(baseline(s_init), baseline(s_final))


def rc_reachable_profiles(pi: BaselineProfile, pf: BaselineProfile) -> bool:
    if pi.baseline != pf.baseline:  # both are normalized
        return False
    return all(a <= b for a, b in zip(pi.col_mult, pf.col_mult)) and all(
        a <= b for a, b in zip(pi.row_mult, pf.row_mult)
    )


def _phase(current: list[int], target: tuple[int, ...], start: int, axis: str, d: Direction) -> list[RcOp]:
    """Parallel doubling schedule taking run lengths ``current`` to ``target``.

    A run with ``m`` copies and target ``M`` doubles all its copies while
    ``2m <= M`` and otherwise its ``M - m`` westmost (southmost) copies.
    """
    steps = []
    cur = list(current)
    while cur != list(target):
        indices = []
        pos = start
        nxt = []
        for m, big_m in zip(cur, target):
            if m < big_m:
                cnt = m if 2 * m <= big_m else big_m - m
                indices.extend(range(pos, pos + cnt))
                nxt.append(m + cnt)
            else:
                nxt.append(m)
            pos += m
        steps.append(RcOp(axis, d, tuple(indices)))
        cur = nxt
    return steps


def synthesize_rc(s_init: Shape, s_final: Shape) -> Constructor:
    """Parallel RC constructor from ``s_init`` to ``s_final`` (up to translation).

    Columns are completed first (east doublings), then rows (north
    doublings); all runs advance in the same time-steps.
    """
    pi, pf = baseline(s_init), baseline(s_final)
    if not rc_reachable_profiles(pi, pf):
        raise NotReachable("target is not reachable from the initial shape by RC doubling")
    min_x, min_y, _, _ = s_init.bounds
    steps = _phase(list(pi.col_mult), pf.col_mult, min_x, "column", Direction.EAST)
    steps += _phase(list(pi.row_mult), pf.row_mult, min_y, "row", Direction.NORTH)
    return Constructor(tuple(steps), s_init)
