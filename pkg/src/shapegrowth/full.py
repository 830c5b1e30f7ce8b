"""Full doubling: every node generates a copy in one fixed direction.

``reconfigure`` is the closed form for ``l`` horizontal and ``k`` vertical
full doublings: each node ``u`` is moved to
``(u_x + (2**l - 1) * west_offset, u_y + (2**k - 1) * south_offset)`` and
blown up into a ``2**l x 2**k`` block anchored there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ops import Constructor, FullDoublingOp
from .shape import Direction, Point, Shape, equal_up_to_translation


@dataclass(frozen=True)
class FullDoublingCounts:
    l: int  # horizontal doublings
    k: int  # vertical doublings

    def __post_init__(self):
        if self.l < 0 or self.k < 0:
            raise ValueError("doubling counts must be non-negative")


def _ranks(values: set[int], reverse: bool) -> dict[int, int]:
    return {v: r for r, v in enumerate(sorted(values, reverse=reverse))}


def apply_full_doubling(s: Shape, d: Direction) -> Shape:
    """Double every column (east/west) or row (north/south) of ``s``.

    A line with ``r`` occupied lines before it (counted from the side the
    growth moves away from) is translated by ``r`` and its copy lands one
    further along ``d``.
    """
    pts = s.points
    if d is Direction.EAST:
        rank = _ranks({x for x, _ in pts}, reverse=False)
        out = {(x + rank[x] + b, y) for x, y in pts for b in (0, 1)}
    elif d is Direction.WEST:
        rank = _ranks({x for x, _ in pts}, reverse=True)
        out = {(x - rank[x] - b, y) for x, y in pts for b in (0, 1)}
    elif d is Direction.NORTH:
        rank = _ranks({y for _, y in pts}, reverse=False)
        out = {(x, y + rank[y] + b) for x, y in pts for b in (0, 1)}
    else:
        rank = _ranks({y for _, y in pts}, reverse=True)
        out = {(x, y - rank[y] - b) for x, y in pts for b in (0, 1)}
    return Shape.trusted(frozenset(out))


def full_doubling_trace(s: Shape, d: Direction) -> tuple[dict[Point, Point], set[Point]]:
    """Per-node image map and the set of generated copies."""
    horizontal = d.horizontal
    sign = 1 if d in (Direction.EAST, Direction.NORTH) else -1
    coord = 0 if horizontal else 1
    rank = _ranks({p[coord] for p in s.points}, reverse=sign < 0)
    moved: dict[Point, Point] = {}
    copies: set[Point] = set()
    for p in s.points:
        r = rank[p[coord]]
        if horizontal:
            moved[p] = (p[0] + sign * r, p[1])
            copies.add((p[0] + sign * (r + 1), p[1]))
        else:
            moved[p] = (p[0], p[1] + sign * r)
            copies.add((p[0], p[1] + sign * (r + 1)))
    return moved, copies


def reconfigure(s: Shape, counts: FullDoublingCounts | tuple[int, int]) -> Shape:
    """Closed-form result of ``l`` horizontal and ``k`` vertical full doublings."""
    l, k = (counts.l, counts.k) if isinstance(counts, FullDoublingCounts) else counts
    if l < 0 or k < 0:
        raise ValueError("doubling counts must be non-negative")
    if l == 0 and k == 0:
        return s
    p, q = 1 << l, 1 << k
    min_x, min_y, _, _ = s.bounds
    block = [(i, j) for i in range(p) for j in range(q)]
    out = set()
    for x, y in s.points:
        ax = x + (p - 1) * (x - min_x)
        ay = y + (q - 1) * (y - min_y)
        out.update((ax + i, ay + j) for i, j in block)
    return Shape.trusted(frozenset(out))


def reach_full_doubling(s_init: Shape, s_final: Shape) -> FullDoublingCounts | None:
    """Counts ``(l, k)`` with ``reconfigure(s_init, (l, k))`` equal to ``s_final``
    up to translation, or ``None``. Candidates are tried by ascending ``l``."""
    n_i, n_f = len(s_init), len(s_final)
    if n_f % n_i:
        return None
    ratio = n_f // n_i
    if ratio & (ratio - 1):
        return None
    m = ratio.bit_length() - 1
    for l in range(m + 1):
        k = m - l
        # Width and height scale exactly by 2**l and 2**k.
        if s_init.width << l != s_final.width or s_init.height << k != s_final.height:
            continue
        if equal_up_to_translation(reconfigure(s_init, (l, k)), s_final):
            return FullDoublingCounts(l, k)
    return None


def full_doubling_constructor(counts: FullDoublingCounts, initial: Shape | None = None) -> Constructor:
    """``l`` east doublings followed by ``k`` north doublings."""
    steps = [FullDoublingOp(Direction.EAST)] * counts.l + [FullDoublingOp(Direction.NORTH)] * counts.k
    return Constructor(tuple(steps), initial)
