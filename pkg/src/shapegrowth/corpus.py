"""Shape generators for tests, benchmarks and the CLI."""

from __future__ import annotations

import random
from typing import Iterator

from .shape import NEIGHBOR_STEPS, Point, Shape, neighbors, rectangle


def random_shape(rng: random.Random, n: int) -> Shape:
    """Eden growth: start from the origin, repeatedly occupy a random empty
    neighbour of the current shape."""
    if n < 1:
        raise ValueError("shape size must be positive")
    pts = {(0, 0)}
    boundary = list(neighbors((0, 0)))
    while len(pts) < n:
        p = boundary.pop(rng.randrange(len(boundary)))
        if p in pts:
            continue
        pts.add(p)
        boundary.extend(q for q in neighbors(p) if q not in pts)
    return Shape.trusted(frozenset(pts))


def random_subshape(rng: random.Random, s: Shape, n: int) -> Shape:
    """A random connected subset of ``s`` with ``n`` nodes."""
    if not 1 <= n <= len(s):
        raise ValueError("sub-shape size out of range")
    start = rng.choice(s.sorted_points())
    pts = {start}
    boundary = [q for q in neighbors(start) if q in s]
    while len(pts) < n:
        p = boundary.pop(rng.randrange(len(boundary)))
        if p in pts:
            continue
        pts.add(p)
        boundary.extend(q for q in neighbors(p) if q in s and q not in pts)
    return Shape.trusted(frozenset(pts))


def fixed_polyominoes(n: int) -> Iterator[Shape]:
    """Every fixed polyomino with exactly ``n`` cells, each once, normalized.

    Redelmeier's method: cells are grown from the lowest-leftmost cell,
    which is pinned at the origin, using an untried set so that no shape is
    produced twice.
    """
    if n < 1:
        return

    def allowed(p: Point) -> bool:
        x, y = p
        return y > 0 or (y == 0 and x >= 0)

    cells: list[Point] = []
    occupied: set[Point] = set()
    seen: set[Point] = {(0, 0)}

    def rec(untried: list[Point]) -> Iterator[Shape]:
        untried = list(untried)
        while untried:
            p = untried.pop()
            cells.append(p)
            occupied.add(p)
            if len(cells) == n:
                min_x = min(x for x, _ in cells)
                yield Shape.trusted(frozenset((x - min_x, y) for x, y in cells))
            else:
                added = []
                for dx, dy in NEIGHBOR_STEPS:
                    q = (p[0] + dx, p[1] + dy)
                    if allowed(q) and q not in seen:
                        seen.add(q)
                        added.append(q)
                yield from rec(untried + added)
                for q in added:
                    seen.discard(q)
            cells.pop()
            occupied.discard(p)

    yield from rec([(0, 0)])


def exact_staircase(n: int) -> Shape:
    """Staircase whose every step is two nodes: (0,0),(1,0),(1,1),(2,1),..."""
    if n < 1:
        raise ValueError("staircase size must be positive")
    pts = []
    x = y = 0
    for i in range(n):
        pts.append((x, y))
        if i % 2 == 0:
            x += 1
        else:
            y += 1
    return Shape.trusted(frozenset(pts))


NAMED_SHAPES: dict[str, Shape] = {
    "singleton": Shape({(0, 0)}),
    "domino": Shape({(0, 0), (1, 0)}),
    "l-tromino": Shape({(0, 0), (1, 0), (0, 1)}),
    "l-tetromino": Shape({(1, 1), (1, 2), (1, 3), (2, 1)}),
    "plus": Shape({(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)}),
    "square2": rectangle((0, 0), 2, 2),
    "line4": rectangle((0, 0), 4, 1),
}
