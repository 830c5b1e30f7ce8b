"""General doubling: single-node doubling, pure growth, in-place rectangle
growth, and the universal constructors built from them."""

from __future__ import annotations

from typing import Callable

from .errors import InvalidOperation, ModelError
from .ops import (
    Constructor,
    NodeDoubleOp,
    PureGrowthOp,
    RectBlock,
    RectGrowthOp,
)
from .partition import RectPartition, min_partition
from .rc import synthesize_rc
from .shape import (
    DIRECTION_ORDER,
    NEIGHBOR_STEPS,
    Direction,
    Edge,
    Point,
    Rect,
    Shape,
    baseline,
    edge,
)

# Rotations taking each direction onto east, with their inverses. Node
# doubling is computed in the east frame and mapped back.
_TO_EAST: dict[Direction, Callable[[Point], Point]] = {
    Direction.EAST: lambda p: p,
    Direction.NORTH: lambda p: (p[1], -p[0]),
    Direction.WEST: lambda p: (-p[0], -p[1]),
    Direction.SOUTH: lambda p: (-p[1], p[0]),
}
_FROM_EAST: dict[Direction, Callable[[Point], Point]] = {
    Direction.EAST: lambda p: p,
    Direction.NORTH: lambda p: (-p[1], p[0]),
    Direction.WEST: lambda p: (-p[0], -p[1]),
    Direction.SOUTH: lambda p: (p[1], -p[0]),
}


def _grow_region(start: Point, allowed: Callable[[Point], bool]) -> set[Point]:
    region = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for dx, dy in NEIGHBOR_STEPS:
            q = (x + dx, y + dy)
            if q not in region and allowed(q):
                region.add(q)
                stack.append(q)
    return region


def _split_east(pts: frozenset[Point] | set[Point], u: Point) -> tuple[set[Point], set[Point], list[Edge]]:
    """Stationary side ``S'(u)``, translating side ``S'(v)`` and the bicolor
    edges other than ``uv``, for ``u`` doubling east into an occupied cell."""
    j = u[0]
    v = (j + 1, u[1])
    stay = _grow_region(u, lambda q: q in pts and q[0] <= j)
    move = _grow_region(v, lambda q: q in pts and q not in stay)
    bicolor = []
    for a in stay:
        if a[0] == j:
            b = (j + 1, a[1])
            if b in move and b != v:
                bicolor.append((a, b))
    return stay, move, bicolor


def bicolor_edges(s: Shape, node: Point, d: Direction) -> list[Edge]:
    """Bicolor edges (excluding the doubling edge itself) that a doubling of
    ``node`` towards ``d`` must either grow over or break."""
    if node not in s:
        raise InvalidOperation(f"node {node} is not in the shape")
    dx, dy = d.vector
    if (node[0] + dx, node[1] + dy) not in s:
        return []
    to_e, from_e = _TO_EAST[d], _FROM_EAST[d]
    pts = {to_e(p) for p in s.points}
    _, _, bicolor = _split_east(pts, to_e(node))
    return sorted(edge(from_e(a), from_e(b)) for a, b in bicolor)


def node_doubling_trace(s: Shape, op: NodeDoubleOp) -> tuple[dict[Point, Point], set[Point]]:
    """Image of every node under ``op`` and the set of generated nodes."""
    u, d = op.node, op.direction
    if u not in s:
        raise InvalidOperation(f"node {u} is not in the shape")
    dx, dy = d.vector
    v = (u[0] + dx, u[1] + dy)
    if v not in s:
        if op.breaks:
            raise InvalidOperation("doubling into an empty cell has no bicolor edges to break")
        return {p: p for p in s.points}, {v}

    to_e, from_e = _TO_EAST[d], _FROM_EAST[d]
    pts = {to_e(p) for p in s.points}
    ue = to_e(u)
    stay, move, bicolor = _split_east(pts, ue)

    breaks = {edge(to_e(a), to_e(b)) for a, b in op.breaks}
    allowed = {edge(a, b) for a, b in bicolor}
    if breaks - allowed:
        bad = sorted(edge(from_e(a), from_e(b)) for a, b in breaks - allowed)
        raise InvalidOperation(f"edges {bad} are not breakable bicolor edges of this operation")

    moved: dict[Point, Point] = {}
    for p in pts:
        q = (p[0] + 1, p[1]) if p in move else p
        moved[from_e(p)] = from_e(q)
    generated = {from_e((ue[0] + 1, ue[1]))}
    for a, b in bicolor:
        if edge(a, b) not in breaks:
            generated.add(from_e(b))  # b's old cell, vacated by the translation

    images = set(moved.values())
    if len(images) != len(moved) or images & generated:
        raise ModelError(f"doubling of {u} towards {d.value} maps two nodes onto one cell")
    return moved, generated


def apply_node_doubling(s: Shape, op: NodeDoubleOp) -> Shape:
    moved, generated = node_doubling_trace(s, op)
    out = set(moved.values())
    out |= generated
    return Shape.trusted(frozenset(out))


def apply_pure_growth(s: Shape, op: PureGrowthOp) -> Shape:
    targets = op.targets()
    for (p, _), t in zip(op.generators, targets):
        if p not in s:
            raise InvalidOperation(f"generator {p} is not in the shape")
        if t in s:
            raise InvalidOperation(f"target {t} of generator {p} is occupied")
    if len(set(targets)) != len(targets):
        raise InvalidOperation("two generators target the same cell")
    return Shape.trusted(s.points | frozenset(targets))


def rect_growth_cells(s: Shape, op: RectGrowthOp) -> set[Point]:
    """Cells added by ``op``; checks footprint containment and emptiness."""
    d = op.direction
    added: set[Point] = set()
    footprints: list[Rect] = []
    for b in op.blocks:
        if not b.footprint.contains_rect(b.current):
            raise InvalidOperation(f"{b.current} lies outside its footprint {b.footprint}")
        extent = b.current.w if d.horizontal else b.current.h
        if not 1 <= b.count <= extent:
            raise InvalidOperation(f"cannot double {b.count} of {extent} lines of {b.current}")
        grown = b.grown(d)
        if not b.footprint.contains_rect(grown):
            raise InvalidOperation(f"growth of {b.current} leaves footprint {b.footprint}")
        cur = b.current.cells()
        if not cur <= s.points:
            raise InvalidOperation(f"rectangle {b.current} is not fully built")
        new = grown.cells() - cur
        if new & s.points or new & added:
            raise InvalidOperation(f"growth of {b.current} collides with existing nodes")
        if any(_overlap(f, b.footprint) for f in footprints):
            raise InvalidOperation("footprints of one step overlap")
        footprints.append(b.footprint)
        added |= new
    return added


def _overlap(a: Rect, b: Rect) -> bool:
    return (
        a.origin[0] < b.origin[0] + b.w
        and b.origin[0] < a.origin[0] + a.w
        and a.origin[1] < b.origin[1] + b.h
        and b.origin[1] < a.origin[1] + a.h
    )


def apply_rect_growth(s: Shape, op: RectGrowthOp) -> Shape:
    return Shape.trusted(s.points | frozenset(rect_growth_cells(s, op)))


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def _level_steps(children: dict[Point, dict[Direction, Point]]) -> list[PureGrowthOp]:
    """One growth step per direction (N, E, S, W) for one BFS level."""
    steps = []
    for d in DIRECTION_ORDER:
        gens = {p: d for p, kids in children.items() if d in kids}
        if gens:
            steps.append(PureGrowthOp.from_mapping(gens))
    return steps


def bfs_levels(s_init: Shape, s_final: Shape) -> list[dict[Point, dict[Direction, Point]]]:
    """BFS spanning forest of ``s_final - s_init`` as per-level child maps.

    Each component of the difference hangs off one root in ``s_init`` (its
    smallest adjacent point) and is explored in N, E, S, W order.
    """
    if not s_init.points <= s_final.points:
        raise InvalidOperation("initial shape is not contained in the final shape")
    rest = s_final.points - s_init.points
    levels: list[dict[Point, dict[Direction, Point]]] = []
    frontier: list[Point] = []
    # roots: group the components of the difference
    seen: set[Point] = set()
    roots: dict[Point, list[Point]] = {}
    for start in sorted(rest):
        if start in seen:
            continue
        comp = _grow_region(start, lambda q: q in rest)
        seen |= comp
        anchors = sorted(
            (x + dx, y + dy)
            for x, y in comp
            for dx, dy in NEIGHBOR_STEPS
            if (x + dx, y + dy) in s_init.points
        )
        roots.setdefault(anchors[0], [])
    frontier = sorted(roots)
    placed = set(s_init.points)
    while frontier:
        level: dict[Point, dict[Direction, Point]] = {}
        nxt = []
        for p in frontier:
            for d in DIRECTION_ORDER:
                dx, dy = d.vector
                q = (p[0] + dx, p[1] + dy)
                if q in rest and q not in placed:
                    placed.add(q)
                    level.setdefault(p, {})[d] = q
                    nxt.append(q)
        if not level:
            break
        levels.append(level)
        frontier = nxt
    if len(placed) != len(s_final):
        raise ModelError("BFS forest does not span the target")
    return levels


def bfs_constructor(s_init: Shape, s_final: Shape) -> Constructor:
    """Linear-time-step constructor by pure growth along BFS levels.

    Requires ``s_init`` to be a subset of ``s_final``; replay reproduces
    ``s_final`` exactly. Each level takes at most four time-steps.
    """
    steps: list[PureGrowthOp] = []
    for level in bfs_levels(s_init, s_final):
        steps.extend(_level_steps(level))
    return Constructor(tuple(steps), s_init)


def embed(s_init: Shape, s_final: Shape) -> tuple[int, int] | None:
    """A translation placing ``s_init`` inside ``s_final``, or ``None``."""
    anchor = min(s_init.points)
    others = [(x - anchor[0], y - anchor[1]) for x, y in s_init.points]
    fp = s_final.points
    for tx, ty in sorted(fp):
        if all((tx + dx, ty + dy) in fp for dx, dy in others):
            return (tx - anchor[0], ty - anchor[1])
    return None


def baseline_constructor(s_final: Shape) -> Constructor:
    """Grow the baseline of ``s_final`` by BFS from one node, then expand it
    to ``s_final`` with the RC schedule."""
    base = baseline(s_final).baseline
    u0 = min(base.points)
    start = Shape.trusted(frozenset([u0]))
    head = bfs_constructor(start, base)
    tail = synthesize_rc(base, s_final)
    return Constructor(head.steps + tail.steps, start)


# -- rectangle-partition constructor ----------------------------------------


def _doubling_count(m: int, remaining: int) -> int:
    """Time-steps to extend a run of ``m`` lines by ``remaining`` lines."""
    steps = 0
    while remaining > 0:
        remaining -= min(m, remaining)
        m *= 2
        steps += 1
    return steps


def _seed_cost(rect: Rect, c: Point) -> int:
    ox, oy = rect.origin
    east = ox + rect.w - 1 - c[0]
    west = c[0] - ox
    north = oy + rect.h - 1 - c[1]
    south = c[1] - oy
    return (
        _doubling_count(1, east)
        + _doubling_count(1 + east, west)
        + _doubling_count(1, north)
        + _doubling_count(1 + north, south)
    )


_GROWTH_ORDER = (Direction.EAST, Direction.WEST, Direction.NORTH, Direction.SOUTH)


def _remaining(footprint: Rect, cur: Rect, d: Direction) -> int:
    if d is Direction.EAST:
        return footprint.origin[0] + footprint.w - (cur.origin[0] + cur.w)
    if d is Direction.WEST:
        return cur.origin[0] - footprint.origin[0]
    if d is Direction.NORTH:
        return footprint.origin[1] + footprint.h - (cur.origin[1] + cur.h)
    return cur.origin[1] - footprint.origin[1]


def _grow_in_place(seeds: dict[Rect, Point]) -> list[RectGrowthOp]:
    """Grow every footprint from its seed cell; all footprints advance in
    parallel, one direction per time-step (E, W, N, S phases)."""
    current = {fp: Rect(c, 1, 1) for fp, c in seeds.items()}
    steps = []
    for d in _GROWTH_ORDER:
        while True:
            blocks = []
            for fp in sorted(current):
                cur = current[fp]
                rem = _remaining(fp, cur, d)
                if rem <= 0:
                    continue
                extent = cur.w if d.horizontal else cur.h
                block = RectBlock(fp, cur, min(extent, rem))
                blocks.append(block)
                current[fp] = block.grown(d)
            if not blocks:
                break
            steps.append(RectGrowthOp(d, tuple(blocks)))
    return steps


def _choose_seed(child: Rect, parent: Rect) -> tuple[Point, Point]:
    """Cheapest (parent cell, child cell) contact pair; corners win ties by cost."""
    candidates = []
    for c in child.cells():
        for dx, dy in NEIGHBOR_STEPS:
            p = (c[0] + dx, c[1] + dy)
            if p in parent:
                candidates.append((_seed_cost(child, c), c, p))
    if not candidates:
        raise ModelError(f"{child} is not adjacent to its parent {parent}")
    _, c, p = min(candidates)
    return p, c


def partition_constructor(s_final: Shape, partition: RectPartition | None = None) -> Constructor:
    """Constructor from one node following a minimum rectangle partition.

    The maximum-area rectangle is grown in place from its south-west
    corner; then, level by level of the partition's spanning tree, every
    child rectangle is seeded from a cell of its parent and grown in place,
    children of one level in parallel.
    """
    part = partition if partition is not None else min_partition(s_final)
    root = part.rects[part.root]
    start = Shape.trusted(frozenset([root.origin]))
    steps: list = list(_grow_in_place({root: root.origin}))
    for level in part.levels()[1:]:
        seeds: dict[Rect, Point] = {}
        gens: dict[Direction, dict[Point, Direction]] = {}
        for idx in level:
            child = part.rects[idx]
            p, c = _choose_seed(child, part.rects[part.parent[idx]])
            d = _direction_between(p, c)
            gens.setdefault(d, {})[p] = d
            seeds[child] = c
        for d in DIRECTION_ORDER:
            if d in gens:
                steps.append(PureGrowthOp.from_mapping(gens[d]))
        steps.extend(_grow_in_place(seeds))
    return Constructor(tuple(steps), start)


def _direction_between(p: Point, q: Point) -> Direction:
    delta = (q[0] - p[0], q[1] - p[1])
    for d in Direction:
        if d.vector == delta:
            return d
    raise ModelError(f"{p} and {q} are not neighbours")
