"""Minimum partition of a shape into rectangles, plus the rectangle
adjacency graph and its rooted BFS spanning tree.

Each node is treated as a unit cell, so the shape is an orthogonal polygon
(possibly with holes). The partition is built from the classical chord
argument: reflex vertices that can be paired by axis-parallel interior
chords are resolved two at a time, using a maximum set of pairwise
non-intersecting chords (a maximum independent set of the bipartite
horizontal/vertical chord intersection graph, found from a maximum
matching). Every other reflex vertex is resolved by a vertical cut.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Any, Iterable, Mapping

from .errors import FormatError, ModelError
from .ops import rect_from_dict, rect_to_dict
from .shape import Point, Rect, Shape

Chord = tuple[Point, Point]


@dataclass(frozen=True)
class RectPartition:
    """Rectangles, their adjacency lists and a BFS tree rooted at ``root``.

    ``parent[i]`` is the tree parent of rectangle ``i`` (``-1`` for the root).
    """

    rects: tuple[Rect, ...]
    adjacency: tuple[tuple[int, ...], ...]
    parent: tuple[int, ...]
    root: int

    def __len__(self) -> int:
        return len(self.rects)

    @property
    def h(self) -> int:
        return len(self.rects)

    def levels(self) -> list[list[int]]:
        """Rectangle indices grouped by tree depth (level 0 is the root)."""
        depth = {self.root: 0}
        order = [self.root]
        children: dict[int, list[int]] = {}
        for i, p in enumerate(self.parent):
            if p >= 0:
                children.setdefault(p, []).append(i)
        out: list[list[int]] = [[self.root]]
        for i in order:
            for c in children.get(i, []):
                depth[c] = depth[i] + 1
                order.append(c)
                if len(out) <= depth[c]:
                    out.append([])
                out[depth[c]].append(c)
        return out

    def cells(self) -> set[Point]:
        out: set[Point] = set()
        for r in self.rects:
            out |= r.cells()
        return out

    def to_dict(self) -> dict:
        return {
            "rects": [rect_to_dict(r) for r in self.rects],
            "parent": list(self.parent),
            "root": self.root,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> RectPartition:
        try:
            rects = [rect_from_dict(r) for r in data["rects"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad partition: {exc}") from exc
        part = build_adjacency_and_tree(rects)
        if "parent" in data and list(data["parent"]) != list(part.parent):
            # Keep a stored tree if it is a valid spanning tree of the adjacency.
            parent = tuple(int(p) for p in data["parent"])
            root = int(data.get("root", part.root))
            _check_tree(part.adjacency, parent, root)
            return cls(part.rects, part.adjacency, parent, root)
        return part


def _check_tree(adjacency: tuple[tuple[int, ...], ...], parent: tuple[int, ...], root: int) -> None:
    if len(parent) != len(adjacency) or parent[root] != -1:
        raise FormatError("parent array does not describe a tree rooted at 'root'")
    for i, p in enumerate(parent):
        if i != root and p not in adjacency[i]:
            raise FormatError(f"rectangle {i} is not adjacent to its parent {p}")
    for i in range(len(parent)):
        seen = set()
        while i != root:
            if i in seen:
                raise FormatError("parent array contains a cycle")
            seen.add(i)
            i = parent[i]


# ---------------------------------------------------------------------------
# adjacency and spanning tree
# ---------------------------------------------------------------------------


def build_adjacency_and_tree(rects: Iterable[Rect]) -> RectPartition:
    """Adjacency graph of disjoint rectangles and a BFS tree rooted at a
    maximum-area rectangle (ties: smallest south-west corner)."""
    rects = tuple(rects)
    if not rects:
        raise ValueError("no rectangles")
    owner: dict[Point, int] = {}
    for i, r in enumerate(rects):
        for c in r.cells():
            if c in owner:
                raise ValueError(f"rectangles {owner[c]} and {i} overlap at {c}")
            owner[c] = i
    adj: list[set[int]] = [set() for _ in rects]
    for (x, y), i in owner.items():
        for q in ((x + 1, y), (x, y + 1)):
            j = owner.get(q)
            if j is not None and j != i:
                adj[i].add(j)
                adj[j].add(i)
    adjacency = tuple(tuple(sorted(a)) for a in adj)
    root = min(range(len(rects)), key=lambda i: (-rects[i].area, rects[i].origin))
    parent = [-2] * len(rects)
    parent[root] = -1
    queue = deque([root])
    while queue:
        i = queue.popleft()
        for j in adjacency[i]:
            if parent[j] == -2:
                parent[j] = i
                queue.append(j)
    if -2 in parent:
        raise ValueError("rectangles do not form a connected shape")
    return RectPartition(rects, adjacency, tuple(parent), root)


# ---------------------------------------------------------------------------
# chord construction
# ---------------------------------------------------------------------------


class _Polygon:
    """Lattice-vertex view of a cell set: a vertex ``(X, Y)`` is surrounded
    by cells NE ``(X, Y)``, NW ``(X-1, Y)``, SW ``(X-1, Y-1)``, SE ``(X, Y-1)``."""

    def __init__(self, cells: frozenset[Point]):
        self.cells = cells
        verts = {(x + a, y + b) for x, y in cells for a in (0, 1) for b in (0, 1)}
        self.interior: set[Point] = set()
        # reflex vertex -> (horizontal ray dx, vertical ray dy)
        self.reflex: dict[Point, tuple[int, int]] = {}
        for X, Y in verts:
            ne = (X, Y) in cells
            nw = (X - 1, Y) in cells
            sw = (X - 1, Y - 1) in cells
            se = (X, Y - 1) in cells
            k = ne + nw + sw + se
            if k == 4:
                self.interior.add((X, Y))
            elif k == 3:
                # interior rays point away from the empty quadrant
                if not ne:
                    self.reflex[(X, Y)] = (-1, -1)
                elif not nw:
                    self.reflex[(X, Y)] = (1, -1)
                elif not sw:
                    self.reflex[(X, Y)] = (1, 1)
                else:
                    self.reflex[(X, Y)] = (-1, 1)

    def chord_from(self, a: Point, horizontal: bool) -> Point | None:
        """Other end of the chord along ``a``'s interior ray, if that ray ends
        at a reflex vertex whose own ray points back."""
        hx, vy = self.reflex[a]
        step = (hx, 0) if horizontal else (0, vy)
        x, y = a
        while True:
            x, y = x + step[0], y + step[1]
            p = (x, y)
            if p in self.interior:
                continue
            back = self.reflex.get(p)
            if back is None:
                return None
            if horizontal:
                return p if back[0] == -hx else None
            return p if back[1] == -vy else None

    def chords(self) -> tuple[list[Chord], list[Chord]]:
        hs, vs = set(), set()
        for a in self.reflex:
            b = self.chord_from(a, True)
            if b is not None:
                hs.add((min(a, b), max(a, b)))
            b = self.chord_from(a, False)
            if b is not None:
                vs.add((min(a, b), max(a, b)))
        return sorted(hs), sorted(vs)


def _crosses(hc: Chord, vc: Chord) -> bool:
    (hx1, hy), (hx2, _) = hc
    (vx, vy1), (_, vy2) = vc
    return hx1 <= vx <= hx2 and vy1 <= hy <= vy2


def _max_matching(adj: list[list[int]], n_right: int) -> list[int]:
    """Augmenting-path bipartite matching; returns ``match_left`` (-1 = free)."""
    match_left = [-1] * len(adj)
    match_right = [-1] * n_right

    def augment(u: int, seen: list[bool]) -> bool:
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                if match_right[v] < 0 or augment(match_right[v], seen):
                    match_left[u] = v
                    match_right[v] = u
                    return True
        return False

    for u in range(len(adj)):
        augment(u, [False] * n_right)
    return match_left


def max_independent_chords(hs: list[Chord], vs: list[Chord]) -> list[Chord]:
    """A maximum set of pairwise non-intersecting chords (König's theorem)."""
    adj = [[j for j, vc in enumerate(vs) if _crosses(hc, vc)] for hc in hs]
    if not any(adj):
        return hs + vs
    match_left = _max_matching(adj, len(vs))
    match_right = {v: u for u, v in enumerate(match_left) if v >= 0}
    # Alternating reachability from free left vertices.
    z_left = {u for u, v in enumerate(match_left) if v < 0}
    z_right: set[int] = set()
    queue = deque(z_left)
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in z_right:
                z_right.add(v)
                w = match_right.get(v)
                if w is not None and w not in z_left:
                    z_left.add(w)
                    queue.append(w)
    chosen = [hs[u] for u in sorted(z_left)]
    chosen += [vs[v] for v in range(len(vs)) if v not in z_right]
    return chosen


def _add_segment(cuts: set, points: set[Point], a: Point, b: Point) -> None:
    (x1, y1), (x2, y2) = sorted((a, b))
    if y1 == y2:
        for x in range(x1, x2):
            cuts.add(("h", x, y1))
    else:
        for y in range(y1, y2):
            cuts.add(("v", x1, y))
    if y1 == y2:
        points.update((x, y1) for x in range(x1, x2 + 1))
    else:
        points.update((x1, y) for y in range(y1, y2 + 1))


def partition_rects(s: Shape) -> list[Rect]:
    """Rectangles of a minimum partition of ``s``, sorted by origin."""
    cells = s.points
    poly = _Polygon(cells)
    if not poly.reflex:
        min_x, min_y, _, _ = s.bounds
        return [Rect((min_x, min_y), s.width, s.height)]
    hs, vs = poly.chords()
    chosen = max_independent_chords(hs, vs)

    cuts: set = set()
    on_cut: set[Point] = set()
    resolved: set[Point] = set()
    for a, b in chosen:
        _add_segment(cuts, on_cut, a, b)
        resolved.add(a)
        resolved.add(b)
    for a in sorted(poly.reflex):
        if a in resolved:
            continue
        hx, vy = poly.reflex[a]
        X, Y = a
        first_h = ("h", X if hx > 0 else X - 1, Y)
        first_v = ("v", X, Y if vy > 0 else Y - 1)
        if first_h in cuts or first_v in cuts:
            continue
        # extend a vertical cut until the boundary or an existing cut
        on_cut.add(a)
        y = Y
        while True:
            cuts.add(("v", X, y if vy > 0 else y - 1))
            y += vy
            p = (X, y)
            if p not in poly.interior or p in on_cut:
                on_cut.add(p)
                break
            on_cut.add(p)

    return _regions(cells, cuts)


def _regions(cells: frozenset[Point], cuts: set) -> list[Rect]:
    seen: set[Point] = set()
    rects = []
    for start in sorted(cells):
        if start in seen:
            continue
        seen.add(start)
        region = [start]
        stack = [start]
        while stack:
            x, y = stack.pop()
            for q, cut in (
                ((x + 1, y), ("v", x + 1, y)),
                ((x - 1, y), ("v", x, y)),
                ((x, y + 1), ("h", x, y + 1)),
                ((x, y - 1), ("h", x, y)),
            ):
                if q in cells and q not in seen and cut not in cuts:
                    seen.add(q)
                    region.append(q)
                    stack.append(q)
        xs = [p[0] for p in region]
        ys = [p[1] for p in region]
        r = Rect((min(xs), min(ys)), max(xs) - min(xs) + 1, max(ys) - min(ys) + 1)
        if r.area != len(region):
            raise ModelError(f"partition region at {start} is not a rectangle")
        rects.append(r)
    rects.sort()
    return rects


def min_partition(s: Shape) -> RectPartition:
    """Minimum rectangle partition of ``s`` with adjacency graph and BFS tree."""
    return build_adjacency_and_tree(partition_rects(s))


def count_holes(s: Shape) -> int:
    """Bounded components of the complement; empty cells touching diagonally
    are joined, since a corner contact does not enclose anything."""
    min_x, min_y, max_x, max_y = s.bounds
    cells = s.points
    empty = {
        (x, y)
        for x in range(min_x - 1, max_x + 2)
        for y in range(min_y - 1, max_y + 2)
        if (x, y) not in cells
    }
    comps = 0
    while empty:
        comps += 1
        stack = [empty.pop()]
        while stack:
            x, y = stack.pop()
            for dx in (-1, 0, 1):
                for dy in (-1, 0, 1):
                    q = (x + dx, y + dy)
                    if q in empty:
                        empty.discard(q)
                        stack.append(q)
    return comps - 1


@dataclass(frozen=True)
class ChordSummary:
    reflex: int
    horizontal_chords: int
    vertical_chords: int
    independent_chords: int
    holes: int

    @property
    def predicted(self) -> int:
        """Minimum partition size from the reflex/chord/hole identity."""
        return self.reflex - self.independent_chords - self.holes + 1


def chord_summary(s: Shape) -> ChordSummary:
    poly = _Polygon(s.points)
    hs, vs = poly.chords()
    return ChordSummary(len(poly.reflex), len(hs), len(vs), len(max_independent_chords(hs, vs)), count_holes(s))
