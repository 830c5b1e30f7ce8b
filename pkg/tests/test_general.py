from __future__ import annotations

import math
import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shapegrowth.corpus import random_subshape
from shapegrowth.errors import InvalidOperation
from shapegrowth.general import (
    apply_node_doubling,
    apply_pure_growth,
    apply_rect_growth,
    baseline_constructor,
    bfs_constructor,
    bfs_levels,
    bicolor_edges,
    embed,
    node_doubling_trace,
    partition_constructor,
)
from shapegrowth.ops import NodeDoubleOp, PureGrowthOp, RectBlock, RectGrowthOp
from shapegrowth.oracle import replay
from shapegrowth.partition import min_partition
from shapegrowth.shape import (
    Direction,
    Rect,
    Shape,
    baseline,
    edge,
    equal_up_to_translation,
    is_connected,
    rectangle,
)

from conftest import shapes

E, N, W, S = Direction.EAST, Direction.NORTH, Direction.WEST, Direction.SOUTH
SINGLE = Shape({(0, 0)})
PLUS = Shape({(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)})
STAIRS = Shape({(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2)})


def _flood(start, allowed):
    seen, stack = {start}, [start]
    while stack:
        x, y = stack.pop()
        for q in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if q in allowed and q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def reference_node_doubling(s: Shape, u, d: Direction, breaks=frozenset()):
    """Direction-generic restatement used as an independent check."""
    dx, dy = d.vector
    v = (u[0] + dx, u[1] + dy)
    pts = set(s.points)
    if v not in pts:
        return pts | {v}

    def ahead(p):  # strictly beyond u's line in direction d
        return (p[0] - u[0]) * dx + (p[1] - u[1]) * dy > 0

    stay = _flood(u, {p for p in pts if not ahead(p)})
    move = _flood(v, pts - stay)
    out = (pts - move) | {(x + dx, y + dy) for x, y in move} | {v}
    for a in stay:
        b = (a[0] + dx, a[1] + dy)
        if b in move and b != v and edge(a, b) not in breaks:
            out.add(b)
    return out


def _random_node_op(rng: random.Random, s: Shape, breaking: bool) -> NodeDoubleOp:
    u = rng.choice(s.sorted_points())
    d = rng.choice(list(Direction))
    if not breaking:
        return NodeDoubleOp(u, d)
    es = bicolor_edges(s, u, d)
    return NodeDoubleOp(u, d, "breaking", frozenset(e for e in es if rng.random() < 0.5))


def test_whole_column_doubles_and_far_side_shifts():
    s = rectangle((0, 0), 2, 3)
    out = apply_node_doubling(s, NodeDoubleOp((0, 0), E))
    assert out == rectangle((0, 0), 3, 3)
    assert bicolor_edges(s, (0, 0), E) == [((0, 1), (1, 1)), ((0, 2), (1, 2))]


def test_breaking_removes_chosen_bicolor_edge():
    s = rectangle((0, 0), 2, 3)
    op = NodeDoubleOp((0, 0), E, "breaking", frozenset({((0, 1), (1, 1))}))
    out = apply_node_doubling(s, op)
    assert out.points == {(0, 0), (0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1), (2, 2)}


def test_doubling_into_empty_cell():
    assert apply_node_doubling(SINGLE, NodeDoubleOp((0, 0), E)).points == {(0, 0), (1, 0)}


def test_only_the_component_of_v_translates():
    s = Shape({(0, 0), (1, 0), (0, 1), (0, 2), (1, 2)})
    out = apply_node_doubling(s, NodeDoubleOp((0, 0), E))
    assert out.points == {(0, 0), (0, 1), (0, 2), (1, 2), (1, 0), (2, 0)}


def test_ring_translates_far_column_and_fills_the_cut():
    ring = Shape({(x, y) for x in range(3) for y in range(3)} - {(1, 1)})
    moved, generated = node_doubling_trace(ring, NodeDoubleOp((1, 0), E))
    assert generated == {(2, 0), (2, 2)}
    assert {moved[(2, y)] for y in range(3)} == {(3, 0), (3, 1), (3, 2)}


def test_node_doubling_errors():
    with pytest.raises(InvalidOperation):
        apply_node_doubling(SINGLE, NodeDoubleOp((4, 4), E))
    s = rectangle((0, 0), 2, 3)
    with pytest.raises(InvalidOperation):
        apply_node_doubling(s, NodeDoubleOp((0, 0), E, "breaking", frozenset({((0, 0), (1, 0))})))
    with pytest.raises(InvalidOperation):
        apply_node_doubling(SINGLE, NodeDoubleOp((0, 0), E, "breaking", frozenset({((0, 0), (0, 1))})))
    with pytest.raises(ValueError):
        NodeDoubleOp((0, 0), E, "preserving", frozenset({((0, 0), (0, 1))}))


@given(shapes(25), st.integers(0, 2**31), st.booleans())
@settings(max_examples=200)
def test_node_doubling_matches_reference(s, seed, breaking):
    op = _random_node_op(random.Random(seed), s, breaking)
    out = apply_node_doubling(s, op)
    assert out.points == reference_node_doubling(s, op.node, op.direction, op.breaks)
    assert len(out) > len(s)
    assert is_connected(out.points)


@given(shapes(25), st.integers(0, 2**31))
def test_preserving_equals_breaking_with_no_breaks(s, seed):
    op = _random_node_op(random.Random(seed), s, False)
    as_breaking = NodeDoubleOp(op.node, op.direction, "breaking")
    assert apply_node_doubling(s, op) == apply_node_doubling(s, as_breaking)


@given(shapes(10), st.integers(0, 2**31))
@settings(max_examples=50)
def test_every_break_subset_is_legal(s, seed):
    rng = random.Random(seed)
    u = rng.choice(s.sorted_points())
    d = rng.choice(list(Direction))
    es = bicolor_edges(s, u, d)
    for r in range(len(es) + 1):
        for sub in combinations(es, r):
            out = apply_node_doubling(s, NodeDoubleOp(u, d, "breaking", frozenset(sub)))
            assert is_connected(out.points)


def test_pure_growth_examples():
    assert apply_pure_growth(SINGLE, PureGrowthOp(((((0, 0), E)),))).points == {(0, 0), (1, 0)}
    tromino = Shape({(0, 0), (1, 0), (0, 1)})
    out = apply_pure_growth(tromino, PureGrowthOp.from_mapping({(1, 0): E, (0, 1): N}))
    assert out.points == tromino.points | {(2, 0), (0, 2)}
    with pytest.raises(InvalidOperation):
        apply_pure_growth(tromino, PureGrowthOp((((0, 0), E),)))
    with pytest.raises(InvalidOperation):
        apply_pure_growth(Shape({(0, 0), (2, 0), (1, 0), (0, 1), (2, 1)}),
                          PureGrowthOp((((0, 1), E), ((2, 1), W))))


def test_rect_growth_checks_footprint_and_emptiness():
    fp = Rect((0, 0), 4, 1)
    s = SINGLE
    op = RectGrowthOp(E, (RectBlock(fp, Rect((0, 0), 1, 1), 1),))
    assert apply_rect_growth(s, op).points == {(0, 0), (1, 0)}
    too_far = RectGrowthOp(E, (RectBlock(Rect((0, 0), 1, 1), Rect((0, 0), 1, 1), 1),))
    with pytest.raises(InvalidOperation):
        apply_rect_growth(s, too_far)
    blocked = Shape({(0, 0), (1, 0)})
    with pytest.raises(InvalidOperation):
        apply_rect_growth(blocked, op)
    unbuilt = RectGrowthOp(E, (RectBlock(fp, Rect((0, 0), 2, 1), 2),))
    with pytest.raises(InvalidOperation):
        apply_rect_growth(s, unbuilt)


@pytest.mark.parametrize(
    "s_init, s_final, steps",
    [
        (SINGLE, rectangle((0, 0), 4, 1), 3),
        (PLUS, PLUS, 0),
        (Shape({(1, 1)}), PLUS, 4),
    ],
)
def test_bfs_constructor_examples(s_init, s_final, steps):
    c = bfs_constructor(s_init, s_final)
    assert len(c) == steps
    assert replay(s_init, c)[-1] == s_final


def test_bfs_constructor_requires_subset():
    with pytest.raises(ValueError):
        bfs_constructor(Shape({(9, 9)}), PLUS)


@given(shapes(60), st.integers(0, 2**31))
@settings(max_examples=60)
def test_bfs_constructor_bounds(s, seed):
    rng = random.Random(seed)
    sub = random_subshape(rng, s, rng.randint(1, len(s)))
    c = bfs_constructor(sub, s)
    assert replay(sub, c)[-1] == s
    assert len(c) <= 4 * len(s)
    assert len(c) <= 4 * len(bfs_levels(sub, s))


def test_embed():
    assert embed(Shape({(5, 5)}), PLUS) == (-5, -4)
    assert embed(rectangle((0, 0), 2, 2), PLUS) is None


@pytest.mark.parametrize(
    "s_final, steps",
    [(rectangle((0, 0), 4, 4), 4), (SINGLE, 0), (STAIRS, len(bfs_constructor(Shape({(0, 0)}), STAIRS)))],
)
def test_baseline_constructor_examples(s_final, steps):
    c = baseline_constructor(s_final)
    assert len(c) == steps
    assert equal_up_to_translation(replay(c.initial, c)[-1], s_final)


@given(shapes(80))
@settings(max_examples=40)
def test_baseline_constructor_bound(s):
    c = baseline_constructor(s)
    assert equal_up_to_translation(replay(c.initial, c)[-1], s)
    assert len(c) <= 4 * len(baseline(s).baseline) + 2 * (math.ceil(math.log2(len(s))) + 1)


@pytest.mark.parametrize("w, h", [(1, 1), (5, 3), (8, 8), (7, 1)])
def test_partition_constructor_on_rectangles(w, h):
    r = rectangle((2, -1), w, h)
    c = partition_constructor(r)
    assert len(c) == math.ceil(math.log2(w)) + math.ceil(math.log2(h))
    assert replay(c.initial, c)[-1] == r


def test_partition_constructor_on_l_shape():
    ell = Shape({(0, 0), (1, 0), (2, 0), (0, 1), (0, 2)})
    c = partition_constructor(ell)
    assert min_partition(ell).h == 2
    assert replay(c.initial, c)[-1] == ell
    assert sum(isinstance(op, PureGrowthOp) for op in c) == 1


@given(shapes(120))
@settings(max_examples=40)
def test_partition_constructor_bound(s):
    c = partition_constructor(s)
    assert replay(c.initial, c)[-1] == s
    n = len(s)
    log = math.ceil(math.log2(n)) if n > 1 else 0
    assert len(c) <= min_partition(s).h * (2 * log + 6)
