from __future__ import annotations

import pytest
from hypothesis import given, settings

from shapegrowth.corpus import fixed_polyominoes
from shapegrowth.errors import FormatError
from shapegrowth.oracle import brute_min_partition
from shapegrowth.partition import (
    RectPartition,
    build_adjacency_and_tree,
    chord_summary,
    count_holes,
    max_independent_chords,
    min_partition,
)
from shapegrowth.shape import Rect, Shape, rectangle

from conftest import shapes

PLUS = Shape({(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)})
ELL = Shape({(0, 0), (1, 0), (2, 0), (0, 1), (0, 2)})
RING = Shape({(x, y) for x in range(3) for y in range(3)} - {(1, 1)})


def _check_partition(s: Shape, part: RectPartition) -> None:
    cells = [c for r in part.rects for c in r.cells()]
    assert len(cells) == len(set(cells)) == len(s)
    assert set(cells) == s.points
    root = part.rects[part.root]
    assert root.area == max(r.area for r in part.rects)
    assert sum(len(level) for level in part.levels()) == part.h


@pytest.mark.parametrize(
    "s, h",
    [(rectangle((3, 4), 5, 2), 1), (ELL, 2), (PLUS, 3), (RING, 4), (Shape({(0, 0)}), 1)],
)
def test_min_partition_examples(s, h):
    part = min_partition(s)
    assert part.h == h
    _check_partition(s, part)


@given(shapes(40))
@settings(max_examples=150)
def test_partition_is_exact_cover_with_connected_tree(s):
    part = min_partition(s)
    _check_partition(s, part)
    for i, p in enumerate(part.parent):
        if i != part.root:
            assert p in part.adjacency[i]


@given(shapes(18))
@settings(max_examples=150)
def test_partition_size_matches_exhaustive_search(s):
    assert min_partition(s).h == brute_min_partition(s)


@given(shapes(40))
@settings(max_examples=100)
def test_partition_size_matches_chord_identity(s):
    assert chord_summary(s).predicted == min_partition(s).h


def test_chord_identity_exhaustive_to_eight_cells():
    for n in range(1, 9):
        for s in fixed_polyominoes(n):
            assert chord_summary(s).predicted == min_partition(s).h


def test_holes_are_counted_only_when_enclosed():
    assert count_holes(RING) == 1
    assert count_holes(PLUS) == 0
    # the empty centre touches the outside at a corner: no hole, and the
    # pinch vertex is not reflex
    pinched = Shape({(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2)})
    assert count_holes(pinched) == 0
    assert chord_summary(pinched).predicted == min_partition(pinched).h == brute_min_partition(pinched) == 4


def test_max_independent_chords_crossing_pair():
    h = [((0, 1), (3, 1))]
    v = [((1, 0), (1, 3))]
    assert len(max_independent_chords(h, v)) == 1
    assert len(max_independent_chords(h, [((5, 0), (5, 3))])) == 2


def test_adjacency_and_tree():
    single = build_adjacency_and_tree([Rect((0, 0), 2, 2)])
    assert single.parent == (-1,) and single.root == 0
    stacked = build_adjacency_and_tree([Rect((0, 0), 2, 1), Rect((0, 1), 2, 3)])
    assert stacked.root == 1 and stacked.adjacency == ((1,), (0,))
    u_shape = build_adjacency_and_tree([Rect((0, 0), 1, 3), Rect((1, 0), 1, 1), Rect((2, 0), 1, 3)])
    assert u_shape.root == 0
    assert u_shape.adjacency == ((1,), (0, 2), (1,))
    assert u_shape.parent == (-1, 0, 1)
    assert len(u_shape.levels()) == 3


def test_adjacency_errors():
    with pytest.raises(ValueError):
        build_adjacency_and_tree([Rect((0, 0), 1, 1), Rect((3, 3), 1, 1)])
    with pytest.raises(ValueError):
        build_adjacency_and_tree([Rect((0, 0), 2, 1), Rect((1, 0), 1, 1)])


def test_partition_dict_round_trip():
    part = min_partition(PLUS)
    assert RectPartition.from_dict(part.to_dict()) == part
    data = part.to_dict()
    data["parent"] = [-1] * part.h
    with pytest.raises(FormatError):
        RectPartition.from_dict(data)
