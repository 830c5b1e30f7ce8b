from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shapegrowth.errors import ShapeError
from shapegrowth.oracle import compress_randomly
from shapegrowth.shape import (
    Direction,
    Rect,
    Shape,
    baseline,
    column,
    components,
    equal_up_to_translation,
    expand_profile,
    is_baseline,
    is_connected,
    normalize,
    rectangle,
    row,
    shift,
    south_offset,
    translate,
    west_offset,
)

from conftest import FIG1, shapes


def test_direction_vectors_and_opposites():
    assert [d.vector for d in Direction] == [(0, 1), (1, 0), (0, -1), (-1, 0)]
    for d in Direction:
        assert d.opposite.opposite is d
        assert d.opposite.vector == (-d.vector[0], -d.vector[1])
    assert Direction.parse("E") is Direction.EAST
    assert Direction.parse("north") is Direction.NORTH


@pytest.mark.parametrize("pts", [[], [(0, 0), (1, 1)], [(0, 0), (2, 0)]])
def test_shape_rejects_empty_or_disconnected(pts):
    with pytest.raises(ShapeError):
        Shape(pts)


def test_disconnected_message_names_components():
    with pytest.raises(ShapeError, match="2 components"):
        Shape([(0, 0), (5, 5)])


@pytest.mark.parametrize(
    "s, d, k, expected",
    [
        (Shape({(0, 0)}), Direction.EAST, 3, {(3, 0)}),
        (FIG1, Direction.NORTH, 1, {(1, 2), (1, 3), (1, 4), (2, 2)}),
        (FIG1, Direction.WEST, 0, FIG1.points),
    ],
)
def test_translate_examples(s, d, k, expected):
    assert translate(s, d, k).points == frozenset(expected)


def test_translate_negative_distance_rejected():
    with pytest.raises(ValueError):
        translate(FIG1, Direction.EAST, -1)


@given(shapes(), st.sampled_from(list(Direction)), st.integers(0, 5), st.integers(0, 5))
def test_translate_composes(s, d, a, b):
    assert translate(translate(s, d, a), d, b) == translate(s, d, a + b)
    assert translate(translate(s, d, a), d.opposite, a) == s


def test_column_and_row_of_fig1():
    assert column(FIG1, 1) == {(1, 1), (1, 2), (1, 3)}
    assert row(FIG1, 1) == {(1, 1), (2, 1)}
    assert column(FIG1, 9) == set()
    assert row(FIG1, -4) == set()


def test_offsets():
    s = rectangle((3, 5), 4, 2)
    assert west_offset(s, (5, 6)) == 2
    assert south_offset(s, (5, 6)) == 1
    assert west_offset(s, (3, 5)) == 0
    single = Shape({(7, 7)})
    assert (west_offset(single, (7, 7)), south_offset(single, (7, 7))) == (0, 0)
    with pytest.raises(ShapeError):
        west_offset(s, (0, 0))


@pytest.mark.parametrize(
    "pts, expected",
    [({(0, 0), (1, 0)}, True), ({(0, 0), (1, 1)}, False), (FIG1.points, True), (set(), False)],
)
def test_is_connected(pts, expected):
    assert is_connected(pts) is expected


def test_components_largest_first():
    comps = components({(0, 0), (5, 0), (6, 0)})
    assert [len(c) for c in comps] == [2, 1]


@pytest.mark.parametrize(
    "pts, expected",
    [
        ({(5, 7)}, {(0, 0)}),
        ({(0, 0), (0, 1)}, {(0, 0), (0, 1)}),
        ({(2, 3), (3, 3)}, {(0, 0), (1, 0)}),
    ],
)
def test_normalize(pts, expected):
    assert normalize(Shape(pts)).points == frozenset(expected)


def test_equal_up_to_translation_examples():
    assert equal_up_to_translation(FIG1, translate(FIG1, Direction.EAST, 4))
    assert not equal_up_to_translation(rectangle((0, 0), 1, 2), rectangle((0, 0), 2, 1))
    assert not equal_up_to_translation(FIG1, rectangle((0, 0), 2, 1))


@given(shapes(), st.integers(-9, 9), st.integers(-9, 9))
def test_equal_up_to_translation_is_an_equivalence(s, dx, dy):
    t = shift(s, dx, dy)
    u = shift(t, dy, dx)
    assert equal_up_to_translation(s, s)
    assert equal_up_to_translation(s, t) and equal_up_to_translation(t, s)
    assert equal_up_to_translation(s, u)


def test_rect_basics():
    r = Rect((1, 2), 3, 2)
    assert r.area == 6 and len(r.cells()) == 6
    assert (3, 3) in r and (4, 3) not in r
    assert r.contains_rect(Rect((2, 2), 2, 1))
    with pytest.raises(ValueError):
        Rect((0, 0), 0, 1)


def test_baseline_of_square():
    p = baseline(rectangle((0, 0), 4, 4))
    assert p.baseline.points == {(0, 0)}
    assert p.col_mult == (4,) and p.row_mult == (4,)


def test_baseline_of_fig1_merges_its_two_top_rows():
    # rows y=2 and y=3 are both {x=1}
    p = baseline(FIG1)
    assert p.baseline.points == {(0, 0), (1, 0), (0, 1)}
    assert p.col_mult == (1, 1) and p.row_mult == (1, 2)


def test_baseline_with_mixed_runs():
    # column x=0 spans rows 0..1, columns 1..3 only row 0
    s = Shape({(0, 0), (0, 1), (1, 0), (2, 0), (3, 0)})
    p = baseline(s)
    assert p.baseline.points == {(0, 0), (0, 1), (1, 0)}
    assert p.col_mult == (1, 3) and p.row_mult == (1, 1)


@given(shapes(40))
def test_baseline_round_trip_and_idempotence(s):
    p = baseline(s)
    assert p.expand() == normalize(s)
    assert baseline(p.baseline).baseline == p.baseline
    assert is_baseline(p.baseline)
    assert all(m == 1 for m in baseline(p.baseline).col_mult + baseline(p.baseline).row_mult)


@given(shapes(40), st.integers(0, 2**31))
def test_baseline_independent_of_compression_order(s, seed):
    assert compress_randomly(s, random.Random(seed)) == baseline(s)


def test_expand_profile_validates():
    with pytest.raises(ValueError):
        expand_profile(Shape({(0, 0)}), [1, 2], [1])
    with pytest.raises(ValueError):
        expand_profile(Shape({(0, 0)}), [0], [1])
