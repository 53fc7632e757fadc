import itertools

import pytest

from convmat import (
    BinaryMatrix,
    Comparison,
    Interval,
    MarginPair,
    ShapeMismatch,
    compare,
    connectivity_check,
    convexity_check,
    entrywise_and,
    entrywise_or,
    find_sources,
    is_directed,
    margins,
    rotate,
)
from convmat.binmat import Direction, rotate_direction, rotate_position
from convmat.errors import NonBinaryChar, ParseError, RaggedRows

from cases import (
    HILL_NO_SOURCE,
    HILL_NW_SOURCE,
    M,
    STAIR_POLYOMINO,
    PERM_251463,
    SPLIT_CONVEX,
)


def all_matrices(m, n):
    for bits in itertools.product((0, 1), repeat=m * n):
        yield BinaryMatrix(tuple(bits[r * n : (r + 1) * n] for r in range(m)))


# -- construction and text format -------------------------------------------------


def test_rejects_empty_and_non_binary():
    with pytest.raises(ValueError):
        BinaryMatrix(())
    with pytest.raises(ValueError):
        BinaryMatrix(((),))
    with pytest.raises(ValueError):
        BinaryMatrix(((0, 2),))
    with pytest.raises(ValueError):
        BinaryMatrix(((0, 1), (0,)))


def test_text_roundtrip_and_comments():
    a = BinaryMatrix.from_text("# header\n1 0\n0 1\n\n")
    assert a == BinaryMatrix.identity(2)
    assert a.to_text() == "10\n01\n"
    assert BinaryMatrix.from_text(a.to_text()) == a


def test_text_errors():
    with pytest.raises(RaggedRows):
        BinaryMatrix.from_text("10\n011\n")
    with pytest.raises(NonBinaryChar):
        BinaryMatrix.from_text("1x\n01\n")
    with pytest.raises(ParseError):
        BinaryMatrix.from_text("# nothing\n")


def test_margins_fixtures():
    assert margins(STAIR_POLYOMINO) == MarginPair((5, 2, 2, 3, 3, 1), (2, 2, 5, 4, 1, 1, 1))
    assert margins(BinaryMatrix.zeros(2, 3)) == MarginPair((0, 0), (0, 0, 0))
    assert margins(BinaryMatrix.ones(2, 3)) == MarginPair((3, 3), (2, 2, 2))


def test_margin_pair_text_format():
    pair = MarginPair.from_text("# margins\nR: 2 2 1\nS: 2 2 1\n")
    assert pair == MarginPair((2, 2, 1), (2, 2, 1))
    assert MarginPair.from_text(pair.to_text()) == pair
    with pytest.raises(ParseError):
        MarginPair.from_text("R: 1 2\n")
    with pytest.raises(ParseError):
        MarginPair.from_text("R: 1\nS: one\n")
    with pytest.raises(ParseError):
        MarginPair.from_text("R: 1\nR: 1\nS: 1\n")


# -- convexity ---------------------------------------------------------------------


def test_convexity_fixtures():
    assert convexity_check(SPLIT_CONVEX, "both")
    assert not convexity_check(M("101\n110\n010"), "row")
    assert convexity_check(PERM_251463, "both")
    assert convexity_check(BinaryMatrix.zeros(2, 2), "both")


def test_convexity_mode_decomposition():
    for a in all_matrices(2, 3):
        both = convexity_check(a, "both")
        split = convexity_check(a, "row") and convexity_check(rotate(a, 1), "row")
        assert both == split


def test_convexity_unknown_mode():
    with pytest.raises(ValueError):
        convexity_check(BinaryMatrix.ones(1, 1), "diagonal")


# -- connectivity and sources ------------------------------------------------------


def test_connectivity_fixtures():
    assert not connectivity_check(SPLIT_CONVEX)
    assert connectivity_check(STAIR_POLYOMINO)
    assert connectivity_check(BinaryMatrix.ones(1, 1))
    assert not connectivity_check(BinaryMatrix.zeros(2, 2))


def test_sources_fixtures():
    assert find_sources(HILL_NO_SOURCE) == {d: None for d in Direction}
    sources = find_sources(HILL_NW_SOURCE)
    assert sources[Direction.NW] == (5, 5)
    assert sources[Direction.SE] is None
    assert sources[Direction.NE] is None
    assert sources[Direction.SW] is None
    assert not is_directed(HILL_NO_SOURCE)
    assert is_directed(HILL_NW_SOURCE)


def test_sources_of_full_matrix_are_the_corners():
    a = BinaryMatrix.ones(3, 4)
    assert find_sources(a) == {
        Direction.SE: (1, 1),
        Direction.NE: (3, 1),
        Direction.NW: (3, 4),
        Direction.SW: (1, 4),
    }


def test_stair_polyomino_sources():
    # The 1s run from the top-right corner down to the bottom-left one, so
    # exactly the SW and NE walks reach everything.
    sources = find_sources(STAIR_POLYOMINO)
    assert sources[Direction.SW] == (1, 7)
    assert sources[Direction.NE] == (6, 1)
    assert sources[Direction.SE] is None
    assert sources[Direction.NW] is None


def test_directed_with_positive_margins_is_connected():
    for a in all_matrices(2, 3):
        if is_directed(a) and margins(a).is_positive():
            assert connectivity_check(a)


# -- rotation ----------------------------------------------------------------------


def test_rotate_basics():
    a = STAIR_POLYOMINO
    assert rotate(a, 0) == a
    assert rotate(BinaryMatrix.ones(2, 3), 1) == BinaryMatrix.ones(3, 2)
    single = M("10\n00")
    assert rotate(single, 1) == M("00\n10")


def test_rotate_composes_to_identity():
    for a in all_matrices(2, 3):
        assert rotate(rotate(a, 1), 3) == a
        assert rotate(a, 4) == a


def test_sources_commute_with_rotation():
    for a in all_matrices(2, 3):
        rotated = find_sources(rotate(a, 1))
        for d, pos in find_sources(a).items():
            image = rotated[rotate_direction(d, 1)]
            if pos is None:
                assert image is None
            else:
                assert image == rotate_position(pos, a.shape, 1)


# -- entrywise order and boolean algebra -------------------------------------------


def test_compare_fixtures():
    a = M("100")
    b = M("010")
    assert compare(BinaryMatrix.zeros(1, 3), a) is Comparison.LESS_EQUAL
    assert compare(a, a) is Comparison.EQUAL
    assert compare(a, b) is Comparison.INCOMPARABLE
    with pytest.raises(ShapeMismatch):
        compare(a, BinaryMatrix.zeros(1, 2))


def test_compare_is_a_partial_order():
    pool = list(all_matrices(2, 2))
    le = {
        (a, b)
        for a in pool
        for b in pool
        if compare(a, b) in (Comparison.LESS_EQUAL, Comparison.EQUAL)
    }
    for a in pool:
        assert (a, a) in le
    for a, b in le:
        if (b, a) in le:
            assert a == b
    for a, b in le:
        for c in pool:
            if (b, c) in le:
                assert (a, c) in le


def test_and_or_fixtures():
    a = M("100")
    b = M("010")
    assert entrywise_and(a, a) == a
    assert entrywise_or(a, a) == a
    assert entrywise_and(a, b) == M("000")
    assert entrywise_or(a, b) == M("110")
    with pytest.raises(ShapeMismatch):
        entrywise_and(a, BinaryMatrix.zeros(2, 3))


def test_and_below_or_above():
    pool = list(all_matrices(2, 2))
    for a in pool:
        for b in pool:
            low = entrywise_and(a, b)
            high = entrywise_or(a, b)
            assert compare(low, a) in (Comparison.LESS_EQUAL, Comparison.EQUAL)
            assert compare(a, high) in (Comparison.LESS_EQUAL, Comparison.EQUAL)


# -- small value types -------------------------------------------------------------


def test_interval_validation():
    iv = Interval(2, 4)
    assert len(iv) == 3 and 3 in iv and 5 not in iv
    with pytest.raises(ValueError):
        Interval(3, 2)


def test_row_and_col_intervals():
    assert STAIR_POLYOMINO.row_interval(1) == Interval(3, 7)
    assert STAIR_POLYOMINO.row_interval(6) == Interval(1, 1)
    assert STAIR_POLYOMINO.col_interval(3) == Interval(1, 5)
    assert BinaryMatrix.zeros(2, 2).row_interval(1) is None
