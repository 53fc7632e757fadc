import math

import pytest

from convmat import (
    BadInput,
    BinaryMatrix,
    FerrersConvexSpec,
    MarginPair,
    PreconditionViolated,
    ShapeMismatch,
    SizeExceeded,
    StaircaseProfile,
    block_regular_class,
    convexity_check,
    enumerate_class,
    ferrers_convex,
    ferrers_matrix,
    is_unimodal,
    margins,
    sort_rows_to_convex,
    staircase_from_profile,
    two_regular_profile,
    unit_rows_nonempty,
    unit_rows_witness,
)
from convmat.oracle import enumerate_all

from cases import DIAMOND_5x6, FOUR_BLOCK_7x9, M


# -- enumeration --------------------------------------------------------------------


def test_enumerate_class_fixtures():
    assert enumerate_class(MarginPair((2, 1, 2), (2, 1, 2)), convex_only=True) == []
    perms = enumerate_class(MarginPair((1, 1), (1, 1)))
    assert perms == [M("01\n10"), M("10\n01")]
    members = enumerate_class(margins(DIAMOND_5x6), cap=32)
    assert len(members) == 4
    assert all(convexity_check(x) for x in members)
    assert DIAMOND_5x6 in members


def test_enumerate_class_convex_only_agrees_with_filtering():
    for pair in (
        MarginPair((2, 2, 1), (2, 2, 1)),
        MarginPair((2, 1, 2), (2, 1, 2)),
        MarginPair((1, 3, 1), (1, 2, 2)),
    ):
        full = enumerate_class(pair)
        convex = enumerate_class(pair, convex_only=True)
        assert convex == [x for x in full if convexity_check(x)]


def test_enumerate_class_is_lexicographic():
    listed = enumerate_class(MarginPair((1, 1), (1, 1)))
    flat = [sum(row for rows in x.cells for row in rows) and x.cells for x in listed]
    assert listed == sorted(listed, key=lambda x: x.cells)


def test_enumerate_class_guards():
    with pytest.raises(SizeExceeded):
        enumerate_class(MarginPair((1,) * 6, (1,) * 6))
    with pytest.raises(BadInput):
        enumerate_class(MarginPair((2,), (1,)))
    with pytest.raises(BadInput):
        enumerate_class(MarginPair((3, 1), (2, 2)))  # row sum exceeds width


# -- one-per-row classes -------------------------------------------------------------


def test_unit_rows_fixtures():
    assert unit_rows_nonempty(3, (2, 0, 1))
    assert not unit_rows_nonempty(3, (2, 2))
    assert unit_rows_nonempty(1, (1,))


def test_unit_rows_witness():
    w = unit_rows_witness(3, (2, 0, 1))
    assert w == M("100\n100\n001")
    assert margins(w) == MarginPair((1, 1, 1), (2, 0, 1))
    with pytest.raises(BadInput):
        unit_rows_witness(3, (2, 2))


# -- two-per-row classes -------------------------------------------------------------


def test_two_regular_profile_fixtures():
    assert two_regular_profile((3, 2, 1)) is None
    assert two_regular_profile((1, 3, 2)) == StaircaseProfile((1, 2))
    assert two_regular_profile((2, 2)) == StaircaseProfile((2,))


def test_two_regular_profile_degenerate_cases():
    assert two_regular_profile(()) is None
    assert two_regular_profile((0, 0)) is None  # would need zero rows
    assert two_regular_profile((1, 1, 1)) is None  # odd total
    assert two_regular_profile((2,)) is None  # two 1s cannot fit one column


def test_two_regular_profile_matches_enumeration():
    # brute-force cross-check on every S with n <= 4 and entries <= 3
    import itertools

    for n in range(1, 5):
        for s in itertools.product(range(4), repeat=n):
            total = sum(s)
            nonempty = False
            if total % 2 == 0 and total >= 2:
                pair = MarginPair((2,) * (total // 2), s)
                if pair.is_consistent():
                    nonempty = bool(enumerate_class(pair, convex_only=True, cap=40))
            assert (two_regular_profile(s) is not None) == nonempty


def test_staircase_from_profile():
    assert staircase_from_profile(StaircaseProfile((1, 2)), 2) == M("110\n011\n011")
    assert staircase_from_profile(StaircaseProfile((3,)), 4) == BinaryMatrix.ones(3, 4)
    two_step = staircase_from_profile(StaircaseProfile((1, 1)), 2)
    assert two_step == M("110\n011")
    assert margins(two_step) == MarginPair((2, 2), (1, 2, 1))


def test_staircase_guards():
    with pytest.raises(BadInput):
        staircase_from_profile(StaircaseProfile((0, 0)), 2)
    with pytest.raises(BadInput):
        staircase_from_profile(StaircaseProfile((1,)), 0)


# -- row sorting ---------------------------------------------------------------------


def test_sort_rows_to_convex_fixtures():
    assert sort_rows_to_convex(M("011\n110\n011")) == M("110\n011\n011")
    stair = M("110\n011")
    assert sort_rows_to_convex(stair) == stair
    assert sort_rows_to_convex(M("001\n100\n010")) == M("100\n010\n001")


def test_sort_rows_preserves_margins_exhaustively():
    for a in enumerate_all(3, 3, lambda x: all(sum(r) == 2 for r in x.cells)):
        if not convexity_check(a, "row"):
            continue
        b = sort_rows_to_convex(a)
        assert convexity_check(b)
        assert margins(b) == margins(a)


def test_sort_rows_preconditions():
    with pytest.raises(PreconditionViolated):
        sort_rows_to_convex(M("11\n10"))  # unequal sums
    with pytest.raises(PreconditionViolated):
        sort_rows_to_convex(M("101\n110"))  # not row convex
    with pytest.raises(PreconditionViolated):
        sort_rows_to_convex(BinaryMatrix.zeros(2, 2))


# -- block-tiled classes -------------------------------------------------------------


def test_block_regular_square_case():
    found = block_regular_class(4, 4, 2, 2)
    assert found is not None
    count, members = found
    members = list(members)
    assert count == 2 and len(members) == 2
    assert M("1100\n1100\n0011\n0011") in members
    assert M("0011\n0011\n1100\n1100") in members
    listed = enumerate_class(MarginPair((2,) * 4, (2,) * 4), convex_only=True, cap=16)
    assert sorted(x.cells for x in members) == sorted(x.cells for x in listed)


def test_block_regular_absent_when_grid_does_not_tile():
    assert block_regular_class(3, 4, 2, 2) is None
    assert block_regular_class(4, 4, 2, 3) is None
    assert block_regular_class(4, 6, 2, 2) is None


def test_block_regular_single_block():
    count, members = block_regular_class(2, 3, 2, 3)
    assert count == 1
    assert list(members) == [BinaryMatrix.ones(2, 3)]


def test_block_regular_member_margins():
    count, members = block_regular_class(4, 2, 2, 1)
    members = list(members)
    assert count == 2
    for x in members:
        assert margins(x) == MarginPair((1, 1, 1, 1), (2, 2))
        assert convexity_check(x)
    listed = enumerate_class(MarginPair((1,) * 4, (2, 2)), convex_only=True)
    assert sorted(x.cells for x in members) == sorted(x.cells for x in listed)


def test_block_regular_rectangular_blocks():
    # 12x6 grid tiled by three 4x2 blocks: row sums 2, column sums 4.
    count, members = block_regular_class(12, 6, 4, 2)
    assert count == math.factorial(3)
    members = list(members)
    assert len(members) == 6
    for x in members:
        assert margins(x) == MarginPair((2,) * 12, (4,) * 6)
        assert convexity_check(x)


# -- Ferrers matrices and four-block assemblies ---------------------------------------


def test_ferrers_matrix_fixtures():
    assert ferrers_matrix((3, 1), 2, 3) == M("111\n100")
    assert ferrers_matrix((), 2, 2) == BinaryMatrix.zeros(2, 2)
    assert ferrers_matrix((3, 3), 2, 3) == BinaryMatrix.ones(2, 3)


def test_ferrers_matrix_guards():
    with pytest.raises(ShapeMismatch):
        ferrers_matrix((1, 1, 1), 2, 3)
    with pytest.raises(ShapeMismatch):
        ferrers_matrix((4,), 2, 3)


def test_four_block_assembly_fixture():
    spec = FerrersConvexSpec(
        m1=4, m2=3, n1=4, n2=5,
        u11=(4, 2, 2, 1), u12=(3, 2, 1), u21=(3, 1, 1), u22=(5, 1),
    )
    assert ferrers_convex(spec) == FOUR_BLOCK_7x9


def test_four_block_single_row():
    spec = FerrersConvexSpec(m1=1, m2=1, n1=1, n2=3, u22=(3,))
    assert ferrers_convex(spec) == M("0000\n0111")


def test_four_block_margin_twins():
    left = ferrers_convex(FerrersConvexSpec(m1=1, m2=2, n1=1, n2=1, u11=(1,), u21=(1,), u22=(1, 1)))
    right = ferrers_convex(FerrersConvexSpec(m1=1, m2=2, n1=1, n2=1, u12=(1,), u21=(2,), u22=(1,)))
    assert left == M("10\n11\n01")
    assert right == M("01\n11\n10")
    assert margins(left) == margins(right) == MarginPair((1, 2, 1), (2, 2))


def _partitions_in(rows, cols):
    yield ()
    if rows == 0:
        return
    for first in range(1, cols + 1):
        for rest in _partitions_in(rows - 1, first):
            yield (first,) + rest


def _all_specs(m, n):
    for m1 in range(1, m):
        m2 = m - m1
        for n1 in range(1, n):
            n2 = n - n1
            for u11 in _partitions_in(m1, n1):
                for u12 in _partitions_in(n2, m1):
                    for u21 in _partitions_in(n1, m2):
                        for u22 in _partitions_in(m2, n2):
                            yield FerrersConvexSpec(m1, m2, n1, n2, u11, u12, u21, u22)


def test_four_block_outputs_are_convex_and_unimodal():
    for spec in _all_specs(3, 3):
        a = ferrers_convex(spec)
        mp = margins(a)
        assert convexity_check(a)
        assert is_unimodal(mp.R) and is_unimodal(mp.S)


def test_double_diagonal_is_not_a_four_block_assembly():
    band = M("1100\n0110\n0011\n0001")
    mp = margins(band)
    assert convexity_check(band) and is_unimodal(mp.R) and is_unimodal(mp.S)
    assert all(ferrers_convex(spec) != band for spec in _all_specs(4, 4))


def test_four_block_size_guards():
    with pytest.raises(ShapeMismatch):
        FerrersConvexSpec(m1=0, m2=2, n1=1, n2=1)
    with pytest.raises(ShapeMismatch):
        FerrersConvexSpec(m1=1, m2=1, n1=1, n2=1, u22=(2,))
    with pytest.raises(ValueError):
        FerrersConvexSpec(m1=2, m2=2, n1=2, n2=2, u22=(1, 2))


# -- unimodality ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "vector,expected",
    [
        ((1, 3, 4, 3, 1), True),
        ((2, 1, 2), False),
        ((2, 2, 2), True),
        ((1, 2, 4, 4, 3, 2), True),
        ((), True),
        ((5,), True),
    ],
)
def test_is_unimodal(vector, expected):
    assert is_unimodal(vector) == expected
