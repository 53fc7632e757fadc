"""Concrete matrices shared across the test modules."""

from convmat import BinaryMatrix


def M(text: str) -> BinaryMatrix:
    return BinaryMatrix.from_text(text)


# Convex 6x7 with two separated components; margins (4,1,1,2,1,1) / (2,1,3,1,1,1,1).
SPLIT_CONVEX = M(
    """
    0111100
    0010000
    0010000
    0000011
    1000000
    1000000
    """
)

# Directed 6x7 polyomino; margins (5,2,2,3,3,1) / (2,2,5,4,1,1,1).
STAIR_POLYOMINO = M(
    """
    0011111
    0011000
    0011000
    0111000
    1110000
    1000000
    """
)
STAIR_POLYOMINO_RES = {(3, 2, 0), (4, 1, 0)}

# 6x6 permutation matrix for one-line word (2,5,1,4,6,3).
PERM_251463 = BinaryMatrix.from_permutation((2, 5, 1, 4, 6, 3))
PERM_251463_RES = {(2, 1, 0), (2, 4, 1), (5, 3, 2)}

# 8x8 single-descent permutation matrix, word (2,5,7,1,3,4,6,8).
PERM_SINGLE_DESCENT = BinaryMatrix.from_permutation((2, 5, 7, 1, 3, 4, 6, 8))
PERM_SINGLE_DESCENT_RES = {(3, 1, 0), (3, 4, 1), (3, 6, 2)}

# Two 5x5 convex matrices with margins (1,3,4,3,1) / (1,2,4,3,2): the first
# has no source, the second has exactly a NW-source at (5,5).
HILL_NO_SOURCE = M(
    """
    00010
    00111
    01111
    11100
    00100
    """
)
HILL_NW_SOURCE = M(
    """
    00100
    01110
    11110
    00111
    00001
    """
)

# 8x8 three-block generalized polyomino; margins (2,1,1,1,2,3,1,2) /
# (1,2,1,3,1,3,1,1); ranked essential set {(4,5;4),(6,2;0),(7,1;0)}.
THREE_BLOCK = M(
    """
    00110000
    00010000
    00010000
    00000100
    00001100
    00000111
    01000000
    11000000
    """
)
THREE_BLOCK_RES = {(4, 5, 4), (6, 2, 0), (7, 1, 0)}

# 7x9 four-quadrant assembly of rotated staircase blocks.
FOUR_BLOCK_7x9 = M(
    """
    000100000
    001110000
    001111000
    111111100
    011111111
    000110000
    000100000
    """
)

# 3x4 convex matrix whose rows 1 and 3 admit a convexity-breaking switch.
LADDER_3x4 = M(
    """
    1100
    1110
    0111
    """
)

# The single matrix with margins (2,1,2) / (3,1): row convex, not convex.
PILLAR_3x2 = M(
    """
    11
    10
    11
    """
)

# 5x6 matrix from a margin class whose four members are all convex;
# margins (1,4,6,4,1) / (1,2,4,4,3,2).
DIAMOND_5x6 = M(
    """
    001000
    011110
    111111
    001111
    000100
    """
)
DIAMOND_5x6_SWITCHED = M(
    """
    001000
    001111
    111111
    011110
    000100
    """
)

# 4x4 matrix and its convex hull (row 2 fills up).
GAPPY_4x4 = M(
    """
    1100
    1001
    0011
    0000
    """
)
GAPPY_4x4_HULL = M(
    """
    1100
    1111
    0011
    0000
    """
)

# 6x6 convex matrix with seven insertable positions.
BENT_6x6 = M(
    """
    000111
    001110
    001100
    011100
    111000
    001000
    """
)
