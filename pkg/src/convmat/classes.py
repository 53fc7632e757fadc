"""Structured margin classes: nonemptiness tests and constructions.

Covers the unit-row classes, the two-per-row staircase characterization,
block-tiled constant-margin classes, Ferrers matrices, and the four-block
Ferrers-convex assembly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .binmat import BinaryMatrix, MarginPair, convexity_check, margins, rotate
from .diagram import FerrersShape
from .errors import BadInput, PreconditionViolated, ShapeMismatch, SizeExceeded

DEFAULT_CLASS_CAP = 25


@dataclass(frozen=True)
class StaircaseProfile:
    """How many width-k rows start at each column (implicitly 0 before
    column 1 and after column n-1)."""

    k: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(x) for x in self.k)
        if any(x < 0 for x in counts):
            raise ValueError("profile counts must be nonnegative")
        object.__setattr__(self, "k", counts)

    @property
    def rows(self) -> int:
        return sum(self.k)


@dataclass(frozen=True)
class FerrersConvexSpec:
    """Four partitions, one per quadrant block, plus the block sizes.

    The lower-right block holds a plain Ferrers matrix; the other three hold
    rotated copies so that the 1s of every block hug the two dividing lines.
    Partition ``u11`` lives in an (m1 x n1) container, ``u12`` in (n2 x m1),
    ``u21`` in (n1 x m2), and ``u22`` in (m2 x n2).
    """

    m1: int
    m2: int
    n1: int
    n2: int
    u11: tuple[int, ...] = ()
    u12: tuple[int, ...] = ()
    u21: tuple[int, ...] = ()
    u22: tuple[int, ...] = ()

    def __post_init__(self):
        if min(self.m1, self.m2, self.n1, self.n2) < 1:
            raise ShapeMismatch("block sizes must be positive")
        for name, u, container in (
            ("u11", self.u11, (self.m1, self.n1)),
            ("u12", self.u12, (self.n2, self.m1)),
            ("u21", self.u21, (self.n1, self.m2)),
            ("u22", self.u22, (self.m2, self.n2)),
        ):
            shape = FerrersShape(tuple(u))  # validates monotonicity
            rows, cols = container
            if len(shape.row_lengths) > rows:
                raise ShapeMismatch(f"{name} has too many parts for {container}")
            if shape.row_lengths and shape.row_lengths[0] > cols:
                raise ShapeMismatch(f"{name} parts exceed width of {container}")
            object.__setattr__(self, name, shape.row_lengths)


def enumerate_class(
    pair: MarginPair, convex_only: bool = False, cap: int = DEFAULT_CLASS_CAP
) -> list[BinaryMatrix]:
    """All matrices with the given margins, in row-major bit-string order.

    Backtracks row by row, pruning on column residuals; with
    ``convex_only`` the candidate rows are intervals and a column state
    machine rejects split columns early.
    """
    m, n = pair.shape
    if m * n > cap:
        raise SizeExceeded(f"{m}x{n} has {m * n} cells, cap is {cap}")
    if not pair.is_consistent():
        raise BadInput(f"margins R={pair.R} S={pair.S} are not consistent")

    candidates: dict[int, list[tuple[int, ...]]] = {}
    for r in set(pair.R):
        if convex_only:
            rows = [
                tuple(1 if s <= j < s + r else 0 for j in range(n))
                for s in range(n - r + 1)
            ] if r else [(0,) * n]
        else:
            rows = [
                tuple(1 if j in picked else 0 for j in range(n))
                for picked in itertools.combinations(range(n), r)
            ]
        candidates[r] = sorted(rows)

    out: list[BinaryMatrix] = []
    residual = list(pair.S)
    chosen: list[tuple[int, ...]] = []

    def walk(i: int, closed: tuple[bool, ...]) -> None:
        if i == m:
            out.append(BinaryMatrix(tuple(chosen)))
            return
        left = m - i - 1
        for row in candidates[pair.R[i]]:
            ok = True
            for j, v in enumerate(row):
                rj = residual[j] - v
                if rj < 0 or rj > left or (convex_only and v and closed[j]):
                    ok = False
                    break
            if not ok:
                continue
            for j, v in enumerate(row):
                residual[j] -= v
            chosen.append(row)
            if convex_only:
                prev = chosen[-2] if len(chosen) >= 2 else (0,) * n
                new_closed = tuple(
                    closed[j] or (prev[j] == 1 and row[j] == 0) for j in range(n)
                )
            else:
                new_closed = closed
            walk(i + 1, new_closed)
            chosen.pop()
            for j, v in enumerate(row):
                residual[j] += v
        return

    walk(0, (False,) * n)
    return out


def unit_rows_nonempty(m: int, s: Sequence[int]) -> bool:
    """Is there a matrix with one 1 per row and column sums ``s``?

    >>> unit_rows_nonempty(3, (2, 0, 1))
    True
    """
    if m < 1 or any(v < 0 for v in s):
        return False
    return sum(s) == m


def unit_rows_witness(m: int, s: Sequence[int]) -> BinaryMatrix:
    """The consecutive-unit-columns witness: the first s1 rows carry column
    1, the next s2 rows column 2, and so on."""
    if not unit_rows_nonempty(m, s):
        raise BadInput(f"no one-per-row matrix with m={m}, S={tuple(s)}")
    rows = []
    for j, count in enumerate(s):
        rows.extend([tuple(1 if c == j else 0 for c in range(len(s)))] * count)
    return BinaryMatrix(tuple(rows))


def two_regular_profile(s: Sequence[int]) -> StaircaseProfile | None:
    """Staircase profile for the two-per-row class with column sums ``s``.

    k_j is the alternating-sign sum of s_1..s_j.  The class is nonempty iff
    every k_j is nonnegative, the boundary count k_n vanishes, and the row
    count implied by sum(s)/2 is a positive integer; the profile is returned
    exactly in that case.

    >>> two_regular_profile((1, 3, 2)).k
    (1, 2)
    >>> two_regular_profile((3, 2, 1)) is None
    True
    """
    s = tuple(int(v) for v in s)
    if not s or any(v < 0 for v in s):
        return None
    total = sum(s)
    if total % 2 != 0 or total < 2:
        return None
    counts = []
    prev = 0
    for v in s[:-1]:
        cur = v - prev
        if cur < 0:
            return None
        counts.append(cur)
        prev = cur
    if s[-1] != prev:  # boundary: k_n = s_n - k_{n-1} must be 0
        return None
    if sum(counts) != total // 2:
        return None
    return StaircaseProfile(tuple(counts))


def staircase_from_profile(profile: StaircaseProfile, row_width: int) -> BinaryMatrix:
    """Rows of ``row_width`` consecutive 1s: the first k_1 rows start at
    column 1, the next k_2 at column 2, and so on."""
    if row_width < 1:
        raise BadInput("row width must be positive")
    if profile.rows < 1:
        raise BadInput("profile places no rows")
    n = row_width + len(profile.k) - 1
    rows = []
    for start, count in enumerate(profile.k):
        row = tuple(1 if start <= j < start + row_width else 0 for j in range(n))
        rows.extend([row] * count)
    return BinaryMatrix(tuple(rows))


def sort_rows_to_convex(a: BinaryMatrix) -> BinaryMatrix:
    """Reorder the rows of a row-convex constant-row-sum matrix by leftmost
    1 so the result is convex.  Column sums are unchanged."""
    mp = margins(a)
    k = mp.R[0]
    if k < 1 or any(r != k for r in mp.R):
        raise PreconditionViolated("row sums must be constant and positive")
    if not convexity_check(a, "row"):
        raise PreconditionViolated("matrix is not row convex")
    order = sorted(range(a.m), key=lambda i: a.cells[i].index(1))
    return BinaryMatrix(tuple(a.cells[i] for i in order))


def block_regular_class(
    m: int, n: int, k: int, l: int
) -> tuple[int, Iterator[BinaryMatrix]] | None:
    """The convex matrices tiled by k-by-l all-ones blocks along a
    permutation pattern, when an m-by-n grid admits them.

    Present iff m/k = n/l is a positive integer p; then there are exactly
    p! members, one per permutation matrix of order p, each with row sums l
    and column sums k.
    """
    if min(m, n, k, l) < 1 or k > m or l > n:
        return None
    if m % k or n % l or m // k != n // l:
        return None
    p = m // k

    def members() -> Iterator[BinaryMatrix]:
        for perm in itertools.permutations(range(p)):
            rows = []
            for bi in range(p):
                block_row = tuple(
                    1 if perm[bi] * l <= j < (perm[bi] + 1) * l else 0
                    for j in range(n)
                )
                rows.extend([block_row] * k)
            yield BinaryMatrix(tuple(rows))

    import math

    return math.factorial(p), members()


def ferrers_matrix(u: FerrersShape | Sequence[int], m: int, n: int) -> BinaryMatrix:
    """Left-justified 1s with nonincreasing row counts ``u`` in an m-by-n grid."""
    shape = u if isinstance(u, FerrersShape) else FerrersShape(tuple(u))
    lengths = shape.row_lengths
    if len(lengths) > m:
        raise ShapeMismatch(f"{len(lengths)} rows do not fit in {m}")
    if lengths and lengths[0] > n:
        raise ShapeMismatch(f"row of length {lengths[0]} does not fit in {n}")
    padded = lengths + (0,) * (m - len(lengths))
    return BinaryMatrix(
        tuple(tuple(1 if j < padded[i] else 0 for j in range(n)) for i in range(m))
    )


def ferrers_convex(spec: FerrersConvexSpec) -> BinaryMatrix:
    """Assemble the four rotated Ferrers blocks into one convex matrix.

    The lower-right block keeps its corner at the top left; the other three
    are rotated so every block's 1s are justified toward the two dividing
    lines, which is what makes each full row and column convex.
    """
    a11 = rotate(ferrers_matrix(spec.u11, spec.m1, spec.n1), 2)
    a12 = rotate(ferrers_matrix(spec.u12, spec.n2, spec.m1), 1)
    a21 = rotate(ferrers_matrix(spec.u21, spec.n1, spec.m2), 3)
    a22 = ferrers_matrix(spec.u22, spec.m2, spec.n2)
    top = [ra + rb for ra, rb in zip(a11.cells, a12.cells)]
    bottom = [ra + rb for ra, rb in zip(a21.cells, a22.cells)]
    return BinaryMatrix(tuple(top + bottom))


def is_unimodal(v: Sequence[int]) -> bool:
    """True iff ``v`` is nondecreasing and then nonincreasing.

    >>> is_unimodal((1, 3, 4, 3, 1)), is_unimodal((2, 1, 2))
    (True, False)
    """
    descended = False
    for prev, cur in zip(v, v[1:]):
        if cur < prev:
            descended = True
        elif cur > prev and descended:
            return False
    return True
