"""2x2 switches, convexity-preserving switches, and convex-class tools.

A switch replaces a 2x2 submatrix equal to [[1,0],[0,1]] by [[0,1],[1,0]]
or back, leaving both margin vectors unchanged.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .binmat import BinaryMatrix, Interval, MarginPair, convexity_check, margins
from .classes import enumerate_class
from .errors import InvalidMove, ParseError, PreconditionViolated, SpecInvalid


@dataclass(frozen=True)
class InterchangeMove:
    """Two rows and two columns, plus which diagonal holds the 1s before
    the switch (``main`` is the row_a/col_a - row_b/col_b diagonal)."""

    row_a: int
    row_b: int
    col_a: int
    col_b: int
    main_diagonal: bool

    def __post_init__(self):
        if not (self.row_a < self.row_b and self.col_a < self.col_b):
            raise ValueError("move indices must be ordered")

    def __str__(self) -> str:
        diag = "main" if self.main_diagonal else "anti"
        return f"rows {self.row_a},{self.row_b} cols {self.col_a},{self.col_b} ({diag})"


class IntervalRelation(enum.Enum):
    SINGLETONS = "SINGLETONS"
    NESTED = "NESTED"
    ONE_SHIFT = "ONE_SHIFT"
    VIOLATION = "VIOLATION"


@dataclass(frozen=True)
class OneShiftPair:
    """Two equal-length intervals (length >= 2) offset by one position."""

    first: Interval
    second: Interval

    def __post_init__(self):
        a, b = self.first, self.second
        if len(a) < 2 or len(a) != len(b) or abs(a.start - b.start) != 1:
            raise SpecInvalid(f"{a} / {b} is not a 1-shift pair")

    def union_span(self) -> Interval:
        return self.first.union_span(self.second)

    def intersection(self) -> Interval:
        return Interval(
            max(self.first.start, self.second.start),
            min(self.first.end, self.second.end),
        )


@dataclass(frozen=True)
class ConvexClassSpec:
    """Nested 1-shift pairs, innermost first; the last pair must span every
    column of the matrix it generates."""

    pairs: tuple[OneShiftPair, ...]

    def __post_init__(self):
        if not self.pairs:
            raise SpecInvalid("a class spec needs at least one pair")
        for prev, cur in zip(self.pairs, self.pairs[1:]):
            if not cur.intersection().contains(prev.union_span()):
                raise SpecInvalid(
                    f"pair {cur.first}/{cur.second} does not nest around "
                    f"{prev.first}/{prev.second}"
                )
        if self.pairs[-1].union_span().start != 1:
            raise SpecInvalid("outermost pair must cover column 1")

    @property
    def columns(self) -> int:
        return self.pairs[-1].union_span().end

    @classmethod
    def from_text(cls, text: str) -> "ConvexClassSpec":
        """Parse one ``a..b c..d`` pair per line, innermost first."""
        pairs = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseError("expected two ranges 'a..b c..d'", lineno)
            try:
                made = [Interval(*(int(x) for x in part.split("..", 1))) for part in parts]
            except (ValueError, TypeError):
                raise ParseError("ranges must look like 'a..b'", lineno) from None
            pairs.append(OneShiftPair(made[0], made[1]))
        if not pairs:
            raise ParseError("spec file contains no pairs")
        return cls(tuple(pairs))

    def __str__(self) -> str:
        return "; ".join(
            f"{p.first.start}..{p.first.end} {p.second.start}..{p.second.end}"
            for p in self.pairs
        )


def enumerate_interchanges(a: BinaryMatrix) -> list[InterchangeMove]:
    """Every available switch, sorted by (row_a, row_b, col_a, col_b)."""
    out = []
    cells = a.cells
    m, n = a.shape
    for ra in range(m - 1):
        for rb in range(ra + 1, m):
            top, bottom = cells[ra], cells[rb]
            for ca in range(n - 1):
                for cb in range(ca + 1, n):
                    quad = (top[ca], top[cb], bottom[ca], bottom[cb])
                    if quad == (1, 0, 0, 1):
                        out.append(InterchangeMove(ra + 1, rb + 1, ca + 1, cb + 1, True))
                    elif quad == (0, 1, 1, 0):
                        out.append(InterchangeMove(ra + 1, rb + 1, ca + 1, cb + 1, False))
    return out


def apply_interchange(a: BinaryMatrix, move: InterchangeMove) -> BinaryMatrix:
    """The switched matrix; margins are untouched."""
    m, n = a.shape
    if not (1 <= move.row_a < move.row_b <= m and 1 <= move.col_a < move.col_b <= n):
        raise InvalidMove(f"{move} is outside a {m}x{n} matrix")
    quad = (
        a.entry(move.row_a, move.col_a),
        a.entry(move.row_a, move.col_b),
        a.entry(move.row_b, move.col_a),
        a.entry(move.row_b, move.col_b),
    )
    expected = (1, 0, 0, 1) if move.main_diagonal else (0, 1, 1, 0)
    if quad != expected:
        raise InvalidMove(f"{move} does not match the matrix contents")
    rows = [list(row) for row in a.cells]
    for i, j in (
        (move.row_a, move.col_a),
        (move.row_a, move.col_b),
        (move.row_b, move.col_a),
        (move.row_b, move.col_b),
    ):
        rows[i - 1][j - 1] ^= 1
    return BinaryMatrix.from_rows(rows)


def structural_move_check(a: BinaryMatrix, move: InterchangeMove) -> bool:
    """Block-structure test for a switch on a convex matrix whose line sums
    are all at least 2.

    The rows and columns of the move must bound a central all-ones block
    with zeros exactly at one diagonal's two corners, the move's rows must
    be zero outside the block's columns, and the move's columns must be
    zero outside the block's rows.
    """
    i1, i2, j1, j2 = move.row_a, move.row_b, move.col_a, move.col_b
    # The pre-switch 0s of the quad are the block's two corner zeros.
    corner_zeros = (
        {(i1, j2), (i2, j1)} if move.main_diagonal else {(i1, j1), (i2, j2)}
    )
    for i in range(i1, i2 + 1):
        for j in range(j1, j2 + 1):
            want = 0 if (i, j) in corner_zeros else 1
            if a.entry(i, j) != want:
                return False
    for i in (i1, i2):
        for j in range(1, a.n + 1):
            if not (j1 <= j <= j2) and a.entry(i, j) != 0:
                return False
    for j in (j1, j2):
        for i in range(1, a.m + 1):
            if not (i1 <= i <= i2) and a.entry(i, j) != 0:
                return False
    return True


def convex_preserving_moves(a: BinaryMatrix) -> list[InterchangeMove]:
    """The switches of a convex matrix that land on a convex matrix.

    Selected by applying each switch and rechecking convexity; when every
    line sum is at least 2, the block-structure test must also accept the
    move (for such matrices the two criteria provably coincide, and the
    structural sweep verifies that exhaustively).
    """
    if not convexity_check(a):
        raise PreconditionViolated("matrix is not convex")
    moves = [
        mv
        for mv in enumerate_interchanges(a)
        if convexity_check(apply_interchange(a, mv))
    ]
    mp = margins(a)
    if all(r >= 2 for r in mp.R) and all(s >= 2 for s in mp.S):
        moves = [mv for mv in moves if structural_move_check(a, mv)]
    return moves


def is_convex_class(pair: MarginPair, cap: int = 25) -> bool:
    """True iff every matrix with the given margins is convex (by
    enumeration; empty classes count as convex)."""
    return all(
        convexity_check(x) for x in enumerate_class(pair, convex_only=False, cap=cap)
    )


def interval_relation(i: Interval, j: Interval) -> IntervalRelation:
    """Classify a pair of parallel line intervals: both singletons, one
    nested in the other, a 1-shift pair, or a violation of all three.

    >>> interval_relation(Interval(2, 4), Interval(3, 5))
    <IntervalRelation.ONE_SHIFT: 'ONE_SHIFT'>
    """
    if len(i) == 1 and len(j) == 1:
        return IntervalRelation.SINGLETONS
    if i.contains(j) or j.contains(i):
        return IntervalRelation.NESTED
    if len(i) == len(j) and abs(i.start - j.start) == 1:
        return IntervalRelation.ONE_SHIFT
    return IntervalRelation.VIOLATION


def build_convex_class(spec: ConvexClassSpec) -> tuple[MarginPair, list[BinaryMatrix]]:
    """Materialize the class generated by nested 1-shift pairs.

    Pair i occupies rows i and 2k+1-i from the outside in, so the nesting
    condition makes every member convex.  Each pair flips independently,
    giving 2**k distinct matrices that exhaust the margin class.
    """
    k = len(spec.pairs)
    n = spec.columns
    members = []
    for mask in range(2 ** k):
        rows = []
        for idx in range(2 * k):
            pair_idx = idx if idx < k else 2 * k - 1 - idx
            pair = spec.pairs[pair_idx]
            flipped = bool(mask >> pair_idx & 1)
            top_first = not flipped
            use_first = top_first if idx < k else not top_first
            interval = pair.first if use_first else pair.second
            rows.append(tuple(1 if j in interval else 0 for j in range(1, n + 1)))
        members.append(BinaryMatrix(tuple(rows)))
    return margins(members[0]), members
