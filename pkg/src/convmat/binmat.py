"""Dense (0,1)-matrices and the primitives everything else builds on.

A :class:`BinaryMatrix` is immutable: ``cells`` is a tuple of row tuples,
every entry 0 or 1, with at least one row and one column.  All positions
that cross the public API are 1-based ``(row, col)`` pairs, matching the
text formats of the command line tools; indexing inside this package is
0-based.

Text format (bit exact): one line per row, characters ``0``/``1``,
optionally separated by single spaces; blank lines and lines starting
with ``#`` are ignored; writers emit the space-free form.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import NonBinaryChar, ParseError, RaggedRows, ShapeMismatch

#: 1-based (row, col) pair.
Position = tuple[int, int]


class Direction(enum.Enum):
    """Compass corner used for sources and essential sets."""

    SE = "SE"
    SW = "SW"
    NE = "NE"
    NW = "NW"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


#: Where a direction-tagged feature lands after one counter-clockwise
#: quarter turn of the matrix.
ROTATED_DIRECTION = {
    Direction.SE: Direction.NE,
    Direction.NE: Direction.NW,
    Direction.NW: Direction.SW,
    Direction.SW: Direction.SE,
}

#: Quarter turns that carry a feature of the given direction onto SE.
TURNS_TO_SE = {
    Direction.SE: 0,
    Direction.SW: 1,
    Direction.NW: 2,
    Direction.NE: 3,
}


class Comparison(enum.Enum):
    LESS_EQUAL = "LESS_EQUAL"
    GREATER_EQUAL = "GREATER_EQUAL"
    EQUAL = "EQUAL"
    INCOMPARABLE = "INCOMPARABLE"


@dataclass(frozen=True)
class Interval:
    """Nonempty inclusive range of 1-based indices."""

    start: int
    end: int

    def __post_init__(self):
        if self.start > self.end:
            raise ValueError(f"empty interval [{self.start}, {self.end}]")

    def __len__(self) -> int:
        return self.end - self.start + 1

    def __contains__(self, index: int) -> bool:
        return self.start <= index <= self.end

    def contains(self, other: "Interval") -> bool:
        return self.start <= other.start and other.end <= self.end

    def union_span(self, other: "Interval") -> "Interval":
        return Interval(min(self.start, other.start), max(self.end, other.end))


@dataclass(frozen=True)
class MarginPair:
    """Row sum vector R and column sum vector S of a prospective class."""

    R: tuple[int, ...]
    S: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "R", tuple(int(r) for r in self.R))
        object.__setattr__(self, "S", tuple(int(s) for s in self.S))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.R), len(self.S)

    def total(self) -> int:
        return sum(self.R)

    def is_consistent(self) -> bool:
        """Sums agree and every entry fits inside the grid."""
        m, n = self.shape
        if m == 0 or n == 0 or sum(self.R) != sum(self.S):
            return False
        return all(0 <= r <= n for r in self.R) and all(0 <= s <= m for s in self.S)

    def is_positive(self) -> bool:
        return all(r >= 1 for r in self.R) and all(s >= 1 for s in self.S)

    @classmethod
    def from_text(cls, text: str) -> "MarginPair":
        """Parse the two-line ``R: ...`` / ``S: ...`` margins format."""
        vectors: dict[str, tuple[int, ...]] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            head, sep, rest = line.partition(":")
            name = head.strip().upper()
            if not sep or name not in ("R", "S"):
                raise ParseError("expected 'R: ...' or 'S: ...'", lineno)
            if name in vectors:
                raise ParseError(f"duplicate {name} line", lineno)
            try:
                vectors[name] = tuple(int(tok) for tok in rest.split())
            except ValueError:
                raise ParseError(f"non-integer entry in {name}", lineno) from None
            if not vectors[name]:
                raise ParseError(f"empty {name} vector", lineno)
            if any(v < 0 for v in vectors[name]):
                raise ParseError(f"negative entry in {name}", lineno)
        if "R" not in vectors or "S" not in vectors:
            raise ParseError("margins file needs both an R line and an S line")
        return cls(vectors["R"], vectors["S"])

    def to_text(self) -> str:
        return (
            "R: " + " ".join(str(r) for r in self.R) + "\n"
            "S: " + " ".join(str(s) for s in self.S) + "\n"
        )


@dataclass(frozen=True)
class BinaryMatrix:
    """An m-by-n grid of bits, m, n >= 1."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.cells)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise ValueError("rows have unequal lengths")
            if not set(row) <= {0, 1}:
                raise ValueError("entries must be 0 or 1")
        object.__setattr__(self, "cells", rows)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "BinaryMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def zeros(cls, m: int, n: int) -> "BinaryMatrix":
        return cls(tuple((0,) * n for _ in range(m)))

    @classmethod
    def ones(cls, m: int, n: int) -> "BinaryMatrix":
        return cls(tuple((1,) * n for _ in range(m)))

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_permutation(cls, one_line: Sequence[int]) -> "BinaryMatrix":
        """Permutation matrix with a 1 at (i, one_line[i-1]) for each row i.

        >>> BinaryMatrix.from_permutation((2, 1)).to_text()
        '01\\n10\\n'
        """
        n = len(one_line)
        if sorted(one_line) != list(range(1, n + 1)):
            raise ValueError("not a permutation of 1..n")
        return cls(tuple(tuple(1 if one_line[i] == j + 1 else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_text(cls, text: str) -> "BinaryMatrix":
        rows: list[tuple[int, ...]] = []
        width: int | None = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            compact = line.replace(" ", "")
            bad = set(compact) - {"0", "1"}
            if bad:
                raise NonBinaryChar(f"invalid characters {sorted(bad)!r}", lineno)
            if width is None:
                width = len(compact)
            elif len(compact) != width:
                raise RaggedRows(
                    f"row has {len(compact)} columns, expected {width}", lineno
                )
            rows.append(tuple(int(c) for c in compact))
        if not rows:
            raise ParseError("no matrix rows found")
        return cls(tuple(rows))

    # -- basic queries --------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.cells)

    @property
    def n(self) -> int:
        return len(self.cells[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    def entry(self, i: int, j: int) -> int:
        """Entry at 1-based position (i, j)."""
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise IndexError((i, j))
        return self.cells[i - 1][j - 1]

    def count_ones(self) -> int:
        return sum(sum(row) for row in self.cells)

    def ones_positions(self) -> list[Position]:
        """All 1-cells in row-major order, 1-based."""
        return [
            (i + 1, j + 1)
            for i, row in enumerate(self.cells)
            for j, v in enumerate(row)
            if v
        ]

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.cells))

    def row_interval(self, i: int) -> Interval | None:
        """The inclusive span of 1s in row i, or None for an all-zero row.

        The span is only an interval of 1s when the row is convex; callers
        that need that guarantee must check convexity themselves.
        """
        row = self.cells[i - 1]
        total = sum(row)
        if total == 0:
            return None
        first = row.index(1) + 1
        last = len(row) - row[::-1].index(1)
        return Interval(first, last)

    def col_interval(self, j: int) -> Interval | None:
        col = tuple(row[j - 1] for row in self.cells)
        if sum(col) == 0:
            return None
        first = col.index(1) + 1
        last = len(col) - col[::-1].index(1)
        return Interval(first, last)

    def with_flipped(self, i: int, j: int) -> "BinaryMatrix":
        """Copy with the entry at (i, j) toggled."""
        rows = [list(row) for row in self.cells]
        rows[i - 1][j - 1] ^= 1
        return BinaryMatrix.from_rows(rows)

    def to_text(self) -> str:
        return "".join("".join(str(v) for v in row) + "\n" for row in self.cells)

    def __str__(self) -> str:
        return self.to_text().rstrip("\n")


# -- margins ------------------------------------------------------------------


def margins(a: BinaryMatrix) -> MarginPair:
    """Row and column sum vectors of ``a``.

    >>> margins(BinaryMatrix.ones(2, 3))
    MarginPair(R=(3, 3), S=(2, 2, 2))
    """
    return MarginPair(
        tuple(sum(row) for row in a.cells),
        tuple(sum(col) for col in a.columns()),
    )


# -- convexity and connectivity ------------------------------------------------


def _line_convex(line: Sequence[int]) -> bool:
    total = sum(line)
    if total == 0:
        return True
    first = line.index(1)
    return all(line[first : first + total])


def convexity_check(a: BinaryMatrix, mode: str = "both") -> bool:
    """True iff the 1s are consecutive in every line of the requested kind.

    ``mode`` is one of ``"row"``, ``"column"``, ``"both"``.  Lines without
    1s count as convex, so the zero matrix is convex.
    """
    if mode not in ("row", "column", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode in ("row", "both") and not all(_line_convex(r) for r in a.cells):
        return False
    if mode in ("column", "both") and not all(_line_convex(c) for c in a.columns()):
        return False
    return True


def connectivity_check(a: BinaryMatrix) -> bool:
    """True iff ``a`` has no zero line and its 1s form one rookwise component."""
    mp = margins(a)
    if not mp.is_positive():
        return False
    ones = a.ones_positions()
    seen = {ones[0]}
    stack = [ones[0]]
    cells = a.cells
    m, n = a.shape
    while stack:
        i, j = stack.pop()
        for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            p = (i + di, j + dj)
            if (
                1 <= p[0] <= m
                and 1 <= p[1] <= n
                and p not in seen
                and cells[p[0] - 1][p[1] - 1]
            ):
                seen.add(p)
                stack.append(p)
    return len(seen) == len(ones)


# -- sources -------------------------------------------------------------------

#: For each source type: (steps the monotone path may take, how to pick the
#: unique candidate cell from the row/col extremes of the 1s).
_SOURCE_RULES: dict[Direction, tuple[tuple[tuple[int, int], ...], Callable]] = {
    Direction.SE: (((1, 0), (0, 1)), lambda rs, cs: (min(rs), min(cs))),
    Direction.NE: (((-1, 0), (0, 1)), lambda rs, cs: (max(rs), min(cs))),
    Direction.NW: (((-1, 0), (0, -1)), lambda rs, cs: (max(rs), max(cs))),
    Direction.SW: (((1, 0), (0, -1)), lambda rs, cs: (min(rs), max(cs))),
}


def find_sources(a: BinaryMatrix) -> dict[Direction, Position | None]:
    """The unique source of each type, when it exists.

    A D-source is a 1 from which every other 1 is reachable by a rookwise
    path of adjacent 1s stepping only in the two compass directions of D.
    Any source must sit at the extreme corner of the support, so there is a
    single candidate per direction; a flood fill settles it.
    """
    out: dict[Direction, Position | None] = {d: None for d in Direction}
    ones = a.ones_positions()
    if not ones:
        return out
    total = len(ones)
    rows = [p[0] for p in ones]
    cols = [p[1] for p in ones]
    cells = a.cells
    m, n = a.shape
    for direction, (steps, pick) in _SOURCE_RULES.items():
        start = pick(rows, cols)
        if not cells[start[0] - 1][start[1] - 1]:
            continue
        seen = {start}
        stack = [start]
        while stack:
            i, j = stack.pop()
            for di, dj in steps:
                p = (i + di, j + dj)
                if (
                    1 <= p[0] <= m
                    and 1 <= p[1] <= n
                    and p not in seen
                    and cells[p[0] - 1][p[1] - 1]
                ):
                    seen.add(p)
                    stack.append(p)
        if len(seen) == total:
            out[direction] = start
    return out


def is_directed(a: BinaryMatrix) -> bool:
    return any(p is not None for p in find_sources(a).values())


# -- rotation ------------------------------------------------------------------


def rotate(a: BinaryMatrix, quarter_turns: int) -> BinaryMatrix:
    """Counter-clockwise rotation by 90 degrees ``quarter_turns`` times.

    >>> rotate(BinaryMatrix.from_text("10\\n00\\n"), 1).to_text()
    '00\\n10\\n'
    """
    q = quarter_turns % 4
    cells = a.cells
    for _ in range(q):
        n = len(cells[0])
        cells = tuple(tuple(row[n - 1 - r] for row in cells) for r in range(n))
    return BinaryMatrix(cells)


def rotate_position(pos: Position, shape: tuple[int, int], quarter_turns: int) -> Position:
    """Image of a 1-based position under ``rotate`` of a ``shape`` matrix."""
    i, j = pos
    m, n = shape
    for _ in range(quarter_turns % 4):
        i, j = n + 1 - j, i
        m, n = n, m
    return i, j


def rotate_direction(direction: Direction, quarter_turns: int) -> Direction:
    d = direction
    for _ in range(quarter_turns % 4):
        d = ROTATED_DIRECTION[d]
    return d


# -- entrywise order and boolean algebra ----------------------------------------


def _require_same_shape(a: BinaryMatrix, b: BinaryMatrix) -> None:
    if a.shape != b.shape:
        raise ShapeMismatch(f"shapes {a.shape} and {b.shape} differ")


def compare(a: BinaryMatrix, b: BinaryMatrix) -> Comparison:
    """Entrywise comparison of two equal-shape matrices."""
    _require_same_shape(a, b)
    le = ge = True
    for ra, rb in zip(a.cells, b.cells):
        for x, y in zip(ra, rb):
            if x > y:
                le = False
            elif x < y:
                ge = False
        if not le and not ge:
            return Comparison.INCOMPARABLE
    if le and ge:
        return Comparison.EQUAL
    return Comparison.LESS_EQUAL if le else Comparison.GREATER_EQUAL


def dominates(a: BinaryMatrix, b: BinaryMatrix) -> bool:
    """True iff ``a`` >= ``b`` entrywise."""
    return compare(a, b) in (Comparison.GREATER_EQUAL, Comparison.EQUAL)


def entrywise_and(a: BinaryMatrix, b: BinaryMatrix) -> BinaryMatrix:
    _require_same_shape(a, b)
    return BinaryMatrix(
        tuple(tuple(x & y for x, y in zip(ra, rb)) for ra, rb in zip(a.cells, b.cells))
    )


def entrywise_or(a: BinaryMatrix, b: BinaryMatrix) -> BinaryMatrix:
    _require_same_shape(a, b)
    return BinaryMatrix(
        tuple(tuple(x | y for x, y in zip(ra, rb)) for ra, rb in zip(a.cells, b.cells))
    )
