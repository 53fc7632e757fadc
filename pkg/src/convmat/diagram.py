"""Shading diagrams, essential sets, and ranked essential sets.

Every 1 of a matrix shades itself, its row to the east, and its column to
the south.  The *diagram* is the set of unshaded positions.  A position of
the diagram is *SE-essential* when its east and south neighbours are shaded
or off the grid; the other three directions are obtained by rotating the
matrix, applying the SE rule, and mapping positions back.  The *ranked*
essential set annotates each SE-essential position with the number of 1s in
the leading submatrix it determines.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binmat import (
    BinaryMatrix,
    Direction,
    Position,
    TURNS_TO_SE,
    rotate,
    rotate_position,
)
from .errors import ParseError

#: (row, col, rank) triple, 1-based.
RankedEntry = tuple[int, int, int]


@dataclass(frozen=True)
class Diagram:
    """Unshaded positions of a matrix, with the grid shape they live in."""

    shape: tuple[int, int]
    unshaded: frozenset[Position]

    def __post_init__(self):
        m, n = self.shape
        for i, j in self.unshaded:
            if not (1 <= i <= m and 1 <= j <= n):
                raise ValueError(f"position {(i, j)} outside {self.shape}")

    def __contains__(self, pos: Position) -> bool:
        return pos in self.unshaded

    def __len__(self) -> int:
        return len(self.unshaded)


@dataclass(frozen=True)
class FerrersShape:
    """Nonincreasing row-length vector of a left-justified array."""

    row_lengths: tuple[int, ...]

    def __post_init__(self):
        u = tuple(int(x) for x in self.row_lengths)
        if any(x < 0 for x in u):
            raise ValueError("row lengths must be nonnegative")
        if any(u[i] < u[i + 1] for i in range(len(u) - 1)):
            raise ValueError(f"row lengths {u} are not nonincreasing")
        object.__setattr__(self, "row_lengths", u)

    def __len__(self) -> int:
        return len(self.row_lengths)


@dataclass(frozen=True)
class RankedEssentialSet:
    """SE-essential positions of a matrix, each holding a leading-box rank."""

    shape: tuple[int, int]
    entries: frozenset[RankedEntry]

    def __post_init__(self):
        m, n = self.shape
        seen: set[Position] = set()
        for i, j, r in self.entries:
            if not (1 <= i <= m and 1 <= j <= n):
                raise ValueError(f"position {(i, j)} outside {self.shape}")
            if r < 0:
                raise ValueError(f"negative rank at {(i, j)}")
            if (i, j) in seen:
                raise ValueError(f"duplicate position {(i, j)}")
            seen.add((i, j))

    def positions(self) -> frozenset[Position]:
        return frozenset((i, j) for i, j, _ in self.entries)

    def sorted_entries(self) -> list[RankedEntry]:
        return sorted(self.entries)

    @classmethod
    def from_text(cls, text: str, shape: tuple[int, int]) -> "RankedEssentialSet":
        """Parse the ``i j r`` per-line format (order-insensitive)."""
        entries = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ParseError("expected three integers 'i j r'", lineno)
            try:
                i, j, r = (int(p) for p in parts)
            except ValueError:
                raise ParseError("expected three integers 'i j r'", lineno) from None
            entries.append((i, j, r))
        try:
            return cls(shape, frozenset(entries))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def to_text(self) -> str:
        return "".join(f"{i} {j} {r}\n" for i, j, r in self.sorted_entries())


def diagram(a: BinaryMatrix) -> Diagram:
    """Unshaded positions of ``a`` under the shade-east-and-south rule.

    (i, j) stays unshaded iff row i has no 1 at a column <= j and column j
    has no 1 at a row <= i.
    """
    m, n = a.shape
    first_in_row = [row.index(1) + 1 if 1 in row else n + 1 for row in a.cells]
    first_in_col = [col.index(1) + 1 if 1 in col else m + 1 for col in a.columns()]
    unshaded = frozenset(
        (i, j)
        for i in range(1, m + 1)
        for j in range(1, min(first_in_row[i - 1], n + 1))
        if i < first_in_col[j - 1]
    )
    return Diagram((m, n), unshaded)


def _se_corners(d: Diagram) -> set[Position]:
    return {
        (i, j)
        for (i, j) in d.unshaded
        if (i + 1, j) not in d.unshaded and (i, j + 1) not in d.unshaded
    }


def essential_set(a: BinaryMatrix, direction: Direction = Direction.SE) -> set[Position]:
    """Essential positions of ``a`` for one compass direction.

    >>> sorted(essential_set(BinaryMatrix.zeros(3, 3), Direction.SE))
    [(3, 3)]
    """
    turns = TURNS_TO_SE[direction]
    rotated = rotate(a, turns)
    corners = _se_corners(diagram(rotated))
    back = (4 - turns) % 4
    return {rotate_position(p, rotated.shape, back) for p in corners}


def leading_ones(a: BinaryMatrix, i: int, j: int) -> int:
    """Number of 1s in rows 1..i and columns 1..j."""
    return sum(sum(row[:j]) for row in a.cells[:i])


def ranked_essential_set(a: BinaryMatrix) -> RankedEssentialSet:
    """SE-essential positions of ``a`` with their leading-submatrix ranks."""
    entries = frozenset(
        (i, j, leading_ones(a, i, j)) for (i, j) in essential_set(a, Direction.SE)
    )
    return RankedEssentialSet(a.shape, entries)


def full_essential_set(a: BinaryMatrix) -> dict[Position, frozenset[Direction]]:
    """Union of the four directional essential sets.

    Maps each position to every direction that produced it.
    """
    tagged: dict[Position, set[Direction]] = {}
    for direction in Direction:
        for pos in essential_set(a, direction):
            tagged.setdefault(pos, set()).add(direction)
    return {pos: frozenset(dirs) for pos, dirs in tagged.items()}


def is_ferrers_diagram(d: Diagram) -> FerrersShape | None:
    """Row-length vector of ``d`` when it is left-justified and nonincreasing."""
    m, n = d.shape
    lengths = [0] * m
    for i, _ in d.unshaded:
        lengths[i - 1] += 1
    justified = {
        (i, j) for i in range(1, m + 1) for j in range(1, lengths[i - 1] + 1)
    }
    if justified != d.unshaded:
        return None
    if any(lengths[i] < lengths[i + 1] for i in range(m - 1)):
        return None
    return FerrersShape(tuple(lengths))
