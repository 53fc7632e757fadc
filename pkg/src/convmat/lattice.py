"""The lattice of m-by-n convex matrices under the entrywise order.

Meet is the entrywise AND (always convex); join is the convex hull of the
entrywise OR, which equals the least upper bound because the hull is the
minimum convex matrix above its argument.  A matrix covers another when it
dominates it with exactly one extra 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binmat import (
    BinaryMatrix,
    Direction,
    Position,
    convexity_check,
    dominates,
    entrywise_and,
    entrywise_or,
)
from .diagram import full_essential_set
from .errors import PreconditionViolated


@dataclass(frozen=True)
class CoverStep:
    """A 0-cell whose flip yields a convex matrix one 1 above the base.

    ``direction_tags`` lists the directional essential sets that certify
    the position; it is empty in the degenerate cases where a cover exists
    at a position none of the essential sets contains (see ``covers``).
    """

    position: Position
    direction_tags: frozenset[Direction]


def _require_convex(a: BinaryMatrix, role: str = "argument") -> None:
    if not convexity_check(a):
        raise PreconditionViolated(f"{role} is not convex")


def meet(c1: BinaryMatrix, c2: BinaryMatrix) -> BinaryMatrix:
    """Greatest lower bound: the entrywise AND, convex whenever the
    arguments are."""
    _require_convex(c1)
    _require_convex(c2)
    return entrywise_and(c1, c2)


def convex_hull(a: BinaryMatrix) -> BinaryMatrix:
    """The minimum convex matrix dominating ``a``: fill every 0 between two
    1s of a line, alternating rows and columns until nothing changes."""
    rows = [list(row) for row in a.cells]
    m, n = a.shape
    changed = True
    while changed:
        changed = False
        for row in rows:
            changed |= _fill_between(row)
        for j in range(n):
            col = [rows[i][j] for i in range(m)]
            if _fill_between(col):
                changed = True
                for i in range(m):
                    rows[i][j] = col[i]
    return BinaryMatrix.from_rows(rows)


def _fill_between(line: list[int]) -> bool:
    total = sum(line)
    if total <= 1:
        return False
    first = line.index(1)
    last = len(line) - 1 - line[::-1].index(1)
    if last - first + 1 == total:
        return False
    line[first : last + 1] = [1] * (last - first + 1)
    return True


def join(c1: BinaryMatrix, c2: BinaryMatrix) -> BinaryMatrix:
    """Least upper bound: the convex hull of the entrywise OR."""
    _require_convex(c1)
    _require_convex(c2)
    return convex_hull(entrywise_or(c1, c2))


def _flip_keeps_convex(c: BinaryMatrix, i: int, j: int) -> bool:
    """Would turning the 0 at (i, j) into a 1 keep ``c`` convex?

    Only the touched row and column can change, and each stays convex iff
    it was empty or the new 1 extends its interval by one endpoint.
    """
    row = c.row_interval(i)
    if row is not None and j != row.start - 1 and j != row.end + 1:
        return False
    col = c.col_interval(j)
    if col is not None and i != col.start - 1 and i != col.end + 1:
        return False
    return True


def covers(c: BinaryMatrix) -> list[CoverStep]:
    """All convex matrices covering ``c``, as flip positions.

    Every returned flip is convex with exactly one more 1 than ``c``, and
    the list is exhaustive.  Each position carries the directions of the
    combined essential set that certify it.  For matrices without zero
    lines whose components do not interleave, the cover positions are
    exactly the combined essential set; with zero lines (extra covers away
    from any essential position, e.g. the centre of a zero matrix) or with
    several diagonal blocks (essential positions whose flip breaks a line)
    the two sets genuinely differ, which the ``thm-5.3-covers`` sweep
    reports rather than hides.
    """
    _require_convex(c)
    tags = full_essential_set(c)
    out = []
    for i in range(1, c.m + 1):
        for j in range(1, c.n + 1):
            if c.entry(i, j) == 0 and _flip_keeps_convex(c, i, j):
                out.append(
                    CoverStep((i, j), tags.get((i, j), frozenset()))
                )
    return out


def maximal_chain(c: BinaryMatrix, direction: str = "up") -> list[BinaryMatrix]:
    """A maximal chain from ``c`` to the all-ones matrix (``up``) or the
    zero matrix (``down``), every consecutive pair a cover.

    Deterministic: each step flips the row-major smallest admissible cell.
    An up chain and a down chain from the same matrix together contain
    mn + 1 distinct matrices.
    """
    if direction not in ("up", "down"):
        raise ValueError(f"unknown direction {direction!r}")
    _require_convex(c)
    chain = [c]
    if direction == "up":
        target = c.m * c.n
        while chain[-1].count_ones() < target:
            step = min(s.position for s in covers(chain[-1]))
            chain.append(chain[-1].with_flipped(*step))
    else:
        while chain[-1].count_ones() > 0:
            cur = chain[-1]
            pos = min(
                (i, j)
                for (i, j) in cur.ones_positions()
                if _removal_keeps_convex(cur, i, j)
            )
            chain.append(cur.with_flipped(*pos))
    return chain


def _removal_keeps_convex(c: BinaryMatrix, i: int, j: int) -> bool:
    """A 1 may be removed iff it is an endpoint of both its line intervals.

    The first 1 in row-major order always qualifies, so a down chain never
    strands.
    """
    row = c.row_interval(i)
    col = c.col_interval(j)
    return j in (row.start, row.end) and i in (col.start, col.end)


def distributivity_witness(
    m: int, n: int
) -> tuple[BinaryMatrix, BinaryMatrix, BinaryMatrix] | None:
    """The first convex triple (in enumeration order) with
    join(c1, meet(c2, c3)) != meet(join(c1, c2), join(c1, c3)), if any."""
    from .oracle import iter_convex

    pool = list(iter_convex(m, n))
    for c1 in pool:
        for c2 in pool:
            for c3 in pool:
                lhs = join(c1, meet(c2, c3))
                rhs = meet(join(c1, c2), join(c1, c3))
                if lhs != rhs:
                    return c1, c2, c3
    return None
