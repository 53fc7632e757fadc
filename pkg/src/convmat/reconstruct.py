"""Rebuild convex matrices from margins plus a ranked essential set, or
from margins plus a source corner.

The ranked-set algorithm fills an initially empty grid by alternating two
moves until every cell is determined:

* every essential entry whose residual rank has reached zero forces the
  whole order ideal below its position to 0, and retires;
* otherwise a 1 is placed at the first undetermined cell of the first
  incomplete row (the row-major minimal position), every residual rank
  whose leading box contains the new 1 is decremented, and consequences
  are propagated eagerly: a line whose 1s are pinned to a boundary or to a
  determined 0 is completed outright, and a line that reaches its margin
  is padded with 0s.

A residual rank going negative, any attempt to overwrite a determined
cell, or a final matrix that fails re-verification (margins, convexity,
recomputed ranked essential set) makes the input infeasible.  Each cell is
written exactly once; rows are written with whole-slice operations, so a
run costs O(mn) with a small constant.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import deque
from dataclasses import dataclass

from .binmat import (
    BinaryMatrix,
    Direction,
    MarginPair,
    TURNS_TO_SE,
    convexity_check,
    find_sources,
    margins,
    rotate,
)
from .diagram import RankedEssentialSet, ranked_essential_set
from .errors import BadInput, Inconsistent, NegativeRank

UNSET = 2  # grid cells are bytes: 0, 1, or UNSET


def _range_diff(a: int, b: int, ca: int, cb: int):
    """Indices in [a, b] that fall outside [ca, cb]."""
    yield from range(a, min(b, ca - 1) + 1)
    yield from range(max(a, cb + 1), b + 1)


@dataclass(frozen=True)
class ReconstructionResult:
    matrix: BinaryMatrix
    cell_writes: int


def _check_margins(pair: MarginPair) -> None:
    if not pair.is_consistent():
        raise BadInput(f"margins R={pair.R} S={pair.S} are not consistent")
    if not pair.is_positive():
        raise BadInput("margins must not contain zero lines")


def reconstruct(pair: MarginPair, res: RankedEssentialSet) -> BinaryMatrix:
    """The unique convex matrix with the given margins and ranked essential
    set, when one exists."""
    return reconstruct_detailed(pair, res).matrix


def reconstruct_detailed(pair: MarginPair, res: RankedEssentialSet) -> ReconstructionResult:
    _check_margins(pair)
    if res.shape != pair.shape:
        raise BadInput(f"set shape {res.shape} does not match margins {pair.shape}")
    engine = _Engine(pair, res)
    matrix = engine.run()
    if margins(matrix) != pair or not convexity_check(matrix):
        raise Inconsistent("filled matrix violates the margins or convexity")
    if ranked_essential_set(matrix).entries != res.entries:
        raise Inconsistent("filled matrix has a different ranked essential set")
    return ReconstructionResult(matrix, engine.writes)


class _Engine:
    """Mutable fill state; see the module docstring for the strategy.

    The grid is a list of bytearrays.  Queue tasks carry everything needed
    to finish a whole line: ("row", i, a) writes row i as zeros / a run of
    R[i] ones starting at column a / zeros; ("col", j, c) writes the run of
    S[j] ones of column j starting at row c (its zeros are left to the
    margin rule); ("zcol", j) zero-pads a column that met its sum;
    ("mrow", i) completes a row that met its sum.  All indices 0-based.
    """

    def __init__(self, pair: MarginPair, res: RankedEssentialSet):
        self.m, self.n = pair.shape
        self.R = list(pair.R)
        self.S = list(pair.S)
        self.grid = [bytearray([UNSET]) * self.n for _ in range(self.m)]
        self.row_ones = [0] * self.m
        self.col_ones = [0] * self.n
        self.row_unset = [self.n] * self.m
        self.row_done = [False] * self.m
        self.col_zdone = [False] * self.n
        # 1-run extents seen so far (sentinels: min > max means none yet).
        self.row_min1 = [self.n] * self.m
        self.row_max1 = [-1] * self.m
        self.col_min1 = [self.m] * self.n
        self.col_max1 = [-1] * self.n
        self.undet = self.m * self.n
        self.writes = 0
        self.first_active_row = 0
        self.row_ptr = [0] * self.m
        # Per-row prefix length already forced to zero by retired entries;
        # overlapping ideals then never rescan a cell.
        self.zfront = [0] * self.m
        self.queue: deque[tuple] = deque()
        # Active entries are [row, col, residual] with 0-based positions.
        self.entries: list[list[int]] = []
        self.zero_pending: list[tuple[int, int]] = []
        for i, j, rank in sorted(res.entries):
            if rank == 0:
                self.zero_pending.append((i - 1, j - 1))
            else:
                self.entries.append([i - 1, j - 1, rank])

    # -- per-cell writes ---------------------------------------------------------

    def _write_one(self, i: int, j: int) -> None:
        grid = self.grid
        row = grid[i]
        cur = row[j]
        if cur != UNSET:
            if cur != 1:
                raise Inconsistent(f"cell {(i + 1, j + 1)} forced to both 0 and 1")
            return
        row[j] = 1
        self.writes += 1
        self.undet -= 1
        self.row_unset[i] -= 1
        if self.entries:
            self._drop_rank_cell(i, j)
        ones = self.row_ones[i] + 1
        self.row_ones[i] = ones
        if ones > self.R[i]:
            raise Inconsistent(f"row {i + 1} exceeds its sum")
        if j < self.row_min1[i]:
            self.row_min1[i] = j
        if j > self.row_max1[i]:
            self.row_max1[i] = j
        cones = self.col_ones[j] + 1
        self.col_ones[j] = cones
        if cones > self.S[j]:
            raise Inconsistent(f"column {j + 1} exceeds its sum")
        if i < self.col_min1[j]:
            self.col_min1[j] = i
        if i > self.col_max1[j]:
            self.col_max1[j] = i
        if cones == self.S[j]:
            self.queue.append(("zcol", j))
        queue = self.queue
        if not self.row_done[i]:
            if ones == self.R[i]:
                queue.append(("mrow", i))
            if j == 0 or row[j - 1] == 0:
                queue.append(("row", i, j))
            elif j == self.n - 1 or row[j + 1] == 0:
                queue.append(("row", i, j - self.R[i] + 1))
        if i == 0 or grid[i - 1][j] == 0:
            queue.append(("col", j, i))
        elif i == self.m - 1 or grid[i + 1][j] == 0:
            queue.append(("col", j, i - self.S[j] + 1))
        if self.row_unset[i] == 0:
            self._row_closed(i)

    def _write_zero(self, i: int, j: int) -> None:
        grid = self.grid
        row = grid[i]
        cur = row[j]
        if cur != UNSET:
            if cur != 0:
                raise Inconsistent(f"cell {(i + 1, j + 1)} forced to both 0 and 1")
            return
        row[j] = 0
        self.writes += 1
        self.undet -= 1
        self.row_unset[i] -= 1
        queue = self.queue
        if not self.row_done[i]:
            if j + 1 < self.n and row[j + 1] == 1:
                queue.append(("row", i, j + 1))
            elif j > 0 and row[j - 1] == 1:
                queue.append(("row", i, j - self.R[i]))
        if i + 1 < self.m and grid[i + 1][j] == 1:
            queue.append(("col", j, i + 1))
        elif i > 0 and grid[i - 1][j] == 1:
            queue.append(("col", j, i - self.S[j]))
        if self.row_unset[i] == 0:
            self._row_closed(i)

    def _row_closed(self, i: int) -> None:
        """A row just became fully determined through per-cell writes."""
        if self.row_done[i]:
            return
        self.row_done[i] = True
        if (
            self.row_ones[i] != self.R[i]
            or self.row_max1[i] - self.row_min1[i] + 1 != self.R[i]
        ):
            raise Inconsistent(f"row {i + 1} closed without a valid run")

    def _drop_rank_cell(self, i: int, j: int) -> None:
        died = False
        for entry in self.entries:
            if i <= entry[0] and j <= entry[1]:
                entry[2] -= 1
                if entry[2] == 0:
                    self.zero_pending.append((entry[0], entry[1]))
                    died = True
        if died:
            self.entries = [e for e in self.entries if e[2] > 0]

    # -- whole-line fills ----------------------------------------------------------

    def _complete_row(self, i: int, a: int) -> None:
        """Write row i as zeros, a run of R[i] ones from column a, zeros."""
        if self.row_done[i]:
            return
        width = self.R[i]
        b = a + width - 1
        n = self.n
        if a < 0 or b >= n:
            raise Inconsistent(f"row {i + 1} interval falls off the grid")
        row = self.grid[i]
        seg = row[a : b + 1]
        if 0 in seg:
            raise Inconsistent(f"row {i + 1} has a 0 inside its run")
        left = row[:a]
        right = row[b + 1 :]
        if 1 in left or 1 in right:
            raise Inconsistent(f"row {i + 1} has a 1 outside its run")
        new_ones = [a + k for k, v in enumerate(seg) if v == UNSET]
        freshly = len(new_ones) + left.count(UNSET) + right.count(UNSET)
        row[:a] = bytes(a)
        row[a : b + 1] = b"\x01" * width
        row[b + 1 :] = bytes(n - 1 - b)
        self.writes += freshly
        self.undet -= freshly
        self.row_unset[i] = 0
        self.row_done[i] = True
        self.row_ones[i] = width
        self.row_min1[i] = a
        self.row_max1[i] = b
        if self.entries and new_ones:
            self._drop_rank_row(i, new_ones)
        col_ones = self.col_ones
        col_min1, col_max1 = self.col_min1, self.col_max1
        queue = self.queue
        s_vec = self.S
        for j in new_ones:
            cones = col_ones[j] + 1
            col_ones[j] = cones
            if cones > s_vec[j]:
                raise Inconsistent(f"column {j + 1} exceeds its sum")
            if i < col_min1[j]:
                col_min1[j] = i
            if i > col_max1[j]:
                col_max1[j] = i
            if cones == s_vec[j]:
                queue.append(("zcol", j))
        self._vertical_anchors(i, a, b)

    def _drop_rank_row(self, i: int, new_ones: list[int]) -> None:
        died = False
        for entry in self.entries:
            if i <= entry[0]:
                hit = bisect_right(new_ones, entry[1])
                if hit:
                    entry[2] -= hit
                    if entry[2] < 0:
                        raise NegativeRank(
                            f"rank at {(entry[0] + 1, entry[1] + 1)} went negative"
                        )
                    if entry[2] == 0:
                        self.zero_pending.append((entry[0], entry[1]))
                        died = True
        if died:
            self.entries = [e for e in self.entries if e[2] > 0]

    def _vertical_anchors(self, i: int, a: int, b: int) -> None:
        """Column anchors implied by a freshly completed row i with run
        [a, b]: a 1 over a boundary or a 0 starts or ends a column run, and
        a 0 next to a neighbouring 1 pins that column's run too."""
        queue = self.queue
        grid = self.grid
        n = self.n
        for r, here_starts in ((i - 1, True), (i + 1, False)):
            if not 0 <= r < self.m:
                # Against the matrix edge every run cell anchors its column.
                for j in range(a, b + 1):
                    queue.append(
                        ("col", j, i) if here_starts else ("col", j, i - self.S[j] + 1)
                    )
                continue
            if self.row_done[r]:
                ra, rb = self.row_min1[r], self.row_max1[r]
                for j in _range_diff(a, b, ra, rb):
                    # 1 here, 0 in the neighbour row.
                    queue.append(
                        ("col", j, i) if here_starts else ("col", j, i - self.S[j] + 1)
                    )
                for j in _range_diff(ra, rb, a, b):
                    # 0 here under/over the neighbour's 1.
                    queue.append(
                        ("col", j, r - self.S[j] + 1) if here_starts else ("col", j, r)
                    )
            else:
                other = grid[r]
                for j in range(a, b + 1):
                    if other[j] == 0:
                        queue.append(
                            ("col", j, i)
                            if here_starts
                            else ("col", j, i - self.S[j] + 1)
                        )
                for j in range(a):
                    if other[j] == 1:
                        queue.append(
                            ("col", j, r - self.S[j] + 1) if here_starts else ("col", j, r)
                        )
                for j in range(b + 1, n):
                    if other[j] == 1:
                        queue.append(
                            ("col", j, r - self.S[j] + 1) if here_starts else ("col", j, r)
                        )

    def _complete_col_run(self, j: int, c: int) -> None:
        """Write the S[j] ones of column j starting at row c; the zeros are
        finished by the margin rule once the run is in place."""
        height = self.S[j]
        if self.col_ones[j] == height:
            return
        d = c + height - 1
        if c < 0 or d >= self.m:
            raise Inconsistent(f"column {j + 1} interval falls off the grid")
        for i in range(c, d + 1):
            self._write_one(i, j)

    def _zero_col(self, j: int) -> None:
        if self.col_zdone[j]:
            return
        if self.col_max1[j] - self.col_min1[j] + 1 != self.S[j]:
            raise Inconsistent(f"column {j + 1} met its sum with a split run")
        self.col_zdone[j] = True
        for i in range(self.col_min1[j]):
            self._write_zero(i, j)
        for i in range(self.col_max1[j] + 1, self.m):
            self._write_zero(i, j)

    # -- propagation -----------------------------------------------------------

    def _drain(self) -> None:
        queue = self.queue
        while queue:
            task = queue.popleft()
            kind = task[0]
            if kind == "row":
                self._complete_row(task[1], task[2])
            elif kind == "col":
                self._complete_col_run(task[1], task[2])
            elif kind == "zcol":
                self._zero_col(task[1])
            else:  # mrow: row met its sum; its run extent fixes the interval
                i = task[1]
                if not self.row_done[i]:
                    if self.row_max1[i] - self.row_min1[i] + 1 != self.R[i]:
                        raise Inconsistent(f"row {i + 1} met its sum with a split run")
                    self._complete_row(i, self.row_min1[i])

    def _settle(self) -> None:
        """Drain propagation and retire every zero-rank entry."""
        while True:
            self._drain()
            if not self.zero_pending:
                return
            u, v = self.zero_pending.pop()
            for i in range(u + 1):
                start = self.zfront[i]
                if start > v:
                    continue
                self.zfront[i] = v + 1
                if self.row_unset[i] == 0:
                    continue
                row = self.grid[i]
                for j in range(start, v + 1):
                    if row[j] == UNSET:
                        self._write_zero(i, j)

    # -- main loop ---------------------------------------------------------------

    def _next_minimal(self) -> tuple[int, int]:
        i = self.first_active_row
        while self.row_unset[i] == 0:
            i += 1
        self.first_active_row = i
        row = self.grid[i]
        j = self.row_ptr[i]
        while row[j] != UNSET:
            j += 1
        self.row_ptr[i] = j
        return i, j

    def run(self) -> BinaryMatrix:
        self._settle()
        while self.undet:
            i, j = self._next_minimal()
            self._write_one(i, j)
            self._settle()
        return BinaryMatrix(tuple(tuple(row) for row in self.grid))


# -- directed reconstruction -----------------------------------------------------


def reconstruct_directed(pair: MarginPair, corner: Direction) -> BinaryMatrix:
    """The unique convex matrix in the class with a source of the given
    type, when it exists.

    The SE case is a leftmost-feasible greedy: row 1 starts in column 1 and
    each later row starts at the first column whose sum is not yet met.
    Other corners rotate the margins onto the SE case and rotate back.
    """
    _check_margins(pair)
    turns = TURNS_TO_SE[corner]
    r_vec, s_vec = pair.R, pair.S
    for _ in range(turns):
        r_vec, s_vec = tuple(reversed(s_vec)), r_vec
    built = _greedy_se(r_vec, s_vec)
    result = rotate(built, (4 - turns) % 4)
    if margins(result) != pair:
        raise Inconsistent("greedy construction missed the margins")
    if not convexity_check(result):
        raise Inconsistent("greedy construction is not convex")
    if find_sources(result)[corner] is None:
        raise Inconsistent(f"no convex matrix in the class has a {corner.value}-source")
    return result


def _greedy_se(r_vec: tuple[int, ...], s_vec: tuple[int, ...]) -> BinaryMatrix:
    m, n = len(r_vec), len(s_vec)
    residual = list(s_vec)
    rows = []
    left = 0
    for r in r_vec:
        while left < n and residual[left] == 0:
            left += 1
        if left + r > n:
            raise Inconsistent("row interval falls off the grid")
        for j in range(left, left + r):
            residual[j] -= 1
            if residual[j] < 0:
                raise Inconsistent(f"column {j + 1} oversubscribed")
        rows.append(tuple(1 if left <= j < left + r else 0 for j in range(n)))
    if any(residual):
        raise Inconsistent("column sums not exhausted")
    return BinaryMatrix(tuple(rows))
