"""Exhaustive generation and theorem-verification sweeps.

The sweeps re-derive every claimed property by brute force at desk scale
and report counterexamples.  They are deliberately dumb on the oracle side:
where the library computes something cleverly, the sweep recomputes it by
enumeration or by flip-and-recheck, and the two answers must agree.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import binmat, classes, interchange, lattice
from .binmat import BinaryMatrix, Direction, MarginPair
from .diagram import (
    diagram as matrix_diagram,
    essential_set,
    full_essential_set,
    is_ferrers_diagram,
    ranked_essential_set,
)
from .errors import Infeasible, SizeExceeded, UnknownProperty
from .reconstruct import reconstruct, reconstruct_directed

FULL_SWEEP_CAP = 20  # hard default for 2**(mn) scans

Shape = tuple[int, int]


def enumerate_all(
    m: int,
    n: int,
    predicate: Callable[[BinaryMatrix], bool] | None = None,
    cap: int = FULL_SWEEP_CAP,
) -> Iterator[BinaryMatrix]:
    """All m-by-n (0,1)-matrices passing ``predicate``, lexicographically.

    The order is by row-major bit string, all-zeros first.  Restartable:
    two fresh iterators yield identical sequences.
    """
    if m * n > cap:
        raise SizeExceeded(f"{m}x{n} has {m * n} cells, cap is {cap}")
    for bits in itertools.product((0, 1), repeat=m * n):
        a = BinaryMatrix(tuple(bits[r * n : (r + 1) * n] for r in range(m)))
        if predicate is None or predicate(a):
            yield a


def iter_convex(m: int, n: int) -> Iterator[BinaryMatrix]:
    """All convex m-by-n matrices, in row-major bit-string order.

    Rows are intervals or empty, and a backtracking scan keeps columns
    convex, so this is far cheaper than filtering ``enumerate_all``.
    """
    row_options = sorted(_interval_rows(n))
    partial: list[tuple[int, ...]] = []

    def walk(i: int, open_cols: int, closed_cols: int) -> Iterator[BinaryMatrix]:
        if i == m:
            yield BinaryMatrix(tuple(partial))
            return
        for row, mask in row_options:
            if mask & closed_cols:
                continue
            partial.append(row)
            yield from walk(i + 1, mask, closed_cols | (open_cols & ~mask))
            partial.pop()

    yield from walk(0, 0, 0)


def _interval_rows(n: int) -> list[tuple[tuple[int, ...], int]]:
    """All convex row patterns with their bitmasks (bit j = column j+1)."""
    out = [(tuple([0] * n), 0)]
    for width in range(1, n + 1):
        for start in range(n - width + 1):
            row = tuple(1 if start <= j < start + width else 0 for j in range(n))
            mask = sum(1 << j for j in range(start, start + width))
            out.append((row, mask))
    return out


def shapes_up_to(max_cells: int) -> list[Shape]:
    return [
        (m, n)
        for m in range(1, max_cells + 1)
        for n in range(1, max_cells // m + 1)
    ]


# -- sweep machinery ------------------------------------------------------------


@dataclass
class SweepReport:
    """Outcome of one exhaustive property check."""

    property_id: str
    params: dict
    instances: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def record(self, ok: bool, describe: Callable[[], str]) -> None:
        self.instances += 1
        if not ok:
            self.counterexamples.append(describe())

    def finish(self) -> "SweepReport":
        self.counterexamples.sort()
        return self

    def merge(self, other: "SweepReport") -> None:
        self.instances += other.instances
        self.counterexamples.extend(other.counterexamples)

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.property_id} instances={self.instances} "
            f"counterexamples={len(self.counterexamples)}"
        )


def _flat(a: BinaryMatrix) -> str:
    return "/".join("".join(str(v) for v in row) for row in a.cells)


def _margin_key(a: BinaryMatrix) -> tuple:
    mp = binmat.margins(a)
    return (a.shape, mp.R, mp.S)


def _classes_by_margins(m: int, n: int) -> dict[tuple, list[BinaryMatrix]]:
    groups: dict[tuple, list[BinaryMatrix]] = {}
    for a in enumerate_all(m, n):
        groups.setdefault(_margin_key(a), []).append(a)
    return groups


def _generalized_polyominoes(m: int, n: int) -> Iterator[BinaryMatrix]:
    for a in iter_convex(m, n):
        if binmat.margins(a).is_positive():
            yield a


def _polyominoes(m: int, n: int) -> Iterator[BinaryMatrix]:
    for a in _generalized_polyominoes(m, n):
        if binmat.connectivity_check(a):
            yield a


# -- individual sweeps ----------------------------------------------------------
#
# Sweeps parameterised by max_cells take an optional explicit shape list so
# that run_sweep can shard them across processes.


def sweep_directed_reconstruction(report, max_cells: int, shapes=None) -> None:
    """Per positive-margin class: each source type is held by at most one
    member, and directed reconstruction returns exactly that member."""
    for m, n in shapes or shapes_up_to(max_cells):
        by_class: dict[tuple, dict[Direction, list[BinaryMatrix]]] = {}
        for a in _generalized_polyominoes(m, n):
            holders = by_class.setdefault(_margin_key(a), {d: [] for d in Direction})
            for d, pos in binmat.find_sources(a).items():
                if pos is not None:
                    holders[d].append(a)
        for key, holders in by_class.items():
            _, r_vec, s_vec = key
            mp = MarginPair(r_vec, s_vec)
            for d, members in holders.items():
                ok = len(members) <= 1
                if ok:
                    try:
                        built = reconstruct_directed(mp, d)
                    except Infeasible:
                        built = None
                    expect = members[0] if members else None
                    ok = built == expect
                report.record(
                    ok, lambda mp=mp, d=d: f"margins {mp.R}/{mp.S} source {d.value}"
                )


def sweep_polyomino_ferrers(report, max_cells: int, shapes=None) -> None:
    """Polyomino diagrams are Ferrers arrays and their ranks are all 0."""
    for m, n in shapes or shapes_up_to(max_cells):
        for a in _polyominoes(m, n):
            shape_ok = is_ferrers_diagram(matrix_diagram(a)) is not None
            ranks_ok = all(r == 0 for _, _, r in ranked_essential_set(a).entries)
            report.record(shape_ok and ranks_ok, lambda a=a: _flat(a))


def sweep_source_vs_essential(report, max_cells: int, shapes=None) -> None:
    """For polyominoes: empty SE-essential set iff an SE-source exists."""
    for m, n in shapes or shapes_up_to(max_cells):
        for a in _polyominoes(m, n):
            empty = not essential_set(a, Direction.SE)
            has_source = binmat.find_sources(a)[Direction.SE] is not None
            report.record(empty == has_source, lambda a=a: _flat(a))


def sweep_roundtrip(report, max_cells: int, shapes=None) -> None:
    """Reconstruction inverts the ranked essential set on every
    positive-margin convex matrix (hence the map is injective)."""
    for m, n in shapes or shapes_up_to(max_cells):
        for a in _generalized_polyominoes(m, n):
            mp = binmat.margins(a)
            res = ranked_essential_set(a)
            try:
                back = reconstruct(mp, res)
            except Infeasible:
                back = None
            report.record(back == a, lambda a=a: _flat(a))


def sweep_two_regular(report, n_max: int, s_max: int) -> None:
    """Alternating-sum profile presence matches brute-force nonemptiness of
    the two-per-row classes."""
    for n in range(1, n_max + 1):
        for s_vec in itertools.product(range(s_max + 1), repeat=n):
            profile = classes.two_regular_profile(s_vec)
            total = sum(s_vec)
            nonempty = False
            if total % 2 == 0 and total >= 2:
                m = total // 2
                mp = MarginPair((2,) * m, s_vec)
                if mp.is_consistent():
                    nonempty = bool(
                        classes.enumerate_class(mp, convex_only=True, cap=100)
                    )
            report.record(
                (profile is not None) == nonempty, lambda s_vec=s_vec: f"S={s_vec}"
            )


def sweep_row_sort(report, max_cells: int, shapes=None) -> None:
    """Sorting a row-convex constant-row-sum matrix by leftmost 1 yields a
    convex matrix with the same margins."""
    for m, n in shapes or shapes_up_to(max_cells):
        for k in range(1, n + 1):
            for a in enumerate_all(
                m,
                n,
                lambda x, k=k: all(sum(r) == k for r in x.cells)
                and binmat.convexity_check(x, "row"),
            ):
                b = classes.sort_rows_to_convex(a)
                ok = (
                    binmat.convexity_check(b, "both")
                    and binmat.margins(b) == binmat.margins(a)
                )
                report.record(ok, lambda a=a: _flat(a))


def sweep_block_regular(report, p_max: int, k_max: int, l_max: int) -> None:
    """Block-tiled constant-margin classes: the constructed family matches
    the enumerated class and has exactly p! members; absent block grids are
    genuinely empty classes."""
    for p in range(1, p_max + 1):
        for k in range(1, k_max + 1):
            for l in range(1, l_max + 1):
                m, n = p * k, p * l
                found = classes.block_regular_class(m, n, k, l)
                ok = found is not None
                if ok:
                    count, members_iter = found
                    members = list(members_iter)
                    mp = binmat.margins(members[0])
                    listed = classes.enumerate_class(mp, convex_only=True, cap=64)
                    ok = (
                        count == math.factorial(p)
                        and len(members) == count
                        and sorted(x.cells for x in members)
                        == sorted(x.cells for x in listed)
                        and all(binmat.convexity_check(x) for x in members)
                    )
                report.record(ok, lambda p=p, k=k, l=l: f"p={p} k={k} l={l}")
    for m, n, k, l in itertools.product(
        range(1, 7), range(1, 7), range(1, 3), range(1, 3)
    ):
        if m * n > 24 or k > m or l > n:
            continue
        present = classes.block_regular_class(m, n, k, l) is not None
        mp = MarginPair((l,) * m, (k,) * n)
        nonempty = mp.is_consistent() and bool(
            classes.enumerate_class(mp, convex_only=True, cap=36)
        )
        report.record(
            present == nonempty, lambda m=m, n=n, k=k, l=l: f"m={m} n={n} k={k} l={l}"
        )


def sweep_interchange_structure(report, max_cells: int, shapes=None) -> None:
    """On convex matrices with every line sum >= 2, a switch keeps convexity
    iff the block-structure validation accepts it."""
    for m, n in shapes or shapes_up_to(max_cells):
        for a in iter_convex(m, n):
            mp = binmat.margins(a)
            if any(r < 2 for r in mp.R) or any(s < 2 for s in mp.S):
                continue
            for mv in interchange.enumerate_interchanges(a):
                stays_convex = binmat.convexity_check(
                    interchange.apply_interchange(a, mv)
                )
                structural = interchange.structural_move_check(a, mv)
                report.record(
                    stays_convex == structural, lambda a=a, mv=mv: f"{_flat(a)} {mv}"
                )


def sweep_trichotomy(report, max_cells: int, shapes=None) -> None:
    """Members of positive-margin convex-classes: every pair of parallel
    intervals is singleton/nested/one-shift, and every switch acts on two
    singleton lines or a 1-shift pair."""
    allowed = (
        interchange.IntervalRelation.SINGLETONS,
        interchange.IntervalRelation.ONE_SHIFT,
    )
    for m, n in shapes or shapes_up_to(max_cells):
        for key, members in _classes_by_margins(m, n).items():
            _, r_vec, s_vec = key
            if not MarginPair(r_vec, s_vec).is_positive():
                continue
            if not all(binmat.convexity_check(x) for x in members):
                continue
            for a in members:
                rows = [a.row_interval(i) for i in range(1, m + 1)]
                cols = [a.col_interval(j) for j in range(1, n + 1)]
                ok = True
                for seq in (rows, cols):
                    for x, y in itertools.combinations(seq, 2):
                        if (
                            interchange.interval_relation(x, y)
                            is interchange.IntervalRelation.VIOLATION
                        ):
                            ok = False
                for mv in interchange.enumerate_interchanges(a):
                    row_rel = interchange.interval_relation(
                        rows[mv.row_a - 1], rows[mv.row_b - 1]
                    )
                    col_rel = interchange.interval_relation(
                        cols[mv.col_a - 1], cols[mv.col_b - 1]
                    )
                    if row_rel not in allowed or col_rel not in allowed:
                        ok = False
                report.record(ok, lambda a=a: _flat(a))


def sweep_built_classes(report, k_max: int) -> None:
    """Constructed 1-shift classes have 2**k convex members and coincide
    with the enumerated class of their margins."""
    for spec in _sample_class_specs(k_max):
        mp, members = interchange.build_convex_class(spec)
        listed = classes.enumerate_class(mp, convex_only=False, cap=64)
        ok = (
            len(members) == 2 ** len(spec.pairs)
            and len({x.cells for x in members}) == len(members)
            and all(binmat.convexity_check(x) for x in members)
            and sorted(x.cells for x in members) == sorted(x.cells for x in listed)
        )
        report.record(ok, lambda spec=spec: str(spec))


def _sample_class_specs(k_max: int):
    from .binmat import Interval
    from .interchange import ConvexClassSpec, OneShiftPair

    specs = [
        ConvexClassSpec((OneShiftPair(Interval(1, 2), Interval(2, 3)),)),
        ConvexClassSpec((OneShiftPair(Interval(1, 3), Interval(2, 4)),)),
        ConvexClassSpec(
            (
                OneShiftPair(Interval(2, 3), Interval(3, 4)),
                OneShiftPair(Interval(1, 4), Interval(2, 5)),
            )
        ),
        ConvexClassSpec(
            (
                OneShiftPair(Interval(3, 4), Interval(4, 5)),
                OneShiftPair(Interval(2, 5), Interval(3, 6)),
                OneShiftPair(Interval(1, 6), Interval(2, 7)),
            )
        ),
    ]
    return [s for s in specs if len(s.pairs) <= k_max]


def _bits_of(a: BinaryMatrix) -> int:
    bits = 0
    idx = 0
    for row in a.cells:
        for v in row:
            bits |= v << idx
            idx += 1
    return bits


def _matrix_of(bits: int, m: int, n: int) -> BinaryMatrix:
    return BinaryMatrix(
        tuple(tuple(bits >> (i * n + j) & 1 for j in range(n)) for i in range(m))
    )


def _hull_bits(m: int, n: int) -> dict[int, int]:
    """Bitmask -> bitmask table of the convex hull over a full shape."""
    return {
        _bits_of(a): _bits_of(lattice.convex_hull(a)) for a in enumerate_all(m, n)
    }


def sweep_meet(report, max_cells: int, shapes=None) -> None:
    """The entrywise AND of two convex matrices is again convex.

    The convex pool is enumerated independently of the convexity checker,
    so membership of the AND in the pool is a second route to the claim.
    """
    for m, n in shapes or shapes_up_to(max_cells):
        pool = [_bits_of(a) for a in iter_convex(m, n)]
        convex_set = set(pool)
        report.instances += len(pool) * len(pool)
        for a in pool:
            for b in pool:
                if a & b not in convex_set:
                    report.counterexamples.append(
                        f"{_flat(_matrix_of(a, m, n))} {_flat(_matrix_of(b, m, n))}"
                    )


def sweep_hull_minimality(report, max_cells: int, shapes=None) -> None:
    """hull(A) is convex, dominates A, and sits below every convex X >= A."""
    for m, n in shapes or shapes_up_to(max_cells):
        pool = [_bits_of(a) for a in iter_convex(m, n)]
        convex_set = set(pool)
        hulls = _hull_bits(m, n)
        for a, h in hulls.items():
            ok = h in convex_set and a & ~h == 0
            if ok:
                for x in pool:
                    if a & ~x == 0 and h & ~x != 0:
                        ok = False
                        break
            report.record(ok, lambda a=a: _flat(_matrix_of(a, m, n)))


def sweep_join_lub(report, max_cells: int, shapes=None) -> None:
    """join is a convex common upper bound below every convex common upper
    bound, commutative and idempotent.  Upper-bound minimality only depends
    on the union, so distinct unions are scanned once."""
    for m, n in shapes or shapes_up_to(max_cells):
        pool = [_bits_of(a) for a in iter_convex(m, n)]
        convex_set = set(pool)
        hulls = _hull_bits(m, n)
        unions: set[int] = set()
        report.instances += len(pool) * len(pool)
        for a in pool:
            if hulls[a] != a:  # join(a, a) == a
                report.counterexamples.append(_flat(_matrix_of(a, m, n)))
            for b in pool:
                u = a | b
                j = hulls[u]
                unions.add(u)
                if j not in convex_set or (a | b) & ~j != 0:
                    report.counterexamples.append(
                        f"{_flat(_matrix_of(a, m, n))} {_flat(_matrix_of(b, m, n))}"
                    )
        for u in unions:
            j = hulls[u]
            for x in pool:
                if u & ~x == 0 and j & ~x != 0:
                    report.counterexamples.append(
                        f"union {_flat(_matrix_of(u, m, n))} bound "
                        f"{_flat(_matrix_of(x, m, n))}"
                    )


def sweep_absorption(report, max_cells: int, shapes=None) -> None:
    """meet(a, join(a, b)) == a and join(a, meet(a, b)) == a."""
    for m, n in shapes or shapes_up_to(max_cells):
        pool = [_bits_of(a) for a in iter_convex(m, n)]
        hulls = _hull_bits(m, n)
        report.instances += len(pool) * len(pool)
        for a in pool:
            for b in pool:
                if a & hulls[a | b] != a or hulls[a | (a & b)] != a:
                    report.counterexamples.append(
                        f"{_flat(_matrix_of(a, m, n))} {_flat(_matrix_of(b, m, n))}"
                    )


def sweep_covers(report, max_cells: int, shapes=None) -> None:
    """covers() agrees with flip-and-recheck, and the cover count equals the
    size of the combined essential set.  The count clause is the claim under
    test; see the covers() docstring for its known failure pattern."""
    for m, n in shapes or shapes_up_to(max_cells):
        for c in iter_convex(m, n):
            flip_set = {
                (i, j)
                for i in range(1, m + 1)
                for j in range(1, n + 1)
                if c.entry(i, j) == 0
                and binmat.convexity_check(c.with_flipped(i, j))
            }
            got = {step.position for step in lattice.covers(c)}
            ess = set(full_essential_set(c))
            ok = got == flip_set and len(got) == len(ess)
            report.record(ok, lambda c=c: _flat(c))


def sweep_chains(report, max_cells: int, shapes=None) -> None:
    """Up- and down-chains step through covers and meet at mn + 1 matrices."""
    for m, n in shapes or shapes_up_to(max_cells):
        for c in iter_convex(m, n):
            up = lattice.maximal_chain(c, "up")
            down = lattice.maximal_chain(c, "down")
            ok = (
                up[0] == c
                and down[0] == c
                and up[-1] == BinaryMatrix.ones(m, n)
                and down[-1] == BinaryMatrix.zeros(m, n)
                and len(up) + len(down) - 1 == m * n + 1
                and all(_is_cover_step(x, y) for x, y in zip(up, up[1:]))
                and all(_is_cover_step(y, x) for x, y in zip(down, down[1:]))
            )
            report.record(ok, lambda c=c: _flat(c))


def _is_cover_step(lower: BinaryMatrix, upper: BinaryMatrix) -> bool:
    return (
        binmat.convexity_check(upper)
        and binmat.convexity_check(lower)
        and binmat.dominates(upper, lower)
        and upper.count_ones() == lower.count_ones() + 1
    )


# -- registry -------------------------------------------------------------------

_SWEEPS: dict[str, tuple[Callable, dict]] = {
    "thm-2.1-directed": (sweep_directed_reconstruction, {"max_cells": 12}),
    "thm-2.2-ferrers": (sweep_polyomino_ferrers, {"max_cells": 16}),
    "cor-2.4-sources": (sweep_source_vs_essential, {"max_cells": 16}),
    "thm-2.6-roundtrip": (sweep_roundtrip, {"max_cells": 16}),
    "thm-3.3-equivalence": (sweep_two_regular, {"n_max": 6, "s_max": 4}),
    "lem-3.2-sort": (sweep_row_sort, {"max_cells": 12}),
    "thm-3.5-blocks": (sweep_block_regular, {"p_max": 3, "k_max": 2, "l_max": 2}),
    "prop-4.1-moves": (sweep_interchange_structure, {"max_cells": 16}),
    "thm-4.2-trichotomy": (sweep_trichotomy, {"max_cells": 16}),
    "cor-4.3-classes": (sweep_built_classes, {"k_max": 3}),
    "lem-5.1-meet": (sweep_meet, {"max_cells": 12}),
    "hull-minimality": (sweep_hull_minimality, {"max_cells": 12}),
    "join-lub": (sweep_join_lub, {"max_cells": 12}),
    "lattice-absorption": (sweep_absorption, {"max_cells": 12}),
    "thm-5.3-covers": (sweep_covers, {"max_cells": 16}),
    "chains": (sweep_chains, {"max_cells": 9}),
}


def property_ids() -> list[str]:
    return sorted(_SWEEPS)


def run_sweep(property_id: str, params: dict | None = None, jobs: int = 1) -> SweepReport:
    """Run one registered sweep and return its report.

    ``params`` overrides the sweep's default parameters (for example
    ``{"max_cells": 9}``).  With ``jobs > 1``, sweeps that scan shapes are
    sharded over a process pool; the merged report matches a sequential run.
    """
    if property_id not in _SWEEPS:
        raise UnknownProperty(
            f"unknown property {property_id!r}; known: {', '.join(property_ids())}"
        )
    func, defaults = _SWEEPS[property_id]
    merged = dict(defaults)
    if params:
        unknown = set(params) - set(defaults)
        if unknown:
            raise UnknownProperty(
                f"property {property_id!r} does not take {sorted(unknown)}"
            )
        merged.update(params)
    if jobs > 1 and "max_cells" in merged:
        return _run_sharded(property_id, merged, jobs)
    report = SweepReport(property_id, merged)
    func(report, **merged)
    return report.finish()


def _shard_worker(args: tuple) -> SweepReport:
    property_id, params, shard = args
    func, _ = _SWEEPS[property_id]
    report = SweepReport(property_id, params)
    func(report, shapes=shard, **params)
    return report


def _run_sharded(property_id: str, params: dict, jobs: int) -> SweepReport:
    all_shapes = shapes_up_to(params["max_cells"])
    shards = [shard for shard in (all_shapes[i::jobs] for i in range(jobs)) if shard]
    merged = SweepReport(property_id, params)
    with ProcessPoolExecutor(max_workers=len(shards)) as pool:
        for report in pool.map(
            _shard_worker, [(property_id, params, shard) for shard in shards]
        ):
            merged.merge(report)
    return merged.finish()
