"""Command line front end: file parsing, subcommands, and ASCII rendering.

All subcommands are deterministic; matrices come from a positional file
argument or standard input.  Exit status 0 means success or feasible, 1
means infeasible or a failed verification property, 2 means a usage or
parse error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import classes, interchange, lattice, oracle
from .binmat import (
    BinaryMatrix,
    Direction,
    MarginPair,
    connectivity_check,
    convexity_check,
    find_sources,
    margins,
)
from .diagram import (
    RankedEssentialSet,
    diagram as compute_diagram,
    essential_set,
    full_essential_set,
    ranked_essential_set,
)
from .errors import ConvmatError, Infeasible, ParseError
from .reconstruct import reconstruct as rebuild_matrix, reconstruct_directed

#: Letters used for directional essential positions in rendered grids.
DIRECTION_GLYPHS = (
    (Direction.SE, "a"),
    (Direction.NE, "b"),
    (Direction.NW, "c"),
    (Direction.SW, "d"),
)


# -- parsing -------------------------------------------------------------------


def parse_matrix(text: str) -> BinaryMatrix:
    return BinaryMatrix.from_text(text)


def parse_margins(text: str) -> MarginPair:
    return MarginPair.from_text(text)


def parse_res(text: str, shape: tuple[int, int]) -> RankedEssentialSet:
    return RankedEssentialSet.from_text(text, shape)


# -- rendering -----------------------------------------------------------------


@dataclass(frozen=True)
class RenderedGrid:
    lines: tuple[str, ...]
    legend: tuple[str, ...]

    def __str__(self) -> str:
        return "\n".join(self.lines)


def render(a: BinaryMatrix, overlay: str | None = None) -> RenderedGrid:
    """Text grid for ``a`` with an optional overlay.

    ``diagram`` marks shaded cells ``#`` and leaves the unshaded diagram as
    ``.``; ``essential`` stars the SE-essential positions; ``essential-all``
    letters the four directional essential sets.
    """
    base = [[str(v) for v in row] for row in a.cells]
    legend: tuple[str, ...] = ("1/0 matrix entries",)
    if overlay is None:
        pass
    elif overlay == "diagram":
        d = compute_diagram(a)
        base = [
            ["." if (i + 1, j + 1) in d.unshaded else "#" for j in range(a.n)]
            for i in range(a.m)
        ]
        legend = ("# shaded cell", ". unshaded cell (the diagram)")
    elif overlay == "essential":
        for i, j in essential_set(a, Direction.SE):
            base[i - 1][j - 1] = "*"
        legend = ("1/0 matrix entries", "* SE-essential position")
    elif overlay == "essential-all":
        tagged = full_essential_set(a)
        for (i, j), dirs in tagged.items():
            for direction, glyph in DIRECTION_GLYPHS:
                if direction in dirs:
                    base[i - 1][j - 1] = glyph
                    break
        legend = ("1/0 matrix entries",) + tuple(
            f"{glyph} {direction.value}-essential position"
            for direction, glyph in DIRECTION_GLYPHS
        )
    else:
        raise ValueError(f"unknown overlay {overlay!r}")
    return RenderedGrid(tuple("".join(row) for row in base), legend)


# -- input helpers ---------------------------------------------------------------


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _read_matrix(path: str | None) -> BinaryMatrix:
    return parse_matrix(_read_text(path))


# -- subcommand bodies -----------------------------------------------------------


def _cmd_check(args) -> int:
    a = _read_matrix(args.matrix)
    print(f"shape: {a.m}x{a.n}")
    mp = margins(a)
    print("R:", " ".join(str(r) for r in mp.R))
    print("S:", " ".join(str(s) for s in mp.S))
    print("row convex:", "yes" if convexity_check(a, "row") else "no")
    print("column convex:", "yes" if convexity_check(a, "column") else "no")
    print("convex:", "yes" if convexity_check(a) else "no")
    print("connected:", "yes" if connectivity_check(a) else "no")
    sources = find_sources(a)
    for direction in (Direction.SE, Direction.NE, Direction.NW, Direction.SW):
        pos = sources[direction]
        where = f"({pos[0]},{pos[1]})" if pos else "none"
        print(f"source {direction.value}: {where}")
    return 0


def _cmd_diagram(args) -> int:
    grid = render(_read_matrix(args.matrix), "diagram")
    for line in grid.lines:
        print(line)
    for note in grid.legend:
        print("legend:", note)
    return 0


def _cmd_essential(args) -> int:
    a = _read_matrix(args.matrix)
    if args.render:
        overlay = "essential-all" if args.dir == "all" else "essential"
        grid = render(a, overlay)
        for line in grid.lines:
            print(line)
        for note in grid.legend:
            print("legend:", note)
        return 0
    if args.ranked:
        sys.stdout.write(ranked_essential_set(a).to_text())
        return 0
    if args.dir == "all":
        tagged = full_essential_set(a)
        for (i, j) in sorted(tagged):
            dirs = ",".join(
                d.value for d, _ in DIRECTION_GLYPHS if d in tagged[(i, j)]
            )
            print(i, j, dirs)
        return 0
    for (i, j) in sorted(essential_set(a, Direction(args.dir))):
        print(i, j)
    return 0


def _cmd_reconstruct(args) -> int:
    pair = parse_margins(_read_text(args.margins))
    res = parse_res(_read_text(args.res), pair.shape)
    sys.stdout.write(rebuild_matrix(pair, res).to_text())
    return 0


def _cmd_reconstruct_directed(args) -> int:
    pair = parse_margins(_read_text(args.margins))
    built = reconstruct_directed(pair, Direction(args.corner))
    sys.stdout.write(built.to_text())
    return 0


def _cmd_enumerate(args) -> int:
    pair = parse_margins(_read_text(args.margins))
    found = classes.enumerate_class(pair, convex_only=args.convex_only, cap=args.cap)
    print(f"count: {len(found)}")
    if not args.count_only:
        for a in found:
            print()
            sys.stdout.write(a.to_text())
    return 0


def _cmd_class_info(args) -> int:
    pair = parse_margins(_read_text(args.margins))
    m, n = pair.shape
    print(f"shape: {m}x{n}")
    print("R:", " ".join(str(r) for r in pair.R))
    print("S:", " ".join(str(s) for s in pair.S))
    print("consistent:", "yes" if pair.is_consistent() else "no")
    if not pair.is_consistent():
        return 0
    if all(r == 1 for r in pair.R):
        ok = classes.unit_rows_nonempty(m, pair.S)
        print("one-per-row class:", "nonempty" if ok else "empty")
    if all(r == 2 for r in pair.R):
        profile = classes.two_regular_profile(pair.S)
        if profile is not None and profile.rows == m:
            print("two-per-row class: nonempty, staircase profile", profile.k)
        else:
            print("two-per-row class: empty")
    r_const = pair.R[0] if all(r == pair.R[0] for r in pair.R) else None
    s_const = pair.S[0] if all(s == pair.S[0] for s in pair.S) else None
    if r_const and s_const:
        found = classes.block_regular_class(m, n, s_const, r_const)
        if found is not None:
            print(f"block-tiled class: nonempty, exactly {found[0]} matrices")
        else:
            print("block-tiled class: empty")
    if m * n <= args.cap:
        members = classes.enumerate_class(pair, convex_only=False, cap=args.cap)
        convex = [x for x in members if convexity_check(x)]
        print(f"class size: {len(members)}")
        print(f"convex members: {len(convex)}")
        is_cc = bool(members) and len(convex) == len(members)
        print("convex-class:", "yes" if is_cc else "no")
    else:
        print(f"class size: skipped ({m * n} cells over cap {args.cap})")
    return 0


def _cmd_interchanges(args) -> int:
    a = _read_matrix(args.matrix)
    if args.convex_preserving:
        moves = interchange.convex_preserving_moves(a)
    else:
        moves = interchange.enumerate_interchanges(a)
    for mv in moves:
        print(mv)
    return 0


def _cmd_lattice(args) -> int:
    if args.operation in ("meet", "join"):
        if args.second is None:
            print(f"error: {args.operation} needs two matrix files", file=sys.stderr)
            return 2
        a = _read_matrix(args.first)
        b = _read_matrix(args.second)
        func = lattice.meet if args.operation == "meet" else lattice.join
        sys.stdout.write(func(a, b).to_text())
        return 0
    a = _read_matrix(args.first)
    if args.operation == "hull":
        sys.stdout.write(lattice.convex_hull(a).to_text())
        return 0
    if args.operation == "covers":
        for step in lattice.covers(a):
            dirs = ",".join(
                d.value for d, _ in DIRECTION_GLYPHS if d in step.direction_tags
            )
            print(step.position[0], step.position[1], dirs or "-")
        return 0
    chain = lattice.maximal_chain(a, args.direction)
    print(f"count: {len(chain)}")
    for c in chain:
        print()
        sys.stdout.write(c.to_text())
    return 0


def _cmd_build_class(args) -> int:
    spec = interchange.ConvexClassSpec.from_text(_read_text(args.spec))
    pair, members = interchange.build_convex_class(spec)
    sys.stdout.write(pair.to_text())
    print(f"count: {len(members)}")
    for a in members:
        print()
        sys.stdout.write(a.to_text())
    return 0


def _cmd_verify(args) -> int:
    params = {}
    if args.max_cells is not None:
        params["max_cells"] = args.max_cells
        if args.max_cells > oracle.FULL_SWEEP_CAP:
            print(
                f"warning: cell cap {args.max_cells} is above the default "
                f"{oracle.FULL_SWEEP_CAP}; this may take a very long time",
                file=sys.stderr,
            )
    report = oracle.run_sweep(args.property, params or None, jobs=args.jobs)
    for bad in report.counterexamples[: args.show]:
        print("counterexample:", bad)
    if len(report.counterexamples) > args.show:
        print(f"... and {len(report.counterexamples) - args.show} more")
    print(report.summary_line())
    return 0 if report.passed else 1


# -- argument parsing ------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convmat",
        description="Toolkit for convex (0,1)-matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def matrix_arg(p):
        p.add_argument(
            "matrix",
            nargs="?",
            help="matrix text file (default: standard input)",
        )

    p = sub.add_parser("check", help="convexity / connectivity / sources report")
    matrix_arg(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("diagram", help="render the shading diagram")
    matrix_arg(p)
    p.set_defaults(func=_cmd_diagram)

    p = sub.add_parser("essential", help="essential set positions")
    p.add_argument("--dir", choices=["SE", "SW", "NE", "NW", "all"], default="SE")
    p.add_argument("--ranked", action="store_true", help="emit 'i j r' triples (SE)")
    p.add_argument("--render", action="store_true", help="render as a grid")
    matrix_arg(p)
    p.set_defaults(func=_cmd_essential)

    p = sub.add_parser("reconstruct", help="matrix from margins + ranked set")
    p.add_argument("--margins", required=True)
    p.add_argument("--res", required=True, help="ranked essential set file")
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("reconstruct-directed", help="matrix from margins + source type")
    p.add_argument("--margins", required=True)
    p.add_argument("--corner", required=True, choices=["SE", "SW", "NE", "NW"])
    p.set_defaults(func=_cmd_reconstruct_directed)

    p = sub.add_parser("enumerate", help="list a margin class exhaustively")
    p.add_argument("--margins", required=True)
    p.add_argument("--convex-only", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--cap", type=int, default=classes.DEFAULT_CLASS_CAP)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("class-info", help="structured margin-class report")
    p.add_argument("--margins", required=True)
    p.add_argument("--cap", type=int, default=classes.DEFAULT_CLASS_CAP)
    p.set_defaults(func=_cmd_class_info)

    p = sub.add_parser("interchanges", help="available 2x2 switches")
    p.add_argument("--convex-preserving", action="store_true")
    matrix_arg(p)
    p.set_defaults(func=_cmd_interchanges)

    p = sub.add_parser("lattice", help="meet / join / hull / covers / chain")
    p.add_argument("operation", choices=["meet", "join", "hull", "covers", "chain"])
    p.add_argument("first", help="matrix file")
    p.add_argument("second", nargs="?", help="second matrix file (meet/join)")
    p.add_argument("--direction", choices=["up", "down"], default="up")
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("build-class", help="materialize a nested 1-shift class")
    p.add_argument("--spec", required=True, help="one 'a..b c..d' pair per line")
    p.set_defaults(func=_cmd_build_class)

    p = sub.add_parser("verify", help="run an exhaustive property sweep")
    p.add_argument("property", choices=oracle.property_ids())
    p.add_argument("--max-cells", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--show", type=int, default=10, help="counterexamples to print")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ConvmatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
