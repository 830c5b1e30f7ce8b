"""Command-line front end.

Exit codes: 0 success / YES, 1 NO, refusal or illegal step, 2 malformed
input, 3 undecided within the search budget.
"""

from __future__ import annotations

import argparse
import math
import random
import sys
from pathlib import Path
from typing import Sequence

from .corpus import random_shape
from .errors import FormatError, NotReachable, ReplayError, ShapeGrowthError
from .formats import (
    dump_constructor,
    dump_partition,
    dump_trace,
    format_ascii,
    load_constructor,
    parse_shape,
)
from .full import full_doubling_constructor, reach_full_doubling
from .general import baseline_constructor, bfs_constructor, bfs_levels, embed, partition_constructor
from .oracle import ReachQuery, reachable, replay, replay_generated
from .ops import Constructor
from .partition import min_partition
from .rc import decide_rc, synthesize_rc
from .render import write_frames
from .shape import BaselineProfile, Shape, baseline, equal_up_to_translation, normalize, shift

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_UNKNOWN = 0, 1, 2, 3

# oracle budget used when deciding general doubling without an embedding
DECIDE_MAX_NODES = 50_000


class _InputError(Exception):
    pass


def _read(path: str | None, what: str) -> str:
    if path is None:
        raise _InputError(f"missing --{what}")
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from exc


def _shape(path: str | None, what: str, fmt: str | None) -> Shape:
    text = _read(path, what)
    try:
        return parse_shape(text, fmt)
    except FormatError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _profile_lines(label: str, p: BaselineProfile) -> str:
    return (
        f"{label} baseline:\n{format_ascii(p.baseline)}"
        f"{label} column multiplicities: {list(p.col_mult)}\n"
        f"{label} row multiplicities: {list(p.row_mult)}\n"
    )


# -- decide -----------------------------------------------------------------


def _decide(args) -> int:
    s_init = _shape(args.input, "in", args.format)
    s_final = _shape(args.target, "target", args.format)
    if args.family == "full":
        counts = reach_full_doubling(s_init, s_final)
        if counts is None:
            print("NO")
            return EXIT_NO
        print(f"YES l={counts.l} k={counts.k}")
        return EXIT_OK
    if args.family == "rc":
        yes = decide_rc(s_init, s_final)
        print("YES" if yes else "NO")
        sys.stdout.write(_profile_lines("initial", baseline(s_init)))
        sys.stdout.write(_profile_lines("target", baseline(s_final)))
        return EXIT_OK if yes else EXIT_NO
    if len(s_final) < len(s_init):
        print("NO")
        return EXIT_NO
    if embed(s_init, s_final) is not None:
        print("YES")
        return EXIT_OK
    res = reachable(ReachQuery(s_init, s_final, "node-breaking", max_nodes=DECIDE_MAX_NODES))
    if res.status == "yes":
        print("YES")
        return EXIT_OK
    if res.status == "no":
        print("NO")
        return EXIT_NO
    print("UNKNOWN (search budget exceeded)")
    return EXIT_UNKNOWN


# -- synthesize --------------------------------------------------------------


def _synthesize_doubling(s_init: Shape | None, s_final: Shape, strategy: str) -> Constructor:
    if strategy == "bfs":
        if s_init is None:
            s_init = Shape.trusted(frozenset([min(s_final.points)]))
        off = embed(s_init, s_final)
        if off is None:
            raise NotReachable("initial shape does not fit inside the target")
        placed = shift(s_final, -off[0], -off[1])
        return bfs_constructor(s_init, placed)
    if s_init is not None and len(s_init) != 1:
        raise NotReachable(f"strategy {strategy!r} builds from a single node; omit --in or use --strategy bfs")
    c = baseline_constructor(s_final) if strategy == "baseline" else partition_constructor(s_final)
    if s_init is None:
        return c
    (start,) = c.initial.points  # type: ignore[union-attr]
    (given,) = s_init.points
    return Constructor(tuple(op.translated(given[0] - start[0], given[1] - start[1]) for op in c), s_init)


def _synthesize(args) -> int:
    s_final = _shape(args.target, "target", args.format)
    s_init = _shape(args.input, "in", args.format) if args.input else None
    try:
        if args.family == "full":
            if s_init is None:
                raise _InputError("missing --in")
            counts = reach_full_doubling(s_init, s_final)
            if counts is None:
                raise NotReachable("target is not reachable by full doubling")
            c = full_doubling_constructor(counts, s_init)
        elif args.family == "rc":
            if s_init is None:
                raise _InputError("missing --in")
            c = synthesize_rc(s_init, s_final)
        else:
            c = _synthesize_doubling(s_init, s_final, args.strategy)
    except NotReachable as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_NO
    _emit(dump_constructor(c), args.out)
    print(f"steps: {len(c)}", file=sys.stderr if args.out is None else sys.stdout)
    return EXIT_OK


# -- simulate / render --------------------------------------------------------


def _load_run(args) -> tuple[Shape, Constructor]:
    text = _read(args.constructor, "constructor")
    try:
        c = load_constructor(text)
    except (FormatError, ValueError) as exc:
        raise _InputError(f"{args.constructor}: {exc}") from exc
    if args.input:
        start = _shape(args.input, "in", args.format)
    elif c.initial is not None:
        start = c.initial
    else:
        raise _InputError("constructor has no initial shape; pass --in")
    return start, c


def _simulate(args) -> int:
    start, c = _load_run(args)
    try:
        trace = replay(start, c)
    except ReplayError as exc:
        print(f"illegal step: {exc}", file=sys.stderr)
        return EXIT_NO
    if args.out:
        _emit(dump_trace(trace, args.format or "ascii"), args.out)
    if args.render:
        write_frames(trace, replay_generated(start, c), args.render)
    final = trace[-1]
    print(f"steps: {len(c)} size: {len(start)} -> {len(final)}")
    if args.target:
        s_final = _shape(args.target, "target", args.format)
        if not equal_up_to_translation(final, s_final):
            print("final shape differs from target", file=sys.stderr)
            return EXIT_NO
        print("final shape equals target")
    elif not args.out:
        sys.stdout.write(format_ascii(final))
    return EXIT_OK


def _render(args) -> int:
    if not args.out and not args.render:
        raise _InputError("missing --out (frame directory)")
    start, c = _load_run(args)
    try:
        trace = replay(start, c)
    except ReplayError as exc:
        print(f"illegal step: {exc}", file=sys.stderr)
        return EXIT_NO
    paths = write_frames(trace, replay_generated(start, c), args.out or args.render)
    print(f"wrote {len(paths)} frames")
    return EXIT_OK


# -- partition ----------------------------------------------------------------


def _partition(args) -> int:
    s = _shape(args.input, "in", args.format)
    part = min_partition(s)
    _emit(dump_partition(part), args.out)
    print(f"h: {part.h}", file=sys.stderr if args.out is None else sys.stdout)
    return EXIT_OK


# -- bench --------------------------------------------------------------------


def _bench(args) -> int:
    rng = random.Random(args.seed)
    rows = []
    for i in range(args.count):
        n = rng.randint(2, args.max_size)
        s = random_shape(rng, n)
        log = math.ceil(math.log2(n))
        singleton = Shape.trusted(frozenset([min(s.points)]))
        depth = len(bfs_levels(singleton, s))
        cases = [
            ("bfs", bfs_constructor(singleton, s), min(4 * n, 4 * (depth + 1))),
            ("partition", partition_constructor(s), min_partition(s).h * (2 * log + 6)),
        ]
        prof = baseline(s)
        if len(prof.baseline) < n:
            head = 4 * len(prof.baseline)
            cases.append(("baseline", baseline_constructor(normalize(s)), head + 2 * (log + 1)))
        for name, c, bound in cases:
            final = replay(c.initial, c)[-1]  # type: ignore[arg-type]
            ok = equal_up_to_translation(final, s) and len(c) <= bound
            rows.append((f"{i}:{name} n={n}", len(c), bound, ok))
    width = max(len(r[0]) for r in rows)
    print(f"{'case':<{width}}  steps  bound  result")
    for case, steps, bound, ok in rows:
        print(f"{case:<{width}}  {steps:>5}  {bound:>5}  {'pass' if ok else 'FAIL'}")
    failed = sum(not r[3] for r in rows)
    print(f"{len(rows) - failed}/{len(rows)} passed")
    return EXIT_OK if not failed else EXIT_NO


# -- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shapegrowth", description="Shape construction by growth operations.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--in", dest="input", help="initial shape file")
        p.add_argument("--target", help="target shape file")
        p.add_argument("--out", help="output file (stdout if omitted)")
        p.add_argument("--format", choices=("ascii", "structured"), help="shape file format (guessed if omitted)")

    p = sub.add_parser("decide", help="decide whether the target is reachable")
    common(p)
    p.add_argument("--family", choices=("full", "rc", "doubling"), default="doubling")

    p = sub.add_parser("synthesize", help="write a constructor for the target")
    common(p)
    p.add_argument("--family", choices=("full", "rc", "doubling"), default="doubling")
    p.add_argument("--strategy", choices=("bfs", "baseline", "partition"), default="partition")

    for verb, help_text in (("simulate", "replay a constructor"), ("render", "write SVG frames of a replay")):
        p = sub.add_parser(verb, help=help_text)
        common(p)
        p.add_argument("--constructor", required=True, help="constructor JSON file")
        p.add_argument("--render", metavar="DIR", help="directory for SVG frames")

    p = sub.add_parser("partition", help="minimum rectangle partition of a shape")
    common(p)

    p = sub.add_parser("bench", help="run constructors on a random corpus")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--max-size", type=int, default=60)
    p.add_argument("--seed", type=int, default=0)
    return parser


_HANDLERS = {
    "decide": _decide,
    "synthesize": _synthesize,
    "simulate": _simulate,
    "render": _render,
    "partition": _partition,
    "bench": _bench,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return _HANDLERS[args.verb](args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ShapeGrowthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO


if __name__ == "__main__":
    sys.exit(main())
