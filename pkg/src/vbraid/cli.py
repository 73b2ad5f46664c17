"""``vbraid`` command line. Exit status: 0 for success or "true", 1 for "false"
or a failed check, 2 for usage errors."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from . import __version__, checks
from .action import DiagramTooLarge, act_word, coordinates
from .braid import BraidSyntaxError, parse_word, random_word
from .freegroup import pretty_word
from .reduce import is_trivial, normalize, undraw, words_equal
from .render import to_ascii, to_svg
from .reps import RepKind, is_kernel_element, word_endo
from .vcd import Vcd, VcdError, check, excursion_notation, trivial_diagram

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _word(args: argparse.Namespace, text: str):
    try:
        return parse_word(text, args.n)
    except (BraidSyntaxError, ValueError) as e:
        raise UsageError(str(e)) from e


def _load_diagram(path: str) -> Vcd:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return check(Vcd.from_json(text))
    except (OSError, ValueError, KeyError, TypeError) as e:
        raise UsageError(f"cannot read diagram {path}: {e}") from e


def _decision(flag: bool) -> int:
    print("true" if flag else "false")
    return EXIT_TRUE if flag else EXIT_FALSE


def cmd_eq(args) -> int:
    return _decision(words_equal(_word(args, args.word1), _word(args, args.word2)))


def cmd_trivial(args) -> int:
    return _decision(is_trivial(_word(args, args.word)))


def cmd_act(args) -> int:
    w = _word(args, args.word)
    d = _load_diagram(args.diagram) if args.diagram else trivial_diagram(args.n)
    if d.n != args.n:
        raise UsageError(f"diagram has {d.n} curves, expected {args.n}")
    e = act_word(w, d)
    print(json.dumps(e.to_json()))
    print(excursion_notation(e))
    return EXIT_TRUE


def cmd_undraw(args) -> int:
    w = undraw(_load_diagram(args.diagram))
    if w is None:
        print("not in the orbit of the trivial diagram", file=sys.stderr)
        return EXIT_FALSE
    print(str(w))
    return EXIT_TRUE


def cmd_normalize(args) -> int:
    trace = normalize(_load_diagram(args.diagram))
    if args.trace:
        Path(args.trace).write_text(json.dumps(trace.to_json(), indent=2) + "\n")
    print(json.dumps(trace.minimal.to_json()))
    return EXIT_TRUE


def cmd_coords(args) -> int:
    print(coordinates(act_word(_word(args, args.word))))
    return EXIT_TRUE


def cmd_rep(args) -> int:
    kind = RepKind(args.kind)
    try:
        f = word_endo(kind, _word(args, args.word))
    except ValueError as e:
        raise UsageError(str(e)) from e
    for g in f.generators():
        name = "q" if g == 0 else f"x{g}"
        print(f"{name} -> {pretty_word(f.image(g))}")
    return EXIT_TRUE


def cmd_render(args) -> int:
    d = act_word(_word(args, args.word))
    text = to_ascii(d) if args.ascii else to_svg(d)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_TRUE


def cmd_kernel_demo(args) -> int:
    w = parse_word(checks.KERNEL_WORD, 4)
    f = word_endo(RepKind.BM, w)
    print(f"word: {checks.KERNEL_WORD}  (n=4)")
    for g in f.generators():
        print(f"  {'q' if g == 0 else f'x{g}'} -> {pretty_word(f.image(g))}")
    in_kernel = is_kernel_element(RepKind.BM, w)
    trivial = is_trivial(w)
    print(f"bm image is the identity: {in_kernel}")
    print(f"braid is trivial: {trivial}")
    period = parse_word("t3 s2 t1 S2", 4)
    print(f"one period in the kernel: {is_kernel_element(RepKind.BM, period)}")
    welded = parse_word("t2 s1 s2 t1 S2 S1", 3)
    print(f"welded contrast: {welded} (n=3) welded image identity: "
          f"{is_kernel_element(RepKind.WELDED, welded)}, braid trivial: {is_trivial(welded)}")
    ok = in_kernel and not trivial and not is_trivial(welded)
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_selftest(args) -> int:
    failed = 0
    for name, ok, detail in checks.fixtures():
        print(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  [{detail}]" if detail else ""))
        failed += not ok
    return EXIT_TRUE if not failed else EXIT_FALSE


def cmd_fuzz(args) -> int:
    seed = args.seed if args.seed is not None else random.randrange(2**32)
    print(f"seed {seed}")
    names = args.suite or list(checks.SUITES)
    failed = 0
    for name in names:
        if name not in checks.SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from {', '.join(checks.SUITES)}")
        t0 = time.perf_counter()
        label, ok, detail = checks.SUITES[name](random.Random(f"{seed}:{name}"), args.cases)
        print(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}  ({time.perf_counter() - t0:.1f}s)")
        failed += not ok
    return EXIT_TRUE if not failed else EXIT_FALSE


def cmd_bench(args) -> int:
    print(f"seed {args.seed}, n={args.n}, length {args.length}, point budget {args.max_points}")
    rng = random.Random(args.seed)
    worst, failed = 0.0, 0
    for k in range(args.words):
        w = random_word(args.n, args.length, rng)
        t0 = time.perf_counter()
        try:
            size = act_word(w, max_points=args.max_points).num_points()
        except DiagramTooLarge as e:
            size, failed = f"over budget: {e}", failed + 1
        dt = time.perf_counter() - t0
        worst = max(worst, dt)
        print(f"word {k}: {dt:.3f}s, {size}" + ("" if isinstance(size, str) else " points"))
    print(f"worst {worst:.3f}s, {failed} of {args.words} over budget")
    return EXIT_TRUE if not failed and worst < args.time_limit else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="vbraid", description="Virtual braids via virtual curve diagrams.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    def with_n(p):
        p.add_argument("--n", type=int, required=True, help="number of strands")
        return p

    p = with_n(sub.add_parser("eq", help="decide equality of two braid words"))
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_eq)

    p = with_n(sub.add_parser("trivial", help="decide whether a braid word is trivial"))
    p.add_argument("word")
    p.set_defaults(func=cmd_trivial)

    p = with_n(sub.add_parser("act", help="act on a diagram (default: the trivial one), print JSON"))
    p.add_argument("--word", required=True)
    p.add_argument("--diagram", help="diagram JSON file, '-' for stdin")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("undraw", help="recover a braid word from a diagram")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_undraw)

    p = sub.add_parser("normalize", help="reduce a diagram to a minimal one")
    p.add_argument("diagram")
    p.add_argument("--trace", help="write the reduction trace as JSON here")
    p.set_defaults(func=cmd_normalize)

    p = with_n(sub.add_parser("coords", help="braid coordinates of a word"))
    p.add_argument("word")
    p.set_defaults(func=cmd_coords)

    p = with_n(sub.add_parser("rep", help="free group images of a word"))
    p.add_argument("--kind", choices=[k.value for k in RepKind], required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_rep)

    p = with_n(sub.add_parser("render", help="draw the diagram of a word"))
    p.add_argument("word")
    p.add_argument("-o", "--output")
    p.add_argument("--ascii", action="store_true")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("kernel-demo", help="verify the bm kernel element")
    p.set_defaults(func=cmd_kernel_demo)

    p = sub.add_parser("selftest", help="run the pinned fixtures")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("fuzz", help="run randomized invariant suites")
    p.add_argument("--seed", type=int)
    p.add_argument("--cases", type=int, default=50)
    p.add_argument("--suite", action="append", help="restrict to a suite (repeatable)")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("bench", help="time the action on long random words")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--length", type=int, default=200)
    p.add_argument("--words", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-points", type=int, default=100_000)
    p.add_argument("--time-limit", type=float, default=5.0, help="seconds per word")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_TRUE
    if getattr(args, "n", None) is not None and args.n < 1:
        print("vbraid: error: --n must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, VcdError) as e:
        print(f"vbraid: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
