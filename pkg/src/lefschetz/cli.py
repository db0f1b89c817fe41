"""Command-line entry point.

    lefschetz analyze --space S.json --map F.json [--max-power K] [--format text|json]
                      [--mode auto|exterior|extended|even|general]
    lefschetz recognize --space S.json
    lefschetz fixtures list
    lefschetz fixtures emit NAME PATH

Exit codes: 0 ok, 2 parse error, 3 validation failure, 4 mode mismatch.
"""

from __future__ import annotations

import argparse
import sys

from .criteria import MODES, ShapeError, betti_compatible_with_exterior, betti_exterior_reason, recognize_shape
from .endomorphism import EndomorphismError
from .formats import FormatError, load_map, load_space, save_space
from .graded_algebra import PresentationError, RingPresentation
from .report import analyze
from .spaces import fixtures

EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, EXIT_MODE = 0, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="lefschetz", description="Lefschetz numbers, zeta functions and "
                 "periodic-point criteria for rational cohomology rings.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    an = sub.add_parser("analyze", help="analyse a ring endomorphism")
    an.add_argument("--space", required=True, metavar="PATH")
    an.add_argument("--map", required=True, metavar="PATH")
    an.add_argument("--max-power", type=int, default=None, metavar="K",
                    help="Lefschetz horizon (default: max(10, total dimension))")
    an.add_argument("--format", choices=("text", "json"), default="text")
    an.add_argument("--mode", choices=MODES, default="auto")

    rec = sub.add_parser("recognize", help="classify the shape of a space")
    rec.add_argument("--space", required=True, metavar="PATH")

    fx = sub.add_parser("fixtures", help="list or write built-in spaces")
    fsub = fx.add_subparsers(dest="action", required=True, parser_class=_Parser)
    fsub.add_parser("list")
    emit = fsub.add_parser("emit")
    emit.add_argument("name")
    emit.add_argument("path")
    return ap


def _load_presentation(path) -> RingPresentation:
    p = load_space(path)
    if not isinstance(p, RingPresentation):
        raise FormatError(f"{path} holds only Betti numbers; a full presentation is needed")
    return p.check()


def cmd_analyze(args) -> int:
    p = _load_presentation(args.space)
    f = load_map(p, args.map)
    if args.max_power is not None and args.max_power < 1:
        raise FormatError("--max-power must be >= 1")
    report = analyze(f, args.max_power, args.mode)
    sys.stdout.write(report.to_json() if args.format == "json" else report.to_text())
    return EXIT_OK


def cmd_recognize(args) -> int:
    space = load_space(args.space)
    if isinstance(space, RingPresentation):
        shape = recognize_shape(space.check())
        print(f"{shape.kind.value}: {shape.witness}")
    else:
        verdict = "compatible" if betti_compatible_with_exterior(space) else "incompatible"
        print(f"betti profile {list(space)} {verdict}: {betti_exterior_reason(space)}")
    return EXIT_OK


def cmd_fixtures(args) -> int:
    table = fixtures()
    if args.action == "list":
        for name, value in table.items():
            kind = "betti" if isinstance(value, tuple) else "space"
            print(f"{name}\t{kind}")
        return EXIT_OK
    if args.name not in table:
        print(f"unknown fixture {args.name!r}; try 'lefschetz fixtures list'", file=sys.stderr)
        return EXIT_PARSE
    save_space(table[args.name], args.path)
    return EXIT_OK


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    handler = {"analyze": cmd_analyze, "recognize": cmd_recognize, "fixtures": cmd_fixtures}[args.command]
    try:
        return handler(args)
    except FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PresentationError, EndomorphismError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ShapeError as exc:
        print(f"mode mismatch: {exc}", file=sys.stderr)
        return EXIT_MODE


if __name__ == "__main__":
    sys.exit(main())
