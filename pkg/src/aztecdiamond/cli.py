"""Command-line entry point: ``aztecdiamond {count,verify,enumerate,render}``.

Exit codes: 0 success, 1 verification failure or runtime error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import aztec, hankel, lgv, schroeder
from .errors import AztecError, SizeLimitError
from .render import tiling_svg
from .verify import SUITES, run_verification

COUNT_TARGETS = ("aztec", "schroeder-large", "schroeder-small", "det")


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--max-enum-n", type=int, default=None, metavar="K",
                   help="raise or lower the exhaustive-enumeration cutoffs")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="aztecdiamond",
        description="Exact Aztec diamond tiling counts, Schroeder path families and Hankel determinants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="print an exact count")
    p.add_argument("target", choices=COUNT_TARGETS)
    p.add_argument("n_pos", nargs="?", type=int, metavar="n")
    p.add_argument("--n", dest="n_opt", type=int, metavar="n")
    p.add_argument("--kind", choices=("h1", "g1", "h0", "g0"), help="Hankel matrix for target det")
    p.add_argument("--method", choices=aztec.METHODS, default="formula",
                   help="how to count aztec tilings (default: formula)")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")

    p = sub.add_parser("enumerate", parents=[common], help="stream objects as JSON lines")
    p.add_argument("target", choices=("tilings", "families"))
    p.add_argument("n", type=int)
    p.add_argument("--scheme", choices=lgv.SCHEMES, default="pi")
    p.add_argument("--format", choices=("jsonl", "text"), default="jsonl")

    p = sub.add_parser("render", parents=[common], help="draw a tiling as SVG")
    p.add_argument("input", nargs="?", help="tiling JSON file")
    p.add_argument("--generate", type=int, metavar="n", help="render the k-th enumerated tiling of Az(n)")
    p.add_argument("--index", type=int, default=0, metavar="k")
    p.add_argument("-o", "--output", help="SVG path (default: stdout)")
    p.add_argument("--overlay-paths", action="store_true")
    return parser


def _emit(args, payload, text):
    print(json.dumps(payload) if args.json else text)


def cmd_count(args, parser):
    n = args.n_opt if args.n_opt is not None else args.n_pos
    if n is None:
        parser.error("count needs n (positional or --n)")
    if args.target == "det":
        if args.kind is None:
            parser.error("count det needs --kind h1|g1|h0|g0")
        if n < 1:
            parser.error("n must be positive")
        value = hankel.determinant(hankel.hankel_matrix(args.kind, n))
        meta = {"kind": args.kind, "method": "fraction-free elimination"}
    elif args.target == "aztec":
        if n < 1:
            parser.error("n must be positive")
        cutoff = aztec.DEFAULT_TILING_CUTOFF if args.max_enum_n is None else args.max_enum_n
        value = aztec.count_tilings(n, args.method, max_n=cutoff)
        meta = {"method": args.method}
    else:
        if n < 0:
            parser.error("n must be non-negative")
        fn = schroeder.large_schroeder if args.target == "schroeder-large" else schroeder.small_schroeder
        value = fn(n)
        meta = {"method": "convolution recurrence"}
    _emit(args, {"target": args.target, "n": n, **meta, "value": str(value)}, str(value))
    return 0


def cmd_verify(args, parser):
    if args.max_n < 1:
        parser.error("--max-n must be positive")
    report = run_verification(args.max_n, args.suite, seed=args.seed, max_enum_n=args.max_enum_n)
    _emit(args, report.to_json(), report.table())
    return 0 if report.passed else 1


def cmd_enumerate(args, parser):
    if args.n < 1 and not (args.target == "families" and args.n == 0):
        parser.error("n must be positive")
    if args.target == "tilings":
        cutoff = aztec.DEFAULT_TILING_CUTOFF if args.max_enum_n is None else args.max_enum_n
        if args.n > cutoff:
            raise SizeLimitError("tiling enumeration", args.n, cutoff)
        items = aztec.iter_tilings(args.n)
    else:
        scheme = lgv.AnchorScheme(args.scheme, args.n)
        items = iter(lgv.canonical_order(lgv.enumerate_family(scheme, max_n=args.max_enum_n)))
    count = 0
    for obj in items:
        count += 1
        if args.format == "jsonl":
            print(json.dumps(obj.to_json()))
        elif args.target == "tilings":
            print(" ".join(f"{d.o}({d.x},{d.y})" for d in obj.sorted_dominoes()))
        else:
            print(" ".join(str(p) for p in obj.paths))
    summary = {"target": args.target, "n": args.n, "count": count}
    if args.target == "families":
        summary["scheme"] = args.scheme
    print(json.dumps({"summary": summary}) if args.format == "jsonl" else f"count {count}")
    return 0


def cmd_render(args, parser):
    if (args.input is None) == (args.generate is None):
        parser.error("render needs exactly one of a tiling file or --generate n")
    if args.input is not None:
        with open(args.input) as fh:
            t = aztec.Tiling.from_json(json.load(fh))
    else:
        cutoff = aztec.DEFAULT_TILING_CUTOFF if args.max_enum_n is None else args.max_enum_n
        tilings = aztec.enumerate_tilings(args.generate, max_n=cutoff)
        if not 0 <= args.index < len(tilings):
            parser.error(f"--index must lie in 0..{len(tilings) - 1}")
        t = tilings[args.index]
    svg = tiling_svg(t, overlay_paths=args.overlay_paths)
    if args.output:
        with open(args.output, "w", newline="\n") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


COMMANDS = {"count": cmd_count, "verify": cmd_verify, "enumerate": cmd_enumerate, "render": cmd_render}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, parser)
    except AztecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
