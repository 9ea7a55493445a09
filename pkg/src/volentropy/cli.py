"""Command line interface.

Exit codes: 0 success, 1 syntax error in the input, 2 not geometric.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import analyze_presentation
from .errors import NotGeometricError, PresentationSyntaxError
from .ordering import compute_cyclic_order, orientation_map
from .presentation import letter_name, occurrence_check, parse
from .tiling import build_ball

EXIT_OK = 0
EXIT_SYNTAX = 1
EXIT_NOT_GEOMETRIC = 2


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _fmt(x: float, digits: int) -> str:
    return f"{x:.{digits}g}"


def _cmd_analyze(args) -> int:
    p = parse(_read_input(args.input))
    report = analyze_presentation(p, tol=args.tol, oracle_radius=args.oracle)
    if args.format == "json":
        data = report.to_json(
            with_matrix=args.dump_matrix,
            with_bigons=args.dump_bigons,
            with_itineraries=args.dump_itineraries,
        )
        print(json.dumps(data, indent=2, sort_keys=True))
        return EXIT_OK
    digits = args.precision
    order = report.cyclic_order
    print(f"Geometric presentation with {p.n_generators} generators")
    print(f"Cyclic order: {order}")
    print(f"Kneading matrix: {report.matrix.shape[0]} x {report.matrix.shape[1]}")
    print(f"Determinant: {report.result.determinant}")
    print(f"Smallest root in (0,1): {_fmt(report.result.root, digits)}")
    print(f"Growth rate: {_fmt(report.result.growth, digits)}")
    print(
        f"Volume entropy: log({_fmt(report.result.growth, digits)}) "
        f"= {_fmt(report.result.entropy, digits)}"
    )
    if args.dump_bigons:
        print("Minimal bigons:")
        for entry in report.bigons_json():
            print(
                f"  ({entry['pair'][0]},{entry['pair'][1]}): "
                f"{{{entry['left']}, {entry['right']}}}  k={entry['length']}"
            )
    if args.dump_itineraries:
        print("Turning point itineraries:")
        for name, data in report.itineraries_json().items():
            print(f"  {name}: -({' '.join(data['minus'])})  +({' '.join(data['plus'])})")
    if args.dump_matrix:
        print("Kneading matrix rows:")
        matrix = report.matrix.to_json(order)
        print("  laps: " + " ".join(matrix["laps"]))
        for label, row in zip(matrix["rows"], matrix["entries"]):
            cells = ", ".join(json.dumps(cell) for cell in row)
            print(f"  {label}: [{cells}]")
    if report.oracle is not None:
        o = report.oracle
        print(f"Tiling oracle (radius {o.radius}): sigma = {o.sigma}")
        print(
            f"  sigma ratio {_fmt(o.ratio, digits)} vs growth "
            f"{_fmt(report.result.growth, digits)}: "
            f"{'agrees' if o.agrees else 'DISAGREES'} "
            f"(relative gap {_fmt(o.relative_gap, 3)})"
        )
    return EXIT_OK


def _cmd_check(args) -> int:
    p = parse(_read_input(args.input))
    occurrence_check(p)
    order = compute_cyclic_order(p)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "geometric": True,
                    "cyclic_order": order.to_json(),
                    "orientation": {
                        letter_name(x): kind for x, kind in orientation_map(order).items()
                    },
                },
                indent=2,
                sort_keys=True,
            )
        )
    else:
        print("The presentation is geometric")
        print(f"Cyclic order: {order}")
    return EXIT_OK


def _cmd_bigons(args) -> int:
    p = parse(_read_input(args.input))
    report = analyze_presentation(p)
    if args.format == "json":
        print(json.dumps(report.bigons_json(), indent=2, sort_keys=True))
    else:
        for entry in report.bigons_json():
            print(
                f"({entry['pair'][0]},{entry['pair'][1]}): "
                f"{{{entry['left']}, {entry['right']}}}  k={entry['length']}"
            )
    return EXIT_OK


def _cmd_sigma(args) -> int:
    p = parse(_read_input(args.input))
    occurrence_check(p)
    order = compute_cyclic_order(p)
    if args.radius > 7:
        print(
            f"warning: radius {args.radius} may need more than the supported "
            "memory envelope",
            file=sys.stderr,
        )
    ball = build_ball(p, order, args.radius - 1)
    sigma = ball.sphere_counts(args.radius)
    if args.format == "json":
        print(json.dumps({"radius": args.radius, "sigma": sigma}, sort_keys=True))
        return EXIT_OK
    print(f"{'m':>3} {'sigma_m':>12} {'ratio':>12}")
    for m, value in enumerate(sigma):
        ratio = f"{value / sigma[m - 1]:.6f}" if m else "-"
        print(f"{m:>3} {value:>12} {ratio:>12}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="volentropy",
        description=(
            "Decide whether a surface-group presentation is geometric and "
            "compute its volume entropy from the kneading determinant of its "
            "boundary circle map."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("input", help="input file, or - for stdin")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("analyze", help="full entropy computation")
    add_common(sp)
    sp.add_argument("--precision", type=int, default=9, help="significant digits")
    sp.add_argument("--tol", type=float, default=1e-12, help="root isolation tolerance")
    sp.add_argument("--dump-matrix", action="store_true")
    sp.add_argument("--dump-bigons", action="store_true")
    sp.add_argument("--dump-itineraries", action="store_true")
    sp.add_argument(
        "--oracle",
        type=int,
        metavar="RADIUS",
        help="also grow a tiling ball and cross-check the growth rate",
    )
    sp.set_defaults(func=_cmd_analyze)

    sp = sub.add_parser("check", help="stop after the geometricity decision")
    add_common(sp)
    sp.set_defaults(func=_cmd_check)

    sp = sub.add_parser("bigons", help="print the minimal bigons")
    add_common(sp)
    sp.set_defaults(func=_cmd_bigons)

    sp = sub.add_parser("sigma", help="sphere sizes of the tiling ball")
    add_common(sp)
    sp.add_argument("--radius", type=int, default=6)
    sp.set_defaults(func=_cmd_sigma)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PresentationSyntaxError as exc:
        print(f"The relations do not satisfy the syntax conventions: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except NotGeometricError as exc:
        print("The presentation is not geometric", file=sys.stderr)
        print(f"reason: {exc.reason}", file=sys.stderr)
        return EXIT_NOT_GEOMETRIC
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_SYNTAX


if __name__ == "__main__":
    sys.exit(main())
