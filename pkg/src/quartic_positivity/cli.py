"""Command-line interface.

Usage:
    quartic-positivity check A B C D E          # a x^4 + b x^3 + c x^2 + d x + e > 0 ?
    quartic-positivity check-reduced P Q R      # x^4 + p x^2 + q x + r > 0 ?
    quartic-positivity certify P Q R --out cert.json
    quartic-positivity gc check ETA3 ETA4
    quartic-positivity gc region --format svg --out region.svg --boundary-samples 40

Exit status: 0 positive / inside, 1 not positive / outside, 2 boundary, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import re
import sys
from pathlib import Path

from . import export
from .core import GeneralQuartic, PositivityCertificate, ReducedQuartic, Verdict, is_positive, is_positive_general
from .errors import QuarticError
from .gram_charlier import ETA4_MAX, GCParams, RegionVerdict, boundary_curve, gc_in_region, region_grid

EXIT_USAGE = 64
_EXIT = {
    Verdict.POSITIVE: 0, Verdict.NOT_POSITIVE: 1, Verdict.BOUNDARY: 2,
    RegionVerdict.INSIDE: 0, RegionVerdict.OUTSIDE: 1, RegionVerdict.BOUNDARY: 2,
}
MAX_GRID_POINTS = 10**7

# argparse only recognises plain negative decimals as positionals; add exponents
_NEG_NUMBER = re.compile(r"^-(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?$")


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kw):
        super().__init__(*args, **kw)
        self._negative_number_matcher = _NEG_NUMBER

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _finite(s: str) -> float:
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {s!r}") from None
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"must be finite: {s!r}")
    return v


def _grid_size(s: str) -> int:
    try:
        n = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if n < 2:
        raise argparse.ArgumentTypeError(f"grid size must be >= 2, got {n}")
    return n


def _print_cert(cert: PositivityCertificate, as_json: bool) -> None:
    if as_json:
        print(json.dumps(export.certificate_dict(cert), indent=2, allow_nan=False))
        return
    print({Verdict.POSITIVE: "Positive", Verdict.NOT_POSITIVE: "NotPositive",
           Verdict.BOUNDARY: "Boundary"}[cert.verdict])
    if cert.trace.degenerate:
        print("  degenerate: leading coefficient is zero")
    for k, v in cert.trace.scalars().items():
        if v is not None:
            print(f"  {k:<10} {v:.17g}")
    if cert.trace.c4_branch:
        print(f"  C4 branch  {cert.trace.c4_branch}")
    w = cert.witness
    if w is not None:
        print(f"  witness m  {w.m:.17g}")
        print(f"  g_max      {w.g_max:.17g}")


def cmd_check(args) -> int:
    cert = is_positive_general(GeneralQuartic(args.a, args.b, args.c, args.d, args.e))
    _print_cert(cert, args.json)
    return _EXIT[cert.verdict]


def cmd_check_reduced(args) -> int:
    cert = is_positive(ReducedQuartic(args.p, args.q, args.r))
    _print_cert(cert, args.json)
    return _EXIT[cert.verdict]


def cmd_certify(args) -> int:
    cert = is_positive(ReducedQuartic(args.p, args.q, args.r))
    export.write_certificate_json(cert, args.out)
    print(f"{cert.verdict.value}: certificate written to {args.out}")
    return _EXIT[cert.verdict]


def cmd_gc_check(args) -> int:
    s = gc_in_region(GCParams(args.eta3, args.eta4))
    if args.json:
        t = s.trace
        print(json.dumps({"eta3": args.eta3, "eta4": args.eta4, "verdict": s.verdict.value,
                          "m_minus": t.m_minus if t else None,
                          "d_m_minus": t.d_m_minus if t else None}, indent=2))
    else:
        print(s.verdict.value.capitalize())
        if s.trace:
            print(f"  m_minus    {s.trace.m_minus:.17g}")
            print(f"  d_m_minus  {s.trace.d_m_minus:.17g}")
    return _EXIT[s.verdict]


def cmd_gc_region(args, parser) -> int:
    if not (args.eta4_min < args.eta4_max):
        parser.error("--eta4-min must be below --eta4-max")
    if not args.eta3_abs > 0.0:
        parser.error("--eta3-abs must be positive")
    if args.nx * args.ny > MAX_GRID_POINTS:
        parser.error(f"grid of {args.nx * args.ny} points exceeds {MAX_GRID_POINTS}")
    if args.boundary_samples < 0:
        parser.error("--boundary-samples must be >= 0")
    out = Path(args.out if args.out else f"gc_region.{args.format}")
    samples = region_grid((args.eta4_min, args.eta4_max), (-args.eta3_abs, args.eta3_abs), args.nx, args.ny)
    curve = None
    if args.boundary_samples:
        lo, hi = max(args.eta4_min, 0.0), min(args.eta4_max, ETA4_MAX)
        n = args.boundary_samples
        # interior stations only: the endpoints 0 and 1/6 are not strictly inside
        stations = [lo + (hi - lo) * (k + 0.5) / n for k in range(n)] if hi > lo else []
        curve = boundary_curve(stations, tol=1e-10)
    if args.format == "csv":
        export.write_region_csv(samples, out)
        if curve is not None:
            export.write_boundary_csv(curve, out.with_name(out.stem + "_boundary.csv"))
    elif args.format == "json":
        export.write_region_json(samples, out, curve)
    else:
        export.write_region_svg(samples, curve, export.RegionPlotConfig(), out)
    n_in = sum(s.verdict is RegionVerdict.INSIDE for s in samples)
    print(f"{len(samples)} points, {n_in} inside; wrote {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="quartic-positivity",
        description="Decide positivity of quartic polynomials and Gram-Charlier densities.",
        epilog="exit status: 0 positive/inside, 1 not positive/outside, 2 boundary, 64 usage error",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="general quartic a x^4 + b x^3 + c x^2 + d x + e")
    for name in "abcde":
        p.add_argument(name, type=_finite)
    p.add_argument("--json", action="store_true", help="print the certificate as JSON")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("check-reduced", help="reduced quartic x^4 + p x^2 + q x + r")
    for name in "pqr":
        p.add_argument(name, type=_finite)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_reduced)

    p = sub.add_parser("certify", help="write a separation certificate for x^4 + p x^2 + q x + r")
    for name in "pqr":
        p.add_argument(name, type=_finite)
    p.add_argument("--out", required=True, help="output JSON path")
    p.set_defaults(func=cmd_certify)

    gc = sub.add_parser("gc", help="Gram-Charlier density positivity")
    gsub = gc.add_subparsers(dest="gc_command", required=True, parser_class=_Parser)
    p = gsub.add_parser("check", help="membership of (eta3, eta4) in the valid region")
    p.add_argument("eta3", type=_finite)
    p.add_argument("eta4", type=_finite)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gc_check)

    p = gsub.add_parser("region", help="evaluate and export the valid region on a grid")
    p.add_argument("--eta4-min", type=_finite, default=0.0)
    p.add_argument("--eta4-max", type=_finite, default=0.17)
    p.add_argument("--eta3-abs", type=_finite, default=0.3)
    p.add_argument("--nx", type=_grid_size, default=200, help="points along eta4")
    p.add_argument("--ny", type=_grid_size, default=200, help="points along eta3")
    p.add_argument("--format", choices=("csv", "json", "svg"), default="svg")
    p.add_argument("--out", default=None, help="output path (default gc_region.FORMAT)")
    p.add_argument("--boundary-samples", type=int, default=0, metavar="N",
                   help="also trace the boundary at N eta4 stations")
    p.set_defaults(func=lambda a: cmd_gc_region(a, p))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except QuarticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
