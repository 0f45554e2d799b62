"""Command-line interface.

Every subcommand prints a human-readable summary by default and, with
``--json``, one JSON record per line: ``{"kind": ..., "payload": {...}}``.
Integers are written as decimal strings and rationals as ``"num/den"`` so
nothing is lost to floating point.  Exit codes: 0 success, 1 domain failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .curve import solutions_from_points
from .exactnum import DomainError, format_rational, parse_integer, parse_rational
from .identities import run_identities
from .parametric import (
    IdentityFailure,
    RationalTriple,
    certify_family,
    scale_to_integer_triad,
    solve_for_m,
)
from .poly import Polynomial, RationalFunction
from .search import run_search
from .verify import Certificate, Triad, verify_triad

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2

KINDS = ("triad", "certificate", "report", "hit", "point", "error")


# --- records -------------------------------------------------------------


def format_record(kind: str, payload: dict[str, Any]) -> str:
    if kind not in KINDS:
        raise ValueError(f"unknown record kind {kind!r}")
    return json.dumps({"kind": kind, "payload": payload}, separators=(",", ":"))


def parse_record(line: str) -> tuple[str, dict[str, Any]]:
    obj = json.loads(line)
    if obj.get("kind") not in KINDS or not isinstance(obj.get("payload"), dict):
        raise ValueError(f"not an output record: {line!r}")
    return obj["kind"], obj["payload"]


def _triad(t: Triad) -> dict[str, str]:
    return {"a": str(t.a), "b": str(t.b), "c": str(t.c)}


def _cert(c: Certificate) -> dict[str, str]:
    return {"u": str(c.u), "v": str(c.v), "w": str(c.w)}


def _rat(x: Fraction | None) -> str | None:
    return None if x is None else format_rational(x)


def _rational_triple(t: RationalTriple) -> dict[str, Any]:
    return {
        "a": _rat(t.a),
        "b": _rat(t.b),
        "c": _rat(t.c),
        "u": _rat(t.cert_u),
        "v": _rat(t.cert_v),
        "w": _rat(t.cert_w),
    }


def _poly(p: Polynomial) -> list[str]:
    return [format_rational(c) for c in p.coeffs]


def _rf(f: RationalFunction) -> dict[str, list[str]]:
    return {"num": _poly(f.num), "den": _poly(f.den)}


class Output:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def emit(self, kind: str, payload: dict[str, Any], text: str) -> None:
        line = format_record(kind, payload) if self.as_json else text
        print(line, file=self.stream, flush=True)


# --- subcommands ---------------------------------------------------------


def cmd_verify(args, out: Output) -> int:
    result = verify_triad(*args.values)
    if not result:
        out.emit(
            "error",
            {"triad": _triad(result.triad), "stage": result.stage, "value": str(result.value)},
            f"{list(result.triad.as_tuple())}: fails at stage '{result.stage}' "
            f"({result.value} is not a square)",
        )
        return EXIT_DOMAIN
    t, cert = result.triad, result.certificate
    out.emit(
        "certificate",
        {"triad": _triad(t), "certificate": _cert(cert)},
        f"{list(t.as_tuple())}: sum = {cert.u}^2, squares = {cert.v}^2, "
        f"cubes = {cert.w}^2",
    )
    return EXIT_OK


def cmd_search(args, out: Output) -> int:
    def on_hit(hit):
        t, c = hit.triad, hit.certificate
        out.emit(
            "hit",
            {"triad": _triad(t), "certificate": _cert(c)},
            f"{t.a} {t.b} {t.c}  (u={c.u}, v={c.v}, w={c.w})",
        )

    _, summary = run_search(args.max_sum, args.jobs, on_hit)
    elapsed = f"{summary.elapsed:.3f}"
    out.emit(
        "report",
        {
            "count": str(summary.count),
            "elapsed_seconds": elapsed,
            "range": {"max_sum_exclusive": str(summary.max_sum)},
            "jobs": str(summary.jobs),
        },
        f"{summary.count} triad(s) with a+b+c < {summary.max_sum} in {elapsed}s",
    )
    return EXIT_OK


def cmd_solve(args, out: Output) -> int:
    m = parse_rational(args.m)
    triple = solve_for_m(m)
    if args.raw:
        rt = _rational_triple(triple)
        out.emit(
            "triad",
            {"m": format_rational(m), "rational": rt},
            "\n".join(
                [f"rational solution at m = {m}:"]
                + [f"  {k} = {rt[k]}" for k in ("a", "b", "c", "u", "v", "w")]
            ),
        )
    scaled = scale_to_integer_triad(triple)
    payload = {
        "m": format_rational(m),
        "triad": _triad(scaled.triad),
        "certificate": _cert(scaled.certificate),
        "k": str(scaled.k),
        "square_divisor": str(scaled.square_divisor),
        "fully_reduced": scaled.fully_reduced,
    }
    lines = [str(x) for x in scaled.triad.as_tuple()]
    if not scaled.fully_reduced:
        lines.append("(note: gcd only partly factored; a square factor may remain)")
    out.emit("triad", payload, "\n".join(lines))
    return EXIT_OK


def cmd_family(args, out: Output) -> int:
    report = certify_family()
    payload = {
        "sum_identity_holds": report.sum_identity_holds,
        "squares_root": _rf(report.squares_root),
        "cubes_root": _rf(report.cubes_root),
        "clearing_polynomial": _poly(report.clearing_polynomial),
        "cleared_polys": [_poly(p) for p in report.cleared_polys],
        "cleared_degree": report.cleared_degree,
        "expected_degree": report.expected_degree,
        "degree_matches_expected": report.degree_matches_expected,
    }
    flag = "" if report.degree_matches_expected else (
        f"  DISCREPANCY: expected degree {report.expected_degree}"
    )
    text = "\n".join(
        [
            "a(m) + b(m) + c(m) = 1: holds",
            f"a^2+b^2+c^2 is a square in Q(m): root has degrees "
            f"{report.squares_root.num.degree}/{report.squares_root.den.degree}",
            f"a^3+b^3+c^3 is a square in Q(m): root has degrees "
            f"{report.cubes_root.num.degree}/{report.cubes_root.den.degree}",
            f"clearing polynomial degree: {report.clearing_polynomial.degree}",
            f"cleared triad degree: {report.cleared_degree}{flag}",
        ]
    )
    out.emit("report", payload, text)
    return EXIT_OK if report.degree_matches_expected else EXIT_DOMAIN


def cmd_points(args, out: Output) -> int:
    m = parse_rational(args.m)
    for sol in solutions_from_points(m, args.count):
        t = sol.triple
        out.emit(
            "point",
            {
                "m": format_rational(m),
                "multiple": sol.multiple,
                "p": format_rational(sol.p),
                "triple": _rational_triple(t),
                "all_positive": sol.all_positive,
            },
            f"[{sol.multiple}]P: p has {len(str(sol.p))} characters, "
            f"triple {'positive' if sol.all_positive else 'not all positive'}",
        )
    return EXIT_OK


def cmd_identities(args, out: Output) -> int:
    report = run_identities(args.samples, args.seed)
    cases = []
    lines = []
    for r in report.results:
        cases.append(
            {
                "name": r.name,
                "samples": r.samples,
                "zero": r.zero,
                "redraws": r.redraws,
                "witness": None if r.witness is None else [str(x) for x in r.witness],
                "residual": _rat(r.residual),
            }
        )
        status = "zero" if r.zero else f"NONZERO at {r.witness}: {r.residual}"
        lines.append(f"{r.name:32s} {status}")
    out.emit(
        "report",
        {"seed": report.seed, "samples": report.samples, "cases": cases,
         "all_zero": report.all_zero},
        "\n".join(lines),
    )
    return EXIT_OK if report.all_zero else EXIT_DOMAIN


# --- argument parsing ----------------------------------------------------


def _positive_int(text: str) -> int:
    try:
        value = parse_integer(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _int(text: str) -> int:
    try:
        return parse_integer(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_text(text: str) -> str:
    try:
        parse_rational(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def _search_bound(text: str) -> int:
    value = _int(text)
    if value < 3:
        raise argparse.ArgumentTypeError("--max-sum must be at least 3")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON records, one per line")

    parser = argparse.ArgumentParser(
        prog="sqtriad",
        description="Triads whose sum, sum of squares and sum of cubes are all squares.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check a triad and print its roots")
    p.add_argument("values", nargs=3, metavar="N", type=_int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="exhaustive search below a sum bound")
    p.add_argument("--max-sum", type=_search_bound, required=True)
    p.add_argument("--jobs", type=_positive_int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("solve", parents=[common], help="integer triad from the family at m")
    p.add_argument("--m", type=_rational_text, required=True, help="rational parameter P/Q")
    p.add_argument("--raw", action="store_true", help="also print the rational solution")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("family-check", parents=[common], help="symbolic check over Q(m)")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("points", parents=[common], help="solutions from multiples of P")
    p.add_argument("--m", type=_rational_text, required=True)
    p.add_argument("--count", type=_positive_int, required=True)
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("identities", parents=[common], help="randomised identity checks")
    p.add_argument("--samples", type=_positive_int, default=100)
    p.add_argument("--seed", type=_int, default=1)
    p.set_defaults(func=cmd_identities)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    out = Output(args.json)
    try:
        return args.func(args, out)
    except (DomainError, IdentityFailure) as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        if args.json:
            out.emit("error", payload, "")
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
