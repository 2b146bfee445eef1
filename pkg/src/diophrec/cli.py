"""Command-line front end.

Exit codes: 0 success, 2 inadmissible recurrence, 3 method failure,
4 bad input, 5 brute-force verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .certificate import build_certificate, dumps, encode_polynomial
from .errors import DiophrecError, InvalidInputError
from .invariant import Recurrence, build_invariant, is_invariant
from .pipeline import INADMISSIBLE, METHOD_FAILURE, derive
from .plotdata import plot_csv
from .proof import render_proof
from .solver import brute_force_verify, orbit

EXIT_OK, EXIT_INADMISSIBLE, EXIT_METHOD, EXIT_INPUT, EXIT_VERIFY = 0, 2, 3, 4, 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(",") if v != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _tuples(text: str) -> list[tuple[int, ...]]:
    return [_ints(part) for part in text.split(";") if part.strip()]


class _Out:
    def __init__(self, quiet: bool):
        self.quiet = quiet

    def __call__(self, *lines: str):
        if not self.quiet:
            for line in lines:
                print(line)


def _write_json(path: str | None, payload) -> None:
    if path is None:
        return
    text = dumps(payload) if isinstance(payload, dict) else json.dumps(payload, indent=2) + "\n"
    with open(path, "w") as fh:
        fh.write(text)


def _fmt_tuples(ts) -> str:
    return "{" + ", ".join("[" + ", ".join(map(str, t)) + "]" for t in ts) + "}"


def _status_exit(d, say) -> int | None:
    if d.status == INADMISSIBLE:
        print(f"{d.rec} is not admissible:", file=sys.stderr)
        for r in d.admissibility.reasons:
            print(f"  {r}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    if d.status == METHOD_FAILURE:
        for r in d.bound.per_region:
            if not r.positive:
                print(f"method fails on {r.region.name}: minimum {r.minimum.approx:.10g} <= 0",
                      file=sys.stderr)
        return EXIT_METHOD
    return None


# ----------------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------------

def cmd_derive(args, say) -> int:
    rec = Recurrence(args.coeffs)
    p = build_invariant(rec)
    say(p.render())
    _write_json(args.json, {
        "recurrence": {"order": rec.order, "coeffs": list(rec.coeffs)},
        "polynomial": encode_polynomial(p),
        "invariance_verified": is_invariant(rec, p),
    })
    return EXIT_OK


def cmd_all_solns(args, say) -> int:
    d = derive(args.coeffs)
    _write_json(args.json, build_certificate(d))
    code = _status_exit(d, say)
    if code is not None:
        return code
    say(f"looking for monotonically increasing solutions up to {d.search_limit}",
        _fmt_tuples(d.generators.generators))
    return EXIT_OK


def cmd_prove(args, say) -> int:
    d = derive(args.coeffs)
    text = render_proof(d)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        say(text.rstrip("\n"))
    _write_json(args.json, build_certificate(d))
    return _status_exit(d, say) or EXIT_OK


def cmd_verify(args, say) -> int:
    if args.radius < 0:
        raise InvalidInputError("radius must be nonnegative")
    d = derive(args.coeffs)
    code = _status_exit(d, say)
    if code is not None:
        _write_json(args.json, build_certificate(d))
        return code
    gens = args.generators if args.generators is not None else d.generators.generators
    for g in gens:
        if len(g) != d.rec.order:
            raise InvalidInputError(f"generator {g} must have {d.rec.order} entries")
    rep = brute_force_verify(d.rec, d.polynomial, args.radius, gens)
    _write_json(args.json, rep.to_json())
    say(f"{len(rep.solutions)} solutions with all |entries| <= {args.radius}")
    for s in rep.solutions:
        if s in rep.memberships:
            g, n = rep.memberships[s]
            say(f"  {s} = R^{n} {g}")
    if rep.unexplained:
        print(f"{len(rep.unexplained)} unexplained:", file=sys.stderr)
        for s in rep.unexplained:
            print(f"  {s}", file=sys.stderr)
        return EXIT_VERIFY
    say("all explained")
    return EXIT_OK


def cmd_orbit(args, say) -> int:
    if args.back < 0 or args.forward < 0:
        raise InvalidInputError("step counts must be nonnegative")
    rec = Recurrence(args.coeffs)
    windows = orbit(rec, args.seed, args.back, args.forward)
    for w in windows:
        say("(" + ", ".join(map(str, w)) + ")")
    _write_json(args.json, [list(w) for w in windows])
    return EXIT_OK


def cmd_plot_data(args, say) -> int:
    text = plot_csv(Recurrence(args.coeffs), args.grid)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        say(text.rstrip("\n"))
    return EXIT_OK


# ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", metavar="PATH", default=argparse.SUPPRESS,
                        help="also write machine-readable output to PATH")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="suppress normal output")

    parser = _Parser(prog="diophrec", description=__doc__.splitlines()[0],
                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.add_argument("--coeffs", type=_ints, required=True,
                       help="recurrence coefficients c1,...,cd")
        p.set_defaults(func=func)
        return p

    add("derive", cmd_derive, "print the invariant polynomial")
    add("all-solns", cmd_all_solns, "search limit and generating solutions")
    p = add("prove", cmd_prove, "render a plain-text proof")
    p.add_argument("--out", metavar="PATH")
    p = add("verify", cmd_verify, "brute-force check inside a cube")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--generators", type=_tuples, default=None,
                   help="override the generators, e.g. '0,0,1;0,1,3'")
    p = add("orbit", cmd_orbit, "print orbit windows of a seed")
    p.add_argument("--seed", type=_ints, required=True)
    p.add_argument("--back", type=int, default=0)
    p.add_argument("--forward", type=int, default=0)
    p = add("plot-data", cmd_plot_data, "CSV samples of the plane map")
    p.add_argument("--grid", type=int, default=21)
    p.add_argument("--out", metavar="PATH")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.json = getattr(args, "json", None)
    args.quiet = getattr(args, "quiet", False)
    try:
        return args.func(args, _Out(args.quiet))
    except (InvalidInputError, argparse.ArgumentTypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except DiophrecError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_METHOD


if __name__ == "__main__":
    sys.exit(main())
