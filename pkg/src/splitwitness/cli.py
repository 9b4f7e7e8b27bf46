"""Command-line client.

Each subcommand builds the same request models the HTTP service consumes and
dispatches to the shared handlers in-process; `--format structured` prints
the canonical JSON of the response model instead of the text rendering.

Exit codes: 0 answered/verified, 1 refuted/verification failed, 2 usage or
computational-limit error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from fastapi import HTTPException

from . import service
from .errors import (
    DegreeCapExceeded,
    PolySyntaxError,
    ReplayFailure,
    SplitwitnessError,
    UndecidableError,
)
from .serialize import emit_certificate, load_certificate
from .witness import verify_certificate_safe

GRAMMAR_HELP = """polynomial grammar:
  terms: c | c*x | c*x^k | x^k | x   with integer or a/b coefficients,
  joined by + or -; whitespace is ignored.  Examples:
    "x^5 - 4*x + 2"    "1/2*x + 1/3"    "x^2 - 2"
  specialization inputs use x and y, e.g. "y^5 - 4*y + x".
family specs:
  finite: <poly>; <poly>; ...
  degree = k
  degree <= k [prefix: <poly>; ...]
  radical-tower base=2 n=3..6
  qab | qsolv"""


def _green(text: str) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\033[32m{text}\033[0m"


def _red(text: str) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\033[31m{text}\033[0m"


def _print_model(model, fmt: str, text_lines) -> None:
    if fmt == "structured":
        print(json.dumps(model.model_dump(), sort_keys=True, separators=(",", ":")))
    else:
        for line in text_lines:
            print(line)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitwitness",
        description="exact splitting-field computations and property-P witnesses",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "--format",
        choices=("text", "structured"),
        default="text",
        help="output rendering (default text)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="factor a polynomial over Q")
    p.add_argument("poly")

    p = sub.add_parser("galois", help="identify the Galois group (degree <= 5)")
    p.add_argument("poly")

    p = sub.add_parser("splitting-degree", help="degree of the splitting field")
    p.add_argument("poly")
    p.add_argument("--cap", type=int, default=5000)

    p = sub.add_parser("sturm", help="count distinct real roots")
    p.add_argument("poly")

    p = sub.add_parser("cyclotomic", help="n-th cyclotomic polynomial")
    p.add_argument("n", type=int)

    p = sub.add_parser("member", help="does a root of POLY lie in the given field?")
    p.add_argument("poly")
    p.add_argument("--in", dest="field_poly", required=True, metavar="FIELD_POLY")

    p = sub.add_parser("witness", help="construct and verify a property-P witness")
    p.add_argument("family")
    p.add_argument("--emit", metavar="FILE", help="write the certificate JSON here")
    p.add_argument("--cap", type=int, default=5000)

    p = sub.add_parser("verify", help="re-verify a certificate file")
    p.add_argument("certificate_file")

    p = sub.add_parser("specialize", help="scan integer specializations of f(x, y)")
    p.add_argument("poly")
    p.add_argument("--range", dest="range_", required=True, metavar="A..B")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("qab", help="is a root inside the cyclotomic closure?")
    p.add_argument("poly")

    p = sub.add_parser("qsolv", help="is a root expressible by iterated radicals?")
    p.add_argument("poly")

    return parser


def _cmd_factor(args) -> int:
    resp = service.handle_factor(service.PolyRequest(poly=args.poly))
    pieces = "".join(
        f"({f.poly})" + (f"^{f.multiplicity}" if f.multiplicity > 1 else "")
        for f in resp.factors
    )
    unit = "" if resp.unit == "1" and pieces else resp.unit + ("*" if pieces else "")
    _print_model(resp, args.format, [f"{unit}{pieces}" if pieces else resp.unit])
    return 0


def _cmd_galois(args) -> int:
    resp = service.handle_galois(service.PolyRequest(poly=args.poly))
    lines = [
        f"group: {resp.group} (order {resp.order}), "
        f"{'solvable' if resp.solvable else 'not solvable'} by radicals"
    ]
    for kind, value in resp.evidence:
        lines.append(f"  evidence {kind}: {value}")
    _print_model(resp, args.format, lines)
    return 0


def _cmd_splitting(args) -> int:
    resp = service.handle_splitting(
        service.SplittingRequest(poly=args.poly, cap=args.cap)
    )
    _print_model(
        resp,
        args.format,
        [f"splitting degree: {resp.total_degree}", f"tower steps: {resp.steps}"],
    )
    return 0


def _cmd_sturm(args) -> int:
    resp = service.handle_sturm(service.PolyRequest(poly=args.poly))
    _print_model(resp, args.format, [f"distinct real roots: {resp.count}"])
    return 0


def _cmd_cyclotomic(args) -> int:
    resp = service.handle_cyclotomic(service.CyclotomicRequest(n=args.n))
    _print_model(resp, args.format, [resp.poly])
    return 0


def _cmd_member(args) -> int:
    resp = service.handle_member(
        service.MemberRequest(poly=args.poly, field_poly=args.field_poly)
    )
    if resp.member:
        _print_model(
            resp, args.format, [f"member: witness coordinates {resp.witness_coords}"]
        )
        return 0
    _print_model(resp, args.format, ["not a member"])
    return 1


def _cmd_witness(args) -> int:
    resp = service.handle_witness(
        service.WitnessRequest(family=args.family, cap=args.cap)
    )
    if isinstance(resp, service.RadicalTowerResponse):
        lines = [
            f"radical tower n <= {resp.n_max}: splitting field degree {resp.field_degree}",
            f"tower steps: {resp.tower_steps}",
            f"sqrt membership measured: {resp.sqrt_is_member} "
            f"(relative degree {resp.measured_relative_degree})",
        ]
        if resp.contradicts_claim:
            lines.append(
                _red(
                    f"measured relative degree {resp.measured_relative_degree} "
                    f"CONTRADICTS the claimed value {resp.claimed_relative_degree} "
                    "for this family"
                )
            )
        else:
            lines.append(
                f"measured relative degree matches the claimed value "
                f"{resp.claimed_relative_degree}"
            )
        _print_model(resp, args.format, lines)
        return 0
    lines = [
        f"family: {resp.family}",
        f"witness: {resp.witness} (min poly {resp.witness_min_poly})",
        f"prime p = {resp.prime}, obstruction {resp.obstruction}",
    ]
    if resp.degree_total is not None:
        lines.append(f"splitting degree t = {resp.degree_total}, steps {resp.degree_steps}")
    lines.append("checks: " + ", ".join(resp.checks))
    lines.append(
        _green("certificate verified") if resp.verified else _red("verification FAILED")
    )
    if args.emit:
        data = emit_certificate(
            load_certificate(json.dumps(resp.certificate))
        )
        with open(args.emit, "wb") as sink:
            sink.write(data)
        lines.append(f"certificate written to {args.emit}")
    _print_model(resp, args.format, lines)
    return 0 if resp.verified else 1


def _cmd_verify(args) -> int:
    with open(args.certificate_file, "rb") as fh:
        cert = load_certificate(fh.read())
    ok, log, failing = verify_certificate_safe(cert)
    resp = service.VerifyResponse(verified=ok, failing_check=failing, log=log)
    if ok:
        _print_model(resp, args.format, [_green("verified"), *(f"  {l}" for l in log)])
        return 0
    _print_model(
        resp,
        args.format,
        [_red(f"verification FAILED at check {failing!r}"), *(f"  {l}" for l in log)],
    )
    return 1


def _cmd_specialize(args) -> int:
    lo, _, hi = args.range_.partition("..")
    resp = service.handle_specialize(
        service.SpecializeRequest(poly=args.poly, lo=int(lo), hi=int(hi), jobs=args.jobs)
    )
    lines = [f"specializations of {resp.bivariate} for b in [{lo}, {hi}]:"]
    for item in resp.outcomes:
        tag = f" group {item.group}" if item.group else ""
        lines.append(f"  b = {item.b}: {item.outcome}{tag}")
    lines.append(f"counts: {resp.counts}")
    lines.append(f"irreducible fraction: {resp.irreducible_fraction}")
    _print_model(resp, args.format, lines)
    return 0


def _cmd_qab(args) -> int:
    resp = service.handle_qab(service.PolyRequest(poly=args.poly))
    if resp.member:
        _print_model(resp, args.format, [f"member of the cyclotomic closure ({resp.reason})"])
        return 0
    _print_model(resp, args.format, [f"not a member ({resp.reason})"])
    return 1


def _cmd_qsolv(args) -> int:
    resp = service.handle_qsolv(service.PolyRequest(poly=args.poly))
    if resp.member:
        _print_model(resp, args.format, [f"member of the solvable closure ({resp.reason})"])
        return 0
    _print_model(resp, args.format, [f"not a member ({resp.reason})"])
    return 1


_COMMANDS = {
    "factor": _cmd_factor,
    "galois": _cmd_galois,
    "splitting-degree": _cmd_splitting,
    "sturm": _cmd_sturm,
    "cyclotomic": _cmd_cyclotomic,
    "member": _cmd_member,
    "witness": _cmd_witness,
    "verify": _cmd_verify,
    "specialize": _cmd_specialize,
    "qab": _cmd_qab,
    "qsolv": _cmd_qsolv,
}


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except SystemExit as exc:  # argparse usage errors and --help
        code = exc.code if isinstance(exc.code, int) else 2
        return 0 if code == 0 else 2
    except PolySyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        print(GRAMMAR_HELP, file=sys.stderr)
        return 2
    except HTTPException as exc:
        print(f"error: {exc.detail}", file=sys.stderr)
        if exc.status_code == 400:
            print(GRAMMAR_HELP, file=sys.stderr)
        return 2
    except ReplayFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except DegreeCapExceeded as exc:
        print(f"degree cap exceeded: {exc}", file=sys.stderr)
        return 2
    except UndecidableError as exc:
        print(f"undecidable: {exc}", file=sys.stderr)
        return 2
    except SplitwitnessError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RecursionError:
        print("error: input exceeds the engine's recursion budget", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
