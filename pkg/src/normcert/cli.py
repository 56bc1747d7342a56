"""Command-line front end: certify, verify, demo.

Exit codes: certify 0 on success, 2 when a search is exhausted, 3 on bad
input; verify 0 accept, 1 reject, 3 on bad input; demo 0 unless a demo
assertion fails.  The seed falls back to the NPCERT_SEED environment
variable, then to 0.
"""

from __future__ import annotations

import argparse
import os
import sys

from .certify import certify, verify
from .charp import GF, char2_squares_report, char3_vanishing_report
from .errors import NormCertError, SearchExhausted
from .genpos import DEFAULT_BOUND, DEFAULT_MAX_TRIES
from .instances import run_random_suite
from .rings import QQ
from .serialize import (
    FormatError,
    certificate_to_json,
    dumps,
    load_certificate,
    load_instance,
)

CHAR2_FIELDS = (2, 4, 8)
CHAR3_FIELDS = (3, 9, 27)


def _resolve_seed(value):
    if value is not None:
        return value
    env = os.environ.get("NPCERT_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            print(f"ignoring non-integer NPCERT_SEED={env!r}", file=sys.stderr)
    return 0


def _option(args, inst, name, default):
    cli_value = getattr(args, name)
    if cli_value is not None:
        return cli_value
    return inst.options.get(name, default)


def _cmd_certify(args) -> int:
    try:
        inst = load_instance(args.input)
    except (FormatError, OSError) as exc:
        print(f"invalid instance: {exc}", file=sys.stderr)
        return 3
    seed = _resolve_seed(_option(args, inst, "seed", None))
    try:
        cert = certify(
            inst.ext,
            inst.q,
            inst.xs,
            rng=seed,
            max_tries=_option(args, inst, "max_tries", DEFAULT_MAX_TRIES),
            bound=_option(args, inst, "bound", DEFAULT_BOUND),
            with_trace=bool(args.trace or inst.options.get("trace")),
        )
    except SearchExhausted as exc:
        print(f"search exhausted: {exc}", file=sys.stderr)
        return 2
    except NormCertError as exc:
        print(f"invalid instance: {exc}", file=sys.stderr)
        return 3
    payload = dumps(certificate_to_json(inst.ring, cert))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 0


def _cmd_verify(args) -> int:
    try:
        inst = load_instance(args.input)
        cert = load_certificate(args.certificate, inst.ring)
    except (FormatError, OSError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 3
    outcome = verify(inst.ext, inst.q, inst.xs, cert)
    if outcome:
        print("certificate accepted")
        return 0
    print(f"certificate rejected: {outcome.failure}", file=sys.stderr)
    return 1


def _demo_char2(args) -> int:
    orders = [args.field_order] if args.field_order else list(CHAR2_FIELDS)
    reports = [char2_squares_report(GF(order)) for order in orders]
    print(f"{'field':>6} {'elements':>9} {'off-line':>9} {'image':>6} {'=k*1':>5} {'prim.sq':>8}")
    for rep in reports:
        print(
            f"{rep.field:>6} {rep.total:>9} {rep.squares_off_line:>9} "
            f"{rep.image_size:>6} {str(rep.image_equals_line):>5} {rep.primitive_squares:>8}"
        )
    print(dumps([rep.__dict__ for rep in reports]), end="")
    return 0 if all(rep.ok for rep in reports) else 1


def _demo_char3(args) -> int:
    orders = [args.field_order] if args.field_order else list(CHAR3_FIELDS)
    reports = [char3_vanishing_report(GF(order)) for order in orders]
    print(f"{'field':>6} {'elements':>9} {'units':>7} {'qualifying':>11} {'violations':>11}")
    for rep in reports:
        print(
            f"{rep.field:>6} {rep.total:>9} {rep.units:>7} "
            f"{rep.qualifying:>11} {rep.violations:>11}"
        )
    print(dumps([rep.__dict__ for rep in reports]), end="")
    return 0 if all(rep.ok for rep in reports) else 1


def _demo_randsuite(args) -> int:
    seed = _resolve_seed(args.seed)
    result = run_random_suite(
        QQ,
        count=args.count,
        seed=seed,
        max_tries=args.max_tries or DEFAULT_MAX_TRIES,
        bound=args.bound or DEFAULT_BOUND,
    )
    for index, reason in result.failures:
        print(f"instance {index}: {reason}", file=sys.stderr)
    print(f"{result.verified}/{result.total} certificates verified ({result.elapsed:.1f}s)")
    return 0 if result.ok else 1


def _parse_field(value: str, allowed) -> int:
    name = value.upper().lstrip("F")
    try:
        order = int(name)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad field {value!r}") from None
    if order not in allowed:
        choices = ", ".join(f"F{o}" for o in allowed)
        raise argparse.ArgumentTypeError(f"field must be one of {choices}")
    return order


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="normcert",
        description="Exact certificates for norms of quadratic-form values "
        "over simple ring extensions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cert = sub.add_parser("certify", help="produce a certificate for an instance file")
    cert.add_argument("--input", required=True, help="instance JSON path")
    cert.add_argument("--output", help="certificate JSON path (stdout when omitted)")
    cert.add_argument("--seed", type=int, default=None)
    cert.add_argument("--max-tries", dest="max_tries", type=int, default=None)
    cert.add_argument("--bound", type=int, default=None)
    cert.add_argument("--trace", action="store_true", help="include per-level audit records")
    cert.set_defaults(fn=_cmd_certify)

    ver = sub.add_parser("verify", help="check a certificate against an instance")
    ver.add_argument("--input", required=True, help="instance JSON path")
    ver.add_argument("--certificate", required=True, help="certificate JSON path")
    ver.set_defaults(fn=_cmd_verify)

    demo = sub.add_parser("demo", help="built-in demonstrations")
    kinds = demo.add_subparsers(dest="kind", required=True)

    d2 = kinds.add_parser("char2", help="squares collapse onto k*1 in char 2")
    d2.add_argument(
        "--field",
        dest="field_order",
        type=lambda v: _parse_field(v, CHAR2_FIELDS),
        default=None,
    )
    d2.set_defaults(fn=_demo_char2)

    d3 = kinds.add_parser("char3", help="vanishing top coordinates in char 3")
    d3.add_argument(
        "--field",
        dest="field_order",
        type=lambda v: _parse_field(v, CHAR3_FIELDS),
        default=None,
    )
    d3.set_defaults(fn=_demo_char3)

    rs = kinds.add_parser("randsuite", help="random certify+verify round trips")
    rs.add_argument("--count", type=int, default=100)
    rs.add_argument("--seed", type=int, default=None)
    rs.add_argument("--max-tries", dest="max_tries", type=int, default=None)
    rs.add_argument("--bound", type=int, default=None)
    rs.set_defaults(fn=_demo_randsuite)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
