"""Command-line interface: ``ggbij {count,list,map,verify}``.

Exit codes: 0 success, 1 verification failure or membership violation,
2 usage error (bad flags, malformed input, parameters over the safety cap).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bijection import ConsistencyError, MembershipError, forward_g, inverse_h, verify_bijection
from .families import (
    FamilyId,
    count_A,
    count_B,
    count_C,
    count_G,
    count_S,
    iter_G,
    iter_S,
)
from .partitions import Partition, PartitionError, SignedPartition, dumps
from .qseries import verify_identity

DEFAULT_N_CAP = 200
DEFAULT_ORDER_CAP = 500

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _nonneg(name: str, value: int | None, cap: int | None = None) -> int:
    if value is None:
        raise UsageError(f"--{name} is required")
    if value < 0:
        raise UsageError(f"--{name} must be nonnegative, got {value}")
    if cap is not None and value > cap:
        raise UsageError(f"--{name}={value} exceeds the safety cap {cap}")
    return value


def _env_n_cap() -> int:
    raw = os.environ.get("GG_MAX_N")
    if raw is None:
        return DEFAULT_N_CAP
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"GG_MAX_N must be an integer, got {raw!r}") from None


def _emit(line: str) -> None:
    sys.stdout.write(line + "\n")


def cmd_count(args) -> int:
    family = FamilyId(args.family)
    n = _nonneg("n", args.n, args.n_cap)
    if family.needs_length:
        j = _nonneg("j", args.j)
        k = count_G(n, j) if family is FamilyId.G else count_S(n, j)
    else:
        if args.j is not None:
            raise UsageError(f"--j is not accepted for family {family.value}")
        k = {FamilyId.A: count_A, FamilyId.B: count_B, FamilyId.C: count_C}[family](n)
    _emit(json.dumps({"count": k}) if args.format == "json" else str(k))
    return EXIT_OK


def cmd_list(args) -> int:
    n = _nonneg("n", args.n, args.n_cap)
    j = _nonneg("j", args.j)
    items = iter_G(n, j) if args.family == "G" else iter_S(n, j)
    for item in items:
        _emit(dumps(item) if args.format == "json" else str(item))
    return EXIT_OK


def _read_input(args) -> object:
    try:
        raw = args.input if args.input is not None else sys.stdin.read()
        return json.loads(raw)
    except UnicodeDecodeError:
        raise UsageError("input is not valid UTF-8") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"input is not valid JSON: {exc}") from None


def cmd_map(args) -> int:
    j = _nonneg("j", args.j)
    obj = _read_input(args)
    try:
        source = Partition.from_json(obj) if args.direction == "g" else SignedPartition.from_json(obj)
    except PartitionError as exc:
        raise UsageError(str(exc)) from None
    try:
        image = forward_g(source, j) if args.direction == "g" else inverse_h(source, j)
    except (MembershipError, ConsistencyError) as exc:
        print(f"ggbij: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(dumps(image) if args.format == "json" else str(image))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.target == "bijection":
        bound = _nonneg("max-n", args.max_n, args.n_cap)
        report = verify_bijection(bound, workers=max(args.workers, 1))
        if args.format == "json":
            _emit(report.dumps())
        else:
            status = "OK" if report.ok else f"FAILED ({len(report.failures)} failures)"
            _emit(f"bijection n_max={bound}: {status}; {report.checked} checks over {report.cells} cells")
            if not report.ok:
                f = report.failures[0]
                _emit(f"first counterexample: n={f.n} j={f.j} input={f.input} stage={f.stage}: {f.detail}")
    else:
        bound = _nonneg("order", args.order, args.order_cap)
        report = verify_identity(bound)
        if args.format == "json":
            _emit(report.dumps())
        else:
            if report.ok:
                _emit(f"identity order={bound}: OK; all four expansions agree through q^{bound}")
            else:
                _emit(f"identity order={bound}: FAILED at q^{report.first_mismatch}: {report.values}")
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="ggbij",
        description="Göllnitz-Gordon partitions, their signed counterparts, and the bijection between them.",
    )
    parser.add_argument("--format", choices=("text", "json"), default=None,
                        help="output format (default: text for count/verify, json for list/map)")
    parser.add_argument("--n-cap", type=int, default=None,
                        help=f"largest accepted n / max-n (default {DEFAULT_N_CAP}, or $GG_MAX_N)")
    parser.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP,
                        help=f"largest accepted series order (default {DEFAULT_ORDER_CAP})")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("count", parents=[fmt], help="count a family")
    p.add_argument("--family", required=True, choices=[f.value for f in FamilyId])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int)
    p.set_defaults(func=cmd_count, default_format="text")

    p = sub.add_parser("list", parents=[fmt], help="enumerate G(n, j) or S(n, j)")
    p.add_argument("--family", required=True, choices=("G", "S"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(func=cmd_list, default_format="json")

    p = sub.add_parser("map", parents=[fmt], help="apply g (G -> S) or its inverse h (S -> G)")
    p.add_argument("--direction", required=True, choices=("g", "h"))
    p.add_argument("--j", type=int, required=True)
    p.add_argument("input", nargs="?", help="JSON-encoded partition; read from stdin if omitted")
    p.set_defaults(func=cmd_map, default_format="json")

    p = sub.add_parser("verify", parents=[fmt], help="exhaustive bijection or series check")
    p.add_argument("--target", required=True, choices=("bijection", "identity"))
    p.add_argument("--max-n", type=int)
    p.add_argument("--order", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify, default_format="text")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format is None:
        args.format = args.default_format
    try:
        if args.n_cap is None:
            args.n_cap = _env_n_cap()
        return args.func(args)
    except UsageError as exc:
        print(f"ggbij: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
