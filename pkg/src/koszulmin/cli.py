"""Command line: transfer, check, sod.

Thin client over the in-process handlers.  Exit codes: 0 all pass, 1 a
check failed, 2 input error, 3 internal invariant violation.  Output goes
to stdout or --out, as canonical JSON or as text.
"""

from __future__ import annotations

import argparse
import sys

from .api import (
    EXIT_CHECK_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL,
    EXIT_OK,
    InternalInvariantError,
    RunConfig,
    run_check,
    run_sod,
    run_transfer,
)
from .poly import PotentialParseError
from .serialize import (
    canonical_dumps,
    mu_table_json,
    mu_table_text,
    report_text,
    sod_text,
)


def _add_run_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--vars", type=int, required=True, help="number of variables n")
    sub.add_argument("--degree", type=int, required=True, help="potential degree d")
    sub.add_argument("--potential", required=True, help='e.g. "x1^3 + x2^3"')
    sub.add_argument("--max-k", type=int, default=None, help="largest arity (default d)")
    sub.add_argument("--m-cap", type=int, default=4, help="perturbation-count cap (d = 2)")
    sub.add_argument("--theta-cap", type=int, default=1, help="input wedge-degree cap")
    sub.add_argument("--parallelism", type=int, default=None, help="worker count")


def _add_out_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--out", default=None, help="write here instead of stdout")
    sub.add_argument("--format", choices=("json", "text"), default="json")


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="koszulmin",
        description="exact transferred products, verification suites, "
        "and decomposition numerology",
    )
    subs = top.add_subparsers(dest="command", required=True)

    tr = subs.add_parser("transfer", help="compute the product table")
    _add_run_flags(tr)
    _add_out_flags(tr)

    ck = subs.add_parser("check", help="run a verification suite")
    _add_run_flags(ck)
    _add_out_flags(ck)
    ck.add_argument(
        "--suite",
        choices=("side", "factorization", "mu", "stasheff", "all"),
        default="all",
    )
    ck.add_argument("--max-relation", type=int, default=4)
    ck.add_argument("--sym-bound", type=int, default=None)
    ck.add_argument("--f-bound", type=int, default=3)

    sod = subs.add_parser("sod", help="decomposition numerology")
    sod_subs = sod.add_subparsers(dest="calculator", required=True)
    orlov = sod_subs.add_parser("orlov")
    orlov.add_argument("--dim", type=int, required=True)
    orlov.add_argument("--degree", type=int, required=True)
    _add_out_flags(orlov)
    relative = sod_subs.add_parser("relative")
    relative.add_argument("--rank", type=int, required=True)
    relative.add_argument("--degrees", required=True, help='comma separated, e.g. "2,2"')
    _add_out_flags(relative)
    lefschetz = sod_subs.add_parser("lefschetz")
    lefschetz.add_argument("--rank", type=int, required=True)
    lefschetz.add_argument("--degree", type=int, required=True)
    _add_out_flags(lefschetz)
    veronese = sod_subs.add_parser("veronese")
    veronese.add_argument("--rank", type=int, required=True)
    veronese.add_argument("--degree", type=int, required=True)
    veronese.add_argument("--codim", type=int, required=True)
    _add_out_flags(veronese)
    return top


def _emit(payload: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _config(args: argparse.Namespace) -> RunConfig:
    kwargs = dict(
        n=args.vars,
        d=args.degree,
        potential=args.potential,
        max_k=args.max_k,
        m_cap=args.m_cap,
        theta_cap=args.theta_cap,
        parallelism=args.parallelism,
    )
    if getattr(args, "suite", None) is not None:
        kwargs.update(
            max_relation=args.max_relation,
            sym_bound=args.sym_bound,
            f_bound=args.f_bound,
        )
    return RunConfig(**kwargs)


def _cmd_transfer(args: argparse.Namespace) -> int:
    try:
        table = run_transfer(_config(args))
    except (PotentialParseError, ValueError) as e:
        sys.stderr.write(f"input error: {e}\n")
        return EXIT_INPUT_ERROR
    except InternalInvariantError as e:
        sys.stderr.write(f"internal invariant violation: {e.report}\n")
        return EXIT_INTERNAL
    if args.format == "json":
        _emit(canonical_dumps(mu_table_json(table)), args.out)
    else:
        _emit(mu_table_text(table), args.out)
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    try:
        code, reports = run_check(_config(args), args.suite)
    except (PotentialParseError, ValueError) as e:
        sys.stderr.write(f"input error: {e}\n")
        return EXIT_INPUT_ERROR
    if args.format == "json":
        _emit(canonical_dumps(reports), args.out)
    else:
        _emit(report_text(reports), args.out)
    return code


def _cmd_sod(args: argparse.Namespace) -> int:
    params: dict = {}
    if args.calculator == "orlov":
        params = {"dim": args.dim, "degree": args.degree}
    elif args.calculator == "relative":
        try:
            degrees = [int(x) for x in args.degrees.split(",") if x.strip()]
        except ValueError:
            sys.stderr.write(f"input error: bad degree list {args.degrees!r}\n")
            return EXIT_INPUT_ERROR
        params = {"rank": args.rank, "degrees": degrees}
    elif args.calculator == "lefschetz":
        params = {"rank": args.rank, "degree": args.degree}
    elif args.calculator == "veronese":
        params = {"rank": args.rank, "degree": args.degree, "codim": args.codim}
    try:
        desc = run_sod(args.calculator, params)
    except ValueError as e:
        sys.stderr.write(f"input error: {e}\n")
        return EXIT_INPUT_ERROR
    if args.format == "json":
        _emit(canonical_dumps(desc), args.out)
    else:
        _emit(sod_text(desc), args.out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "transfer":
        return _cmd_transfer(args)
    if args.command == "check":
        return _cmd_check(args)
    return _cmd_sod(args)


if __name__ == "__main__":
    sys.exit(main())
