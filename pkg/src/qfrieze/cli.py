"""Command-line interface: ``qfrieze {frieze,mutate,continuant,variables,verify}``."""

from __future__ import annotations

import argparse
import asyncio
import logging
import sys
from collections.abc import Callable, Sequence

from .const import ALL_CHECKS, DEFAULT_FORMAT, OUTPUT_FORMATS
from .continuant import ContinuantTable
from .exceptions import QFriezeError
from .formatting import (
    continuant_payload,
    continuant_text,
    dump_json,
    frieze_payload,
    frieze_text,
    report_text,
    seed_payload,
    seed_text,
    variables_payload,
    variables_text,
)
from .frieze import cluster_variables, default_window, frieze_of_variables
from .seed import initial_seed, mutate_sequence
from .suite import run_suite

_LOGGER = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, argparse.ArgumentParser], int]


def even_rank(text: str) -> int:
    """Argparse type for --n."""
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if n < 2:
        raise argparse.ArgumentTypeError(f"n must be at least 2, got {n}")
    if n % 2:
        raise argparse.ArgumentTypeError(f"n must be even, got {n}")
    return n


def direction_list(text: str) -> tuple[int, ...]:
    """Argparse type for --seq: comma-separated integers, possibly empty."""
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid direction list {text!r}") from None


def check_list(text: str) -> tuple[str, ...]:
    """Argparse type for --checks."""
    names = tuple(part.strip() for part in text.split(",") if part.strip())
    unknown = [name for name in names if name not in ALL_CHECKS]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown check {unknown[0]!r} (choose from {', '.join(ALL_CHECKS)})"
        )
    return names


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def cmd_frieze(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    default_min, default_max = default_window(args.n)
    j_min = default_min if args.jmin is None else args.jmin
    j_max = default_max if args.jmax is None else args.jmax
    if j_min > 0:
        parser.error(f"argument --jmin: must be <= 0, got {j_min}")
    if j_max < 0:
        parser.error(f"argument --jmax: must be >= 0, got {j_max}")
    grid = frieze_of_variables(args.n, j_min, j_max)
    _emit(dump_json(frieze_payload(grid)) if args.format == "json" else frieze_text(grid))
    return 0


def cmd_mutate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    for k in args.seq:
        if not 1 <= k <= args.n:
            parser.error(f"argument --seq: direction {k} out of range 1..{args.n}")
    seed = mutate_sequence(initial_seed(args.n), args.seq)
    _emit(dump_json(seed_payload(seed)) if args.format == "json" else seed_text(seed))
    return 0


def cmd_continuant(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    table = ContinuantTable(args.n)
    if not table.is_legal(args.m, args.i):
        parser.error(
            f"argument --m/--i: P({args.m},{args.i}) is undefined for n = {args.n}"
        )
    value = table.get(args.m, args.i)
    if args.format == "json":
        _emit(dump_json(continuant_payload(args.n, args.m, args.i, value)))
    else:
        _emit(continuant_text(args.m, args.i, value))
    return 0


def cmd_variables(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    values = cluster_variables(args.n)
    if args.format == "json":
        _emit(dump_json(variables_payload(args.n, values)))
    else:
        _emit(variables_text(values))
    return 0


def cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    report = asyncio.run(run_suite(args.n, args.checks))
    _emit(report_text(report) if args.format == "text" else dump_json(report))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfrieze",
        description="Quantum friezes and quantum cluster variables of type A_n.",
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="debug logging on stderr"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n", type=even_rank, required=True, help="even rank n >= 2")
        p.set_defaults(handler=handler)
        return p

    def formats(p: argparse.ArgumentParser, default: str = DEFAULT_FORMAT) -> None:
        p.add_argument("--format", choices=OUTPUT_FORMATS, default=default)

    p = command("frieze", cmd_frieze, "quantum frieze of variables on a window")
    p.add_argument("--jmin", type=int, default=None)
    p.add_argument("--jmax", type=int, default=None)
    formats(p)

    p = command("mutate", cmd_mutate, "mutate the initial seed")
    p.add_argument("--seq", type=direction_list, default=(), help="e.g. 1,2,3")
    formats(p)

    p = command("continuant", cmd_continuant, "continuant P(m,i)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    formats(p)

    p = command("variables", cmd_variables, "cluster variables on the fundamental domain")
    formats(p)

    p = command("verify", cmd_verify, "run the verification suite")
    p.add_argument("--checks", type=check_list, default=None, help="comma list")
    formats(p, default="json")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(
            level=logging.DEBUG if args.verbose else logging.WARNING,
            format="%(levelname)s %(name)s: %(message)s",
            stream=sys.stderr,
        )
        handler: Handler = args.handler
        return handler(args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    except QFriezeError as err:
        _LOGGER.error("%s: %s", type(err).__name__, err)
        return 1
