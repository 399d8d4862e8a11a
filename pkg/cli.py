"""
Command-line entry point: ``plc-toolkit <command> ...``.

Exit status is 0 on success or a "yes" answer, 1 on a "no" answer (and on
``equiv`` reporting false), and 2 on any error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

import commands
from commands import EXIT_ERROR, CommandResult
from errors import InfeasibleSpecError, PlcToolkitError
from formats import InstancePayload, parse_instance
from generators import GeneratorKind, GeneratorSpec
from order_types import CatalogMode

logger = logging.getLogger("plc_toolkit")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load(path: str, kind: str = "plc") -> InstancePayload:
    return parse_instance(kind, _read(path)).payload


def _mode(args: argparse.Namespace) -> CatalogMode:
    return CatalogMode.ORDERED if args.ordered else CatalogMode.CANONICAL


def _cmd_solve(args: argparse.Namespace) -> CommandResult:
    return commands.solve_command(_load(args.file), args.k)


def _cmd_kernelize(args: argparse.Namespace) -> CommandResult:
    return commands.kernelize_command(_load(args.file), set_cover=args.set_cover, table=args.table)


def _cmd_dualize(args: argparse.Namespace) -> CommandResult:
    return commands.dualize_command(_load(args.file, "lpc"))


def _cmd_reduce_vc(args: argparse.Namespace) -> CommandResult:
    return commands.reduce_vc_command(_load(args.file, "graph"), args.seed, args.to)


def _cmd_ordertype(args: argparse.Namespace) -> CommandResult:
    return commands.ordertype_command(_load(args.file))


def _cmd_canon(args: argparse.Namespace) -> CommandResult:
    return commands.canon_command(_load(args.file))


def _cmd_equiv(args: argparse.Namespace) -> CommandResult:
    return commands.equiv_command(_load(args.first), _load(args.second))


def _cmd_enumerate(args: argparse.Namespace) -> CommandResult:
    return commands.enumerate_command(args.n, args.grid, _mode(args), table=args.table)


def _cmd_protocol(args: argparse.Namespace) -> CommandResult:
    catalog_text = _read(args.catalog) if args.catalog else None
    return commands.protocol_command(
        _load(args.file),
        args.grid,
        mode=_mode(args),
        kernelize_first=args.kernelize_first,
        catalog_text=catalog_text,
        table=args.table,
    )


def _cmd_gen(args: argparse.Namespace) -> CommandResult:
    kind = GeneratorKind(args.kind)
    if kind != GeneratorKind.GRID and args.seed is None:
        raise InfeasibleSpecError(f"gen {kind.value} needs --seed")
    spec = GeneratorSpec(
        kind=kind,
        n=args.n,
        k=args.k,
        g=args.g,
        seed=args.seed or 0,
        rows=args.rows,
        cols=args.cols,
    )
    return commands.generate_command(spec)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plc-toolkit",
        description="Exact Point Line Cover kernels, solvers, reductions, order types and protocol simulation.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log progress to stderr (-vv for debug)")
    parser.add_argument("-o", "--output", help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("solve", help="decide a plc instance and print a witness cover")
    p.add_argument("file", help="plc file, or - for stdin")
    p.add_argument("--k", type=int, default=None, help="override the parameter in the file")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("kernelize", help="apply the reduction rules and print the kernel")
    p.add_argument("file")
    p.add_argument("--set-cover", action="store_true", help="also report the kernel's Set Cover encoding size")
    p.add_argument("--table", action="store_true", help="print a table of mandatory lines instead of the kernel file")
    p.set_defaults(handler=_cmd_kernelize)

    p = sub.add_parser("dualize", help="turn an lpc file into the equivalent plc file")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_dualize)

    p = sub.add_parser("reduce-vc", help="reduce a vertex cover graph file to lpc or plc")
    p.add_argument("file")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--to", choices=["lpc", "plc"], default="plc")
    p.set_defaults(handler=_cmd_reduce_vc)

    p = sub.add_parser("ordertype", help="print the order type of the points in file order")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_ordertype)

    p = sub.add_parser("canon", help="print the canonical order type")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_canon)

    p = sub.add_parser("equiv", help="test two point files for combinatorial equivalence")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=_cmd_equiv)

    p = sub.add_parser("enumerate", help="build the order type catalog of a grid")
    p.add_argument("n", type=int)
    p.add_argument("grid", type=int)
    p.add_argument("--ordered", action="store_true", help="keep every ordering instead of one entry per class")
    p.add_argument("--table", action="store_true", help="print a table instead of a catalog file")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("protocol", help="simulate the order type binary search protocol")
    p.add_argument("file")
    p.add_argument("--grid", type=int, required=True)
    p.add_argument("--ordered", action="store_true")
    p.add_argument("--kernelize-first", action="store_true", help="kernelize before communicating")
    p.add_argument("--catalog", help="catalog file written by enumerate")
    p.add_argument("--table", action="store_true", help="print a table instead of the transcript")
    p.set_defaults(handler=_cmd_protocol)

    p = sub.add_parser("gen", help="generate a plc instance")
    p.add_argument("kind", choices=[kind.value for kind in GeneratorKind])
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--g", type=int, default=2)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--rows", type=int, default=None)
    p.add_argument("--cols", type=int, default=None)
    p.set_defaults(handler=_cmd_gen)

    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    try:
        result = args.handler(args)
    except PlcToolkitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR

    if args.output:
        Path(args.output).write_text(result.text, encoding="utf-8")
    else:
        sys.stdout.write(result.text)
    return result.status


def run() -> None:
    """Entry point for console script."""
    sys.exit(main())


if __name__ == "__main__":
    run()
