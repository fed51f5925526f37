"""
Command-line interface for idem2.

Every subcommand reads and writes JSON only. Exit codes: 0 success, 1 domain
error or failed check, 2 usage or parse error.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional

from decouple import config

from idem2.cli.commands import cmd_classify, cmd_construct, cmd_enumerate, cmd_selftest, cmd_verify
from idem2.config import DEFAULT_BUDGET, settings
from idem2.datamodel.model import ErrorDoc, GridConfig
from idem2.errors import Idem2Error, ParseError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']


def read_json(source: str) -> Any:
    """Read JSON from a file path or '-' for stdin"""
    if source == "-":
        text = sys.stdin.read()
        name = "<stdin>"
    else:
        path = Path(source)
        if not path.exists():
            raise ParseError(source, "input file not found")
        text = path.read_text()
        name = source
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{name}:{e.lineno}:{e.colno}", e.msg)


def emit(payload: Any) -> None:
    print(json.dumps(payload, indent=2))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idem2",
        description="Idempotents of 2x2 matrices over truncated power series with coefficients in Z_n",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Example usage:
  # Build the idempotent for a parameter set
  idem2 construct --input spec.json

  # Count all idempotents of M_2(Z_6[x]/x^2) and check them against brute force
  idem2 enumerate 6 --vars 1 --trunc 1 --with-oracle

  # Certify the built-in acceptance grid on 4 processes
  idem2 selftest --jobs 4

Environment variables (loaded from .env):
  IDEM2_BUDGET     - Oracle / enumeration budget (default: 10^8)
  IDEM2_JOBS       - Worker processes for selftest and the oracle (default: 1)
  IDEM2_LOG_LEVEL  - Log level for stderr logging (default: WARNING)
        """
    )
    parser.add_argument(
        '--log-level',
        type=str.upper,
        choices=LOG_LEVELS,
        default=config('IDEM2_LOG_LEVEL', default=settings.LOG_LEVEL),
        help='Log level for messages on stderr (default: WARNING)'
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p: argparse.ArgumentParser, what: str):
        p.add_argument('--input', default='-', metavar='FILE', help=f'{what} JSON file, or - for stdin (default: -)')

    def add_budget(p: argparse.ArgumentParser):
        p.add_argument(
            '--budget',
            type=int,
            default=None,
            help='Largest admissible search space (default: IDEM2_BUDGET or 10^8)'
        )

    def add_jobs(p: argparse.ArgumentParser):
        p.add_argument(
            '--jobs',
            type=int,
            default=config('IDEM2_JOBS', default=settings.JOBS, cast=int),
            help='Worker processes (default: 1)'
        )

    add_input(sub.add_parser('construct', help='Build the idempotent for a parameter spec'), 'Spec')
    add_input(sub.add_parser('verify', help='Check whether a matrix is idempotent'), 'Matrix')
    add_input(sub.add_parser('classify', help='Recover the canonical spec of an idempotent'), 'Matrix')

    p = sub.add_parser('enumerate', help='Enumerate all idempotents for a truncation window')
    p.add_argument('n', type=int, help='Modulus n > 1')
    p.add_argument('--vars', type=int, default=0, help='Number of variables (default: 0)')
    p.add_argument('--trunc', type=int, default=0, help='Total degree bound (default: 0)')
    p.add_argument('--with-oracle', action='store_true', help='Compare against brute-force enumeration')
    p.add_argument('--list', action='store_true', help='Include every idempotent with its spec')
    add_budget(p)
    add_jobs(p)

    p = sub.add_parser('selftest', help='Run the acceptance grid')
    p.add_argument('--grid', default=None, metavar='FILE', help='Grid configuration JSON (default: built-in grid)')
    add_budget(p)
    add_jobs(p)
    return parser


def resolve_budget(flag: Optional[int]) -> int:
    if flag is not None:
        return flag
    return config('IDEM2_BUDGET', default=DEFAULT_BUDGET, cast=int)


def run(args: argparse.Namespace) -> int:
    if args.command == 'construct':
        emit(cmd_construct(read_json(args.input)))
        return EXIT_OK
    if args.command == 'verify':
        emit(cmd_verify(read_json(args.input)))
        return EXIT_OK
    if args.command == 'classify':
        emit(cmd_classify(read_json(args.input)))
        return EXIT_OK
    if args.command == 'enumerate':
        if args.vars < 0 or args.trunc < 0:
            raise ParseError("--vars/--trunc", "must be non-negative")
        result, passed = cmd_enumerate(
            args.n, args.vars, args.trunc, args.with_oracle, resolve_budget(args.budget),
            jobs=args.jobs, list_items=args.list,
        )
        emit(result)
        return EXIT_OK if passed else EXIT_DOMAIN

    # selftest
    if args.grid:
        try:
            grid = GridConfig.from_json_file(args.grid)
        except FileNotFoundError:
            raise ParseError(args.grid, "grid file not found")
        except (ValueError, TypeError) as e:
            raise ParseError(args.grid, str(e))
        budget = args.budget
    else:
        grid = GridConfig.default(resolve_budget(args.budget))
        budget = None
    result, passed = cmd_selftest(grid, jobs=args.jobs, budget=budget)
    emit(result)
    return EXIT_OK if passed else EXIT_DOMAIN


def main(argv: Optional[list[str]] = None) -> int:
    """Main entry point for the idem2 CLI"""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    try:
        return run(args)
    except ParseError as e:
        logger.error(f"Parse error: {e}")
        emit(ErrorDoc(kind=e.kind, detail=e.detail).model_dump())
        return EXIT_USAGE
    except Idem2Error as e:
        logger.error(f"{e.kind}: {e.detail}")
        emit(ErrorDoc(kind=e.kind, detail=e.detail).model_dump())
        return EXIT_DOMAIN
