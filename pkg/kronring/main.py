"""
Command Line Entry Point

Main entry point for the kronring CLI.

Exit codes: 0 success, 1 property failure, 2 usage or parse error,
3 strategy disagreement (a correctness bug outranks everything else).
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

from kronring.core.config import settings
from kronring.core.exceptions import KronringError, StrategyDisagreementError, UsageError
from kronring.core.logging import setup_logging
from kronring.output import format_as_csv, format_as_json, format_as_plain
from kronring.schemas import CliRequest
from kronring.services import get_arithmetic_service, run_bench, run_check

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_DISAGREEMENT = 3

STRATEGY_CHOICES = ["naive", "kronecker", "regular", "representation"]
RING_HELP = "rational | mod:<m> | mat:<k>:<base>"

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["plain", "json"], default=settings.DEFAULT_OUTPUT)
    common.add_argument("--log-level", default=settings.LOG_LEVEL, help="Logging level")

    with_modulus = argparse.ArgumentParser(add_help=False, parents=[common])
    with_modulus.add_argument("--ring", default="rational", help=RING_HELP)
    with_modulus.add_argument("--modulus", required=True, help="Monic modulus, e.g. 'x^2+1'")

    parser = argparse.ArgumentParser(
        prog=settings.APP_NAME,
        description="Exact multiplication in simple integral extensions R[X]/(f)",
    )
    parser.add_argument("--version", action="version", version=settings.VERSION)
    commands = parser.add_subparsers(dest="subcommand", required=True)

    mul = commands.add_parser("mul", parents=[with_modulus], help="Multiply two elements")
    mul.add_argument("a", help="First operand (polynomial text)")
    mul.add_argument("b", help="Second operand (polynomial text)")
    mul.add_argument("--strategy", choices=STRATEGY_CHOICES, default=settings.DEFAULT_STRATEGY)
    mul.add_argument("--verify", action="store_true", help="Run and compare every strategy")

    pow_ = commands.add_parser("pow", parents=[with_modulus], help="Coordinates of xi^k")
    pow_.add_argument("exponent", type=int, help="Exponent k >= 0")

    commands.add_parser("table", parents=[with_modulus], help="Print the structure matrix")

    check = commands.add_parser("check", parents=[common], help="Run the property suite")
    check.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    check.add_argument("--max-degree", type=int, default=settings.CHECK_MAX_DEGREE)
    check.add_argument("--trials", type=int, default=settings.CHECK_MODULI_PER_DEGREE)
    check.add_argument("--pairs", type=int, default=settings.CHECK_PAIRS_PER_MODULUS)

    bench = commands.add_parser("bench", parents=[common], help="Benchmark the strategies")
    bench.add_argument("--ring", default=settings.BENCH_RING, help=RING_HELP)
    bench.add_argument("--degrees", default=",".join(map(str, settings.BENCH_DEGREES)))
    bench.add_argument("--reps", type=int, default=settings.BENCH_REPS)
    bench.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    bench.add_argument(
        "--strategy",
        dest="strategies",
        action="append",
        choices=STRATEGY_CHOICES,
        help="Strategy to include (repeatable; default all)",
    )
    return parser


def _request(args: argparse.Namespace) -> CliRequest:
    fields = {k: v for k, v in vars(args).items() if v is not None and k != "log_level"}
    if "a" in fields:
        fields["operands"] = [fields.pop("a"), fields.pop("b")]
    return CliRequest(**fields)


def _emit(text: str) -> None:
    sys.stdout.write(text.rstrip("\n") + "\n")


def run_mul(request: CliRequest) -> int:
    a_text, b_text = request.operands
    result = get_arithmetic_service().mul(
        request.ring, request.modulus, a_text, b_text, request.strategy, request.verify
    )
    _emit(format_as_json(result) if request.output == "json" else format_as_plain(result))
    return EXIT_OK


def run_pow(request: CliRequest) -> int:
    result = get_arithmetic_service().pow(request.ring, request.modulus, request.exponent)
    _emit(format_as_json(result) if request.output == "json" else format_as_plain(result))
    return EXIT_OK


def run_table(request: CliRequest) -> int:
    result = get_arithmetic_service().table(request.ring, request.modulus)
    _emit(format_as_json(result) if request.output == "json" else format_as_plain(result))
    return EXIT_OK


def run_check_command(request: CliRequest) -> int:
    report = run_check(request.seed, request.max_degree, request.trials, request.pairs)
    _emit(format_as_json(report) if request.output == "json" else format_as_plain(report))
    return EXIT_OK if report.passed else EXIT_FAILURE


def run_bench_command(request: CliRequest) -> int:
    report = run_bench(
        request.ring, request.degrees, request.reps, request.seed, request.strategies
    )
    _emit(format_as_json(report) if request.output == "json" else format_as_csv(report))
    return EXIT_OK


COMMANDS: Dict[str, Callable[[CliRequest], int]] = {
    "mul": run_mul,
    "pow": run_pow,
    "table": run_table,
    "check": run_check_command,
    "bench": run_bench_command,
}


def _fail(message: str, code: int) -> int:
    """One line on stderr; details only at DEBUG."""
    print(f"error: {message}", file=sys.stderr)
    logger.debug(f"Exiting with code {code}: {message}")
    return code


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, dispatch, and map errors to exit codes."""
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)

    try:
        request = _request(args)
        return COMMANDS[request.subcommand](request)
    except ValidationError as e:
        return _fail("; ".join(err["msg"] for err in e.errors()), EXIT_USAGE)
    except UsageError as e:
        return _fail(str(e), EXIT_USAGE)
    except StrategyDisagreementError as e:
        return _fail(str(e), EXIT_DISAGREEMENT)
    except KronringError as e:
        logger.debug("Command failed", exc_info=True)
        return _fail(str(e), EXIT_FAILURE)


if __name__ == "__main__":
    sys.exit(main())
