"""
Services Module

Business logic behind the CLI subcommands.
"""

from kronring.services.arithmetic import ArithmeticService, get_arithmetic_service
from kronring.services.benchmark import run_bench
from kronring.services.verification import run_check

__all__ = ["ArithmeticService", "get_arithmetic_service", "run_bench", "run_check"]
