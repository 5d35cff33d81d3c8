"""
Schemas Module

Pydantic models for CLI requests and results.
"""

from kronring.schemas.cli import (
    BenchReport,
    BenchRow,
    CheckReport,
    CliRequest,
    MulResult,
    PowResult,
    PropertyResult,
    TableResult,
)

__all__ = [
    "BenchReport",
    "BenchRow",
    "CheckReport",
    "CliRequest",
    "MulResult",
    "PowResult",
    "PropertyResult",
    "TableResult",
]
