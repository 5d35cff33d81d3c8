"""
Plain Formatter

Generates human-readable text from result models.
Single Responsibility: Only handles plain text formatting.
"""

from typing import List

from pydantic import BaseModel

from kronring.schemas import CheckReport, MulResult, PropertyResult, TableResult


class PlainFormatter:
    """Formats result models as plain text."""

    @staticmethod
    def format(result: BaseModel) -> str:
        """
        Format a result model as plain text.

        Args:
            result: MulResult / PowResult, TableResult or CheckReport

        Returns:
            Text without a trailing newline
        """
        if isinstance(result, TableResult):
            return PlainFormatter._format_table(result)
        if isinstance(result, CheckReport):
            return PlainFormatter._format_check(result)
        if isinstance(result, MulResult):
            return "[" + ", ".join(result.coordinates) + "]"
        raise TypeError(f"no plain format for {type(result).__name__}")

    @staticmethod
    def _format_table(result: TableResult) -> str:
        """One line per row, '|' between the n x n blocks."""
        n = result.block_size
        lines: List[str] = []
        for row in result.rows:
            blocks = [",".join(row[j : j + n]) for j in range(0, len(row), n)]
            lines.append("[" + "|".join(blocks) + "]")
        return "\n".join(lines)

    @staticmethod
    def _format_property(result: PropertyResult) -> str:
        status = "PASS" if result.passed else "FAIL"
        line = f"{status} {result.name} ring={result.ring}"
        if result.degree is not None:
            line += f" degree={result.degree}"
        line += f" cases={result.cases}"
        if result.counterexample:
            line += f" counterexample={result.counterexample}"
        return line

    @staticmethod
    def _format_check(report: CheckReport) -> str:
        lines = [PlainFormatter._format_property(r) for r in report.results]
        failed = len(report.failures)
        lines.append(
            f"SUMMARY seed={report.seed} properties={len(report.results)} "
            f"passed={len(report.results) - failed} failed={failed}"
        )
        return "\n".join(lines)


def format_as_plain(result: BaseModel) -> str:
    """Convenience function for plain text formatting."""
    return PlainFormatter.format(result)
