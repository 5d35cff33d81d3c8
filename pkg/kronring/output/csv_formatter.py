"""
CSV Formatter

Generates the benchmark CSV.
Single Responsibility: Only handles CSV formatting.
"""

import csv
import io

from kronring.schemas import BenchReport

BENCH_COLUMNS = ["degree", "strategy", "setup_ns", "per_product_ns", "reps", "checksum"]


class CsvFormatter:
    """Formats benchmark reports as CSV."""

    @staticmethod
    def format(report: BenchReport) -> str:
        """
        Format a benchmark report as CSV with a header row.

        Args:
            report: Benchmark report

        Returns:
            CSV text with columns degree,strategy,setup_ns,per_product_ns,reps,checksum
        """
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=BENCH_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in report.rows:
            writer.writerow(row.model_dump(include=set(BENCH_COLUMNS)))
        return buffer.getvalue()


def format_as_csv(report: BenchReport) -> str:
    """Convenience function for CSV formatting."""
    return CsvFormatter.format(report)
