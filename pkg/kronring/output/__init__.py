"""
Output Module

Formatters for plain text, JSON and CSV results.
"""

from kronring.output.csv_formatter import CsvFormatter, format_as_csv
from kronring.output.json_formatter import JsonFormatter, format_as_json
from kronring.output.plain_formatter import PlainFormatter, format_as_plain

__all__ = [
    "format_as_csv",
    "format_as_json",
    "format_as_plain",
    "CsvFormatter",
    "JsonFormatter",
    "PlainFormatter",
]
