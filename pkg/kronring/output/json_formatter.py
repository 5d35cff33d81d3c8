"""
JSON Formatter

Generates JSON output from result models.
Single Responsibility: Only handles JSON formatting.
"""

import json

from pydantic import BaseModel


class JsonFormatter:
    """Formats result models as JSON documents."""

    @staticmethod
    def format(result: BaseModel, indent: int = 0) -> str:
        """
        Format a result model as JSON.

        Ring values are already strings in every result model, so no
        floating-point numbers can appear in the output.

        Args:
            result: Any result schema
            indent: Pretty-print indentation (0 for a single line)

        Returns:
            JSON string
        """
        return json.dumps(result.model_dump(), indent=indent or None)


def format_as_json(result: BaseModel) -> str:
    """Convenience function for JSON formatting."""
    return JsonFormatter.format(result)
