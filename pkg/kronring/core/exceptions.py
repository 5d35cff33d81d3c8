"""
Exceptions

Error hierarchy shared by the kernel, the services and the CLI.
UsageError derives from ValueError so callers can treat every caller
mistake the same way.
"""

from typing import Optional


class KronringError(Exception):
    """Base class for all kronring errors."""


class UsageError(KronringError, ValueError):
    """The caller passed inputs the operation does not accept."""


class RingMismatchError(UsageError):
    """Operands belong to different coefficient rings."""


class ShapeMismatchError(UsageError):
    """Vector lengths or matrix shapes are not conformable."""


class ContextMismatchError(UsageError):
    """Elements belong to different extension contexts."""


class InvalidModulusError(UsageError):
    """The modulus is not monic or has degree 0."""


class UnknownStrategyError(UsageError):
    """No multiplication strategy is registered under the given name."""


class DegreeTooLargeError(UsageError):
    """A polynomial exceeds the degree bound of the operation."""


class PolynomialSyntaxError(UsageError):
    """Malformed polynomial or ring text, with the offending offset."""

    def __init__(self, message: str, offset: Optional[int] = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} at offset {offset}"
        super().__init__(message)


class CoefficientLiteralError(PolynomialSyntaxError):
    """A coefficient literal is not valid for the selected ring."""


class PreconditionViolation(KronringError):
    """An operation's documented precondition does not hold (e.g. f(xi) != 0)."""


class StrategyDisagreementError(KronringError):
    """Two multiplication strategies produced different results."""


class ChecksumMismatchError(StrategyDisagreementError):
    """Benchmark checksums differ across strategies at the same degree."""
