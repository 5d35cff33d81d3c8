"""
Arithmetic Service

Centralized logic behind the mul, pow and table commands.
Single Responsibility: turns request texts into contexts and results.
"""

import logging
from typing import Dict, List, Optional, Tuple

from kronring.algebra import (
    STRATEGIES,
    ExtElement,
    ExtensionContext,
    element_from_poly,
    make_context,
    multiply,
    parse_polynomial,
    power_coordinates,
)
from kronring.core.exceptions import StrategyDisagreementError
from kronring.rings import Ring, parse_ring
from kronring.schemas import MulResult, PowResult, TableResult

logger = logging.getLogger(__name__)

_arithmetic_service: Optional["ArithmeticService"] = None


class ArithmeticService:
    """Builds extension contexts once per (ring, modulus) and reuses them."""

    def __init__(self):
        """Initialize arithmetic service."""
        self._contexts: Dict[Tuple[str, str], ExtensionContext] = {}

    def get_context(self, ring_selection: str, modulus_text: str) -> ExtensionContext:
        """Get or build the context for a ring selection and modulus text."""
        key = (ring_selection, modulus_text)
        if key in self._contexts:
            logger.debug(f"Reusing context for {key}")
            return self._contexts[key]

        ring = parse_ring(ring_selection)
        f = parse_polynomial(modulus_text, ring)
        ctx = make_context(ring, f)
        self._contexts[key] = ctx
        return ctx

    def element(self, ctx: ExtensionContext, text: str) -> ExtElement:
        """Parse an operand and reduce it into ctx."""
        return element_from_poly(ctx, parse_polynomial(text, ctx.ring))

    def mul(
        self,
        ring_selection: str,
        modulus_text: str,
        a_text: str,
        b_text: str,
        strategy: str,
        verify: bool = False,
    ) -> MulResult:
        """
        Multiply two operands in R[X]/(f).

        Raises:
            StrategyDisagreementError: If verify is set and strategies disagree
        """
        ctx = self.get_context(ring_selection, modulus_text)
        a = self.element(ctx, a_text)
        b = self.element(ctx, b_text)

        product = multiply(ctx, a, b, strategy)
        if verify:
            self._verify(ctx, a, b, strategy, product)
        return self._result(MulResult, ctx, ring_selection, product)

    def _verify(
        self,
        ctx: ExtensionContext,
        a: ExtElement,
        b: ExtElement,
        strategy: str,
        product: ExtElement,
    ) -> None:
        """Run every strategy and compare against the chosen one."""
        for name in STRATEGIES:
            other = multiply(ctx, a, b, name)
            if other != product:
                logger.debug(f"Strategy {name} disagrees with {strategy}")
                raise StrategyDisagreementError(
                    f"{name} gives {other!r} but {strategy} gives {product!r} "
                    f"for a={a!r}, b={b!r}"
                )
        logger.info(f"All {len(STRATEGIES)} strategies agree")

    def pow(self, ring_selection: str, modulus_text: str, exponent: int) -> PowResult:
        """Coordinates of xi^exponent."""
        ctx = self.get_context(ring_selection, modulus_text)
        element = power_coordinates(ctx, exponent)
        return self._result(PowResult, ctx, ring_selection, element, exponent=exponent)

    def table(self, ring_selection: str, modulus_text: str) -> TableResult:
        """The structure matrix M_f as rows of formatted entries."""
        ctx = self.get_context(ring_selection, modulus_text)
        ring = ctx.ring
        rows = [[ring.format(e) for e in row] for row in ctx.structure.matrix.rows]
        return TableResult(
            ring=ring_selection,
            modulus=_format_all(ring, ctx.modulus.inner.coefficients),
            block_size=ctx.n,
            rows=rows,
        )

    @staticmethod
    def _result(model, ctx: ExtensionContext, ring_selection: str, element, **extra):
        ring = ctx.ring
        return model(
            ring=ring_selection,
            modulus=_format_all(ring, ctx.modulus.inner.coefficients),
            coordinates=_format_all(ring, element.coords),
            **extra,
        )


def _format_all(ring: Ring, values) -> List[str]:
    return [ring.format(v) for v in values]


def get_arithmetic_service() -> ArithmeticService:
    """Get or create global arithmetic service."""
    global _arithmetic_service
    if _arithmetic_service is None:
        _arithmetic_service = ArithmeticService()
    return _arithmetic_service
