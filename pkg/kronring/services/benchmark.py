"""
Benchmark Service

Times the multiplication strategies against each other. Timings cover the
multiply call only; every strategy at a degree sees the same seeded modulus
and operand pairs, and a SHA-256 checksum of its outputs must match the
others before the numbers are reported.
"""

import hashlib
import logging
import random
import time
from typing import Dict, List, Optional, Sequence

from kronring.algebra import STRATEGIES, make_context
from kronring.algebra.extension import get_strategy
from kronring.algebra.sampling import random_element, random_monic
from kronring.core.exceptions import ChecksumMismatchError
from kronring.rings import parse_ring
from kronring.schemas import BenchReport, BenchRow

logger = logging.getLogger(__name__)


def _degree_seed(seed: int, degree: int) -> int:
    return seed * 1_000_003 + degree


def run_bench(
    ring_selection: str,
    degrees: Sequence[int],
    reps: int,
    seed: int,
    strategies: Optional[Sequence[str]] = None,
) -> BenchReport:
    """
    Benchmark the strategies over a list of degrees.

    Args:
        ring_selection: Coefficient ring, e.g. "mod:2305843009213693951"
        degrees: Modulus degrees, each >= 1
        reps: Products timed per (degree, strategy)
        seed: Seed for moduli and operands
        strategies: Subset of strategy names (default: all registered)

    Returns:
        BenchReport with one row per (degree, strategy)

    Raises:
        ChecksumMismatchError: If two strategies disagree at some degree
    """
    ring = parse_ring(ring_selection)
    names: List[str] = [name.lower() for name in (strategies or STRATEGIES)]
    functions = {name: get_strategy(name) for name in names}
    report = BenchReport(ring=ring_selection, seed=seed)

    for degree in degrees:
        rng = random.Random(_degree_seed(seed, degree))
        f = random_monic(ring, degree, rng)

        start = time.perf_counter_ns()
        ctx = make_context(ring, f)
        setup_ns = time.perf_counter_ns() - start

        operands = [(random_element(ctx, rng), random_element(ctx, rng)) for _ in range(reps)]
        checksums: Dict[str, str] = {}

        for name, multiply in functions.items():
            digest = hashlib.sha256()
            elapsed = 0
            for a, b in operands:
                start = time.perf_counter_ns()
                product = multiply(ctx, a, b)
                elapsed += time.perf_counter_ns() - start
                digest.update(",".join(ring.format(c) for c in product.coords).encode())
                digest.update(b";")

            checksum = digest.hexdigest()[:16]
            checksums[name] = checksum
            report.rows.append(
                BenchRow(
                    degree=degree,
                    strategy=name,
                    setup_ns=setup_ns,
                    per_product_ns=elapsed // reps,
                    reps=reps,
                    checksum=checksum,
                )
            )
            logger.info(
                f"degree={degree} strategy={name} per_product_ns={elapsed // reps}"
            )

        if len(set(checksums.values())) > 1:
            logger.debug(f"Checksum mismatch at degree {degree}: {checksums}")
            raise ChecksumMismatchError(
                f"strategies disagree at degree {degree}: "
                + ", ".join(f"{name}={value}" for name, value in checksums.items())
            )

    return report
