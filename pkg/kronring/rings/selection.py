"""
Ring Selection

Parses the ring selection strings used on the command line:
  rational | mod:<m> | mat:<k>:<base>
"""

import logging
from functools import lru_cache

from kronring.core.exceptions import UsageError
from kronring.rings.base import Ring
from kronring.rings.matrix import MatrixRing
from kronring.rings.modular import ModularRing
from kronring.rings.rational import RationalRing

logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def parse_ring(selection: str) -> Ring:
    """
    Build a ring descriptor from its selection string.

    Args:
        selection: e.g. "rational", "mod:7", "mat:3:mod:5"

    Returns:
        The matching Ring descriptor

    Raises:
        UsageError: If the selection is malformed or violates a ring invariant
    """
    text = selection.strip().lower()
    if text in ("rational", "q"):
        return RationalRing()

    head, _, rest = text.partition(":")
    if head == "mod":
        if not rest.isdigit():
            raise UsageError(f"invalid modular ring selection {selection!r}")
        return ModularRing(int(rest))
    if head == "mat":
        size, _, base = rest.partition(":")
        if not size.isdigit() or not base:
            raise UsageError(f"invalid matrix ring selection {selection!r}")
        base_ring = parse_ring(base)
        if isinstance(base_ring, MatrixRing):
            raise UsageError("matrix rings nest one level only")
        return MatrixRing(int(size), base_ring)

    raise UsageError(
        f"unknown ring {selection!r}. Supported: 'rational', 'mod:<m>', 'mat:<k>:<base>'"
    )
