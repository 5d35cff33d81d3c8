"""
Rings Module

Coefficient rings: rationals, integers modulo m and k x k matrices over
a commutative base.
"""

from kronring.rings.base import (
    Ring,
    RingValue,
    check_member,
    check_same_ring,
    random_value,
    ring_add,
    ring_dot,
    ring_eq,
    ring_mul,
    ring_neg,
    ring_one,
    ring_sub,
    ring_zero,
)
from kronring.rings.matrix import MatrixRing
from kronring.rings.modular import ModularRing
from kronring.rings.rational import RationalRing
from kronring.rings.selection import parse_ring

__all__ = [
    "Ring",
    "RingValue",
    "RationalRing",
    "ModularRing",
    "MatrixRing",
    "parse_ring",
    "check_member",
    "check_same_ring",
    "random_value",
    "ring_add",
    "ring_sub",
    "ring_mul",
    "ring_neg",
    "ring_zero",
    "ring_one",
    "ring_eq",
    "ring_dot",
]
