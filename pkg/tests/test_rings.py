"""
Coefficient Ring Tests

Tests for the rational, modular and matrix rings and ring selection.
"""

import random
from fractions import Fraction

import pytest

from kronring.core.exceptions import CoefficientLiteralError, RingMismatchError, UsageError
from kronring.rings import (
    MatrixRing,
    ModularRing,
    RationalRing,
    parse_ring,
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

ALL_RINGS = ["rational", "mod:2", "mod:7", "mod:256", "mat:2:mod:5", "mat:3:rational"]


@pytest.mark.unit
class TestScalarRings:
    """Arithmetic examples over Q and Z/m"""

    def test_rational_arithmetic(self):
        """Test fractions stay exact and canonical"""
        q = RationalRing()
        assert ring_add(q, Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
        assert ring_mul(q, Fraction(2, 3), Fraction(3, 4)) == Fraction(1, 2)
        assert ring_sub(q, Fraction(1), Fraction(1)) == ring_zero(q)
        assert ring_eq(q, Fraction(2, 4), Fraction(1, 2))

    def test_modular_arithmetic(self):
        """Test residues are reduced into [0, m)"""
        z7 = ModularRing(7)
        assert ring_add(z7, 5, 4) == 2
        assert ring_mul(z7, 3, 5) == 1
        assert ring_neg(z7, 3) == 4
        assert ring_neg(z7, 0) == 0
        assert ring_dot(z7, [1, 2, 3], [4, 5, 6]) == 32 % 7

    def test_modulus_below_two_rejected(self):
        """Test Z/1 and Z/0 are rejected"""
        with pytest.raises(UsageError):
            ModularRing(1)
        with pytest.raises(UsageError):
            ModularRing(0)

    def test_non_member_rejected(self):
        """Test values outside the ring raise RingMismatchError"""
        z7 = ModularRing(7)
        with pytest.raises(RingMismatchError):
            ring_add(z7, 9, 1)
        with pytest.raises(RingMismatchError):
            ring_mul(z7, 3, Fraction(1, 2))

    def test_literals(self):
        """Test parse_literal and format agree"""
        q = RationalRing()
        assert q.parse_literal("-3/6") == Fraction(-1, 2)
        assert q.format(Fraction(-1, 2)) == "-1/2"
        assert q.format(Fraction(4)) == "4"
        assert ModularRing(7).parse_literal("-1") == 6
        assert ModularRing(7).parse_literal("15") == 1

    def test_bad_literals(self):
        """Test malformed coefficient literals are reported"""
        with pytest.raises(CoefficientLiteralError):
            RationalRing().parse_literal("1/0")
        with pytest.raises(CoefficientLiteralError):
            ModularRing(7).parse_literal("1/2")
        with pytest.raises(CoefficientLiteralError):
            RationalRing().parse_literal("abc")


@pytest.mark.unit
class TestMatrixRing:
    """Tests for k x k matrices over a commutative base"""

    def test_noncommutativity_witness(self):
        """Test E12*E21 differs from E21*E12"""
        ring = MatrixRing(2, ModularRing(5))
        e12 = ((0, 1), (0, 0))
        e21 = ((0, 0), (1, 0))
        assert ring_mul(ring, e12, e21) == ((1, 0), (0, 0))
        assert ring_mul(ring, e21, e12) == ((0, 0), (0, 1))
        assert not ring.commutative

    def test_one_by_one_is_commutative(self):
        """Test M_1 of a commutative ring reports commutative"""
        assert MatrixRing(1, RationalRing()).commutative

    def test_identity_and_scalar(self):
        """Test one() is the identity matrix and scalar embeds c*I"""
        ring = MatrixRing(2, RationalRing())
        assert ring_one(ring) == ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
        assert ring.scalar(Fraction(3)) == ((Fraction(3), Fraction(0)), (Fraction(0), Fraction(3)))

    def test_nesting_rejected(self):
        """Test matrices of matrices are refused"""
        with pytest.raises(UsageError):
            MatrixRing(2, MatrixRing(2, ModularRing(5)))

    def test_literal(self):
        """Test matrix literals and scalar shorthand"""
        ring = MatrixRing(2, ModularRing(5))
        assert ring.parse_literal("[[1,2];[3,4]]") == ((1, 2), (3, 4))
        assert ring.parse_literal("3") == ((3, 0), (0, 3))
        assert ring.format(((1, 2), (3, 4))) == "[[1,2];[3,4]]"

    def test_literal_wrong_shape(self):
        """Test a 3-entry row is rejected for a 2x2 ring"""
        ring = MatrixRing(2, ModularRing(5))
        with pytest.raises(CoefficientLiteralError):
            ring.parse_literal("[[1,2,3];[3,4,5]]")


@pytest.mark.unit
class TestRingSelection:
    """Tests for parse_ring"""

    def test_valid_selections(self):
        """Test the supported selection strings"""
        assert parse_ring("rational") == RationalRing()
        assert parse_ring("mod:7") == ModularRing(7)
        assert parse_ring("mat:3:mod:5") == MatrixRing(3, ModularRing(5))
        assert parse_ring("mat:2:rational").describe() == "mat:2:rational"

    @pytest.mark.parametrize("selection", ["mod:1", "mod:x", "mat:2:mat:2:rational", "reals", "mat:0:mod:5"])
    def test_invalid_selections(self, selection):
        """Test malformed selections raise UsageError"""
        with pytest.raises(UsageError):
            parse_ring(selection)


@pytest.mark.unit
class TestRingAxioms:
    """Randomized ring axioms on 1000 triples per ring"""

    @pytest.mark.parametrize("selection", ALL_RINGS)
    def test_axioms(self, selection):
        """Test associativity, distributivity and identities"""
        ring = parse_ring(selection)
        rng = random.Random(1234)
        for _ in range(1000):
            x, y, z = (random_value(ring, rng) for _ in range(3))
            assert ring.add(ring.add(x, y), z) == ring.add(x, ring.add(y, z))
            assert ring.add(x, y) == ring.add(y, x)
            assert ring.add(x, ring.neg(x)) == ring.zero()
            assert ring.mul(ring.mul(x, y), z) == ring.mul(x, ring.mul(y, z))
            assert ring.mul(x, ring.add(y, z)) == ring.add(ring.mul(x, y), ring.mul(x, z))
            assert ring.mul(ring.add(x, y), z) == ring.add(ring.mul(x, z), ring.mul(y, z))
            assert ring.mul(ring.one(), x) == x == ring.mul(x, ring.one())
            assert ring.contains(ring.mul(x, y))

    @pytest.mark.parametrize("selection", ALL_RINGS)
    def test_random_is_seeded(self, selection):
        """Test the same seed draws the same values"""
        ring = parse_ring(selection)
        first_rng, second_rng = random.Random(7), random.Random(7)
        first = [random_value(ring, first_rng) for _ in range(5)]
        second = [random_value(ring, second_rng) for _ in range(5)]
        assert first == second
