"""
Polynomial Tests

Tests for dense polynomials, monic division, evaluation and the
polynomial text syntax.
"""

import random
from fractions import Fraction

import pytest

from kronring.algebra import (
    DensePolynomial,
    MonicModulus,
    divmod_monic,
    format_polynomial,
    parse_polynomial,
    poly_add,
    poly_eval,
    poly_mul,
    poly_sub,
)
from kronring.algebra.poly import poly_scale
from kronring.algebra.sampling import random_monic, random_polynomial
from kronring.core.config import settings
from kronring.core.exceptions import (
    CoefficientLiteralError,
    InvalidModulusError,
    PolynomialSyntaxError,
    UsageError,
)
from kronring.rings import MatrixRing, ModularRing, RationalRing, parse_ring

Q = RationalRing()
Z7 = ModularRing(7)


def poly(ring, *values):
    return DensePolynomial.of(ring, values)


@pytest.mark.unit
class TestDensePolynomial:
    """Tests for normalization and basic arithmetic"""

    def test_trailing_zeros_stripped(self):
        """Test the leading coefficient is never zero"""
        p = poly(Q, 1, 2, 0, 0)
        assert p.coefficients == (Fraction(1), Fraction(2))
        assert p.degree == 1
        assert poly(Q).degree == -1
        assert poly(Q, 0, 0).is_zero()

    def test_add(self):
        """Test addition examples"""
        assert poly_add(poly(Q, 1, 1), poly(Q, -1, -1)).is_zero()
        assert poly_add(poly(Q, 1, 0, 1), poly(Q, 0, 1)) == poly(Q, 1, 1, 1)
        assert poly_add(poly(Q, 3, 4), poly(Q)) == poly(Q, 3, 4)
        assert poly_sub(poly(Q, 3, 4), poly(Q, 3, 4)).is_zero()

    def test_mul(self):
        """Test multiplication examples"""
        assert poly_mul(poly(Q, 0, 1), poly(Q, 0, 1)) == poly(Q, 0, 0, 1)
        assert poly_mul(poly(Q, 1, 2), poly(Q, 3, 4)) == poly(Q, 3, 10, 8)
        assert poly_mul(poly(Q, 5), poly(Q)).is_zero()

    def test_mul_zero_divisors(self):
        """Test 2*2 = 0 over Z/4 normalizes to the zero polynomial"""
        z4 = ModularRing(4)
        assert poly_mul(poly(z4, 2), poly(z4, 2)).is_zero()
        assert poly_mul(poly(z4, 0, 2), poly(z4, 1, 2)) == poly(z4, 0, 2)

    def test_degree_bound(self):
        """Test deg(p*q) <= deg p + deg q"""
        rng = random.Random(5)
        ring = ModularRing(4)
        for _ in range(200):
            p = random_polynomial(ring, 6, rng)
            q = random_polynomial(ring, 6, rng)
            product = poly_mul(p, q)
            if not (p.is_zero() or q.is_zero()):
                assert product.degree <= p.degree + q.degree

    def test_operators(self):
        """Test dunder operators delegate to the functions"""
        p, q = poly(Z7, 1, 2), poly(Z7, 3, 4)
        assert p + q == poly(Z7, 4, 6)
        assert p * q == poly(Z7, 3, 3, 1)
        assert -p == poly(Z7, 6, 5)
        assert p - p == poly(Z7)

    def test_left_scale(self):
        """Test poly_scale multiplies each coefficient on the left"""
        assert poly_scale(3, poly(Z7, 1, 5)) == poly(Z7, 3, 1)
        ring = MatrixRing(2, ModularRing(5))
        e12, e21 = ((0, 1), (0, 0)), ((0, 0), (1, 0))
        assert poly_scale(e12, DensePolynomial(ring, (e21,))).coefficients == (((1, 0), (0, 0)),)
        assert poly_scale(0, poly(Z7, 1, 5)).is_zero()


@pytest.mark.unit
class TestMonicDivision:
    """Tests for MonicModulus and divmod_monic"""

    def test_examples(self):
        """Test X^3 / (X^2 + 1) and the degenerate cases"""
        f = MonicModulus.of(Q, [1, 0, 1])
        quotient, remainder = divmod_monic(poly(Q, 0, 0, 0, 1), f)
        assert quotient == poly(Q, 0, 1)
        assert remainder == poly(Q, 0, -1)

        quotient, remainder = divmod_monic(poly(Q, 4, 5), f)
        assert quotient.is_zero()
        assert remainder == poly(Q, 4, 5)

        quotient, remainder = divmod_monic(f.inner, f)
        assert quotient == poly(Q, 1)
        assert remainder.is_zero()

    def test_rejects_non_monic(self):
        """Test leading coefficient must be 1 and degree >= 1"""
        with pytest.raises(InvalidModulusError):
            MonicModulus.of(Q, [1, 2])
        with pytest.raises(InvalidModulusError):
            MonicModulus.of(Q, [5])
        with pytest.raises(InvalidModulusError):
            MonicModulus.of(Q, [])

    @pytest.mark.parametrize("selection", ["rational", "mod:7", "mod:256", "mat:2:mod:5"])
    def test_division_identity(self, selection):
        """Test p = q*f + r with deg r < n on 500 random cases"""
        ring = parse_ring(selection)
        rng = random.Random(11)
        for _ in range(500):
            n = rng.randint(1, 8)
            f = random_monic(ring, n, rng)
            p = random_polynomial(ring, rng.randint(0, 20), rng)
            quotient, remainder = divmod_monic(p, f)
            assert remainder.degree < n
            assert poly_add(poly_mul(quotient, f.inner), remainder) == p


@pytest.mark.unit
class TestEvaluation:
    """Tests for Horner evaluation"""

    def test_scalar_points(self):
        """Test evaluation at ring elements"""
        assert poly_eval(poly(Q, -1, 1), Fraction(1), Q) == 0
        assert poly_eval(poly(Z7, 3, 2), 5, Z7) == 6
        assert poly_eval(poly(Z7), 5, Z7) == 0

    def test_matrix_point(self):
        """Test X^2 + 1 vanishes at the rotation matrix"""
        ring = MatrixRing(2, Q)
        rotation = ring.coerce([[0, -1], [1, 0]])
        assert poly_eval(poly(Q, 1, 0, 1), rotation, ring) == ring.zero()
        assert poly_eval(poly(Q, 3), rotation, ring) == ring.scalar(Fraction(3))

    def test_unrelated_point_ring(self):
        """Test evaluation over a different base is refused"""
        with pytest.raises(UsageError):
            poly_eval(poly(Q, 1, 1), 3, Z7)


@pytest.mark.unit
class TestPolynomialSyntax:
    """Tests for parse_polynomial and format_polynomial"""

    def test_parse_examples(self):
        """Test the supported term shapes"""
        assert parse_polynomial("x^3 - 1", Q) == poly(Q, -1, 0, 0, 1)
        assert parse_polynomial("1/2*x + x + 1", Q) == poly(Q, 1, Fraction(3, 2))
        assert parse_polynomial("X^2+1", Q) == poly(Q, 1, 0, 1)
        assert parse_polynomial("-x", Z7) == poly(Z7, 0, 6)
        assert parse_polynomial("3x^2", Z7) == poly(Z7, 0, 0, 3)
        assert parse_polynomial("x - x", Q).is_zero()

    def test_coefficient_list(self):
        """Test the ascending coefficient-list form"""
        assert parse_polynomial("[1, 2, 3]", Z7) == poly(Z7, 1, 2, 3)
        assert parse_polynomial("[1/2, 0, 0]", Q) == poly(Q, Fraction(1, 2))
        assert parse_polynomial("[]", Q).is_zero()

    def test_matrix_coefficients(self):
        """Test matrix literals as coefficients"""
        ring = MatrixRing(2, ModularRing(5))
        p = parse_polynomial("[[1,0];[0,1]]*x + 2", ring)
        assert p == DensePolynomial(ring, (ring.scalar(2), ring.one()))
        assert parse_polynomial("[[1,2];[3,4]]", ring) == DensePolynomial(ring, (((1, 2), (3, 4)),))

    def test_syntax_error_offset(self):
        """Test the offending character offset is reported"""
        with pytest.raises(PolynomialSyntaxError) as info:
            parse_polynomial("x^^2", Q)
        assert info.value.offset == 2
        assert "offset 2" in str(info.value)

    def test_exponent_limit(self, monkeypatch):
        """Test exponents beyond MAX_PARSE_DEGREE are refused with their offset"""
        with pytest.raises(PolynomialSyntaxError) as info:
            parse_polynomial("1 + x^99999999999999999999", Q)
        assert info.value.offset == 6
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial("x^" + "9" * 5000, Q)

        monkeypatch.setattr(settings, "MAX_PARSE_DEGREE", 3)
        assert parse_polynomial("x^003", Q) == poly(Q, 0, 0, 0, 1)
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial("x^4", Q)

    @pytest.mark.parametrize("text", ["", "   ", "x +", "2 3", "x^", "1/", "y"])
    def test_syntax_errors(self, text):
        """Test malformed inputs are rejected"""
        with pytest.raises(PolynomialSyntaxError):
            parse_polynomial(text, Q)

    def test_bad_coefficient_for_ring(self):
        """Test a fraction is not a residue literal"""
        with pytest.raises(CoefficientLiteralError):
            parse_polynomial("1/2*x", Z7)

    def test_format_examples(self):
        """Test ascending rendering"""
        assert format_polynomial(poly(Q)) == "0"
        assert format_polynomial(poly(Q, -1, 0, 0, 1)) == "-1 + x^3"
        assert format_polynomial(poly(Q, 0, Fraction(-1, 2), 2)) == "-1/2*x + 2*x^2"
        assert format_polynomial(poly(Z7, 3, 1)) == "3 + x"

    @pytest.mark.parametrize("selection", ["rational", "mod:7", "mat:2:mod:5"])
    def test_format_parse_inverse(self, selection):
        """Test parse(format(p)) == p on random polynomials"""
        ring = parse_ring(selection)
        rng = random.Random(3)
        for _ in range(200):
            p = random_polynomial(ring, rng.randint(0, 7), rng)
            assert parse_polynomial(format_polynomial(p), ring) == p
