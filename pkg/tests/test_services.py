"""
Service Tests

Tests for the arithmetic service, the property suite and the benchmark.
"""

import pytest

from kronring.algebra import STRATEGIES
from kronring.algebra.extension import zero
from kronring.core.config import settings
from kronring.core.exceptions import (
    ChecksumMismatchError,
    PolynomialSyntaxError,
    StrategyDisagreementError,
)
from kronring.output import format_as_csv, format_as_plain
from kronring.services import ArithmeticService, get_arithmetic_service, run_bench, run_check

BENCH_RING = "mod:2305843009213693951"


def broken_strategy(ctx, a, b):
    return zero(ctx)


@pytest.mark.unit
class TestArithmeticService:
    """Tests for mul, pow and table"""

    def test_mul(self):
        """Test a product over Z/7 with formatted coordinates"""
        service = ArithmeticService()
        result = service.mul("mod:7", "x^3-1", "1+2*x+3*x^2", "4+5*x+6*x^2", "kronecker")
        assert result.coordinates == ["3", "3", "0"]
        assert result.modulus == ["6", "0", "0", "1"]
        assert result.ring == "mod:7"

    def test_mul_verify(self):
        """Test --verify style cross-checking passes when strategies agree"""
        service = ArithmeticService()
        result = service.mul("rational", "x^2+1", "1+2*x", "3+4*x", "regular", verify=True)
        assert result.coordinates == ["-5", "10"]

    def test_mul_verify_disagreement(self, monkeypatch):
        """Test a disagreeing strategy is reported"""
        monkeypatch.setitem(STRATEGIES, "kronecker", broken_strategy)
        service = ArithmeticService()
        with pytest.raises(StrategyDisagreementError):
            service.mul("rational", "x^2+1", "1+2*x", "3+4*x", "regular", verify=True)

    def test_pow(self):
        """Test xi^100 modulo X^3 - 1"""
        result = ArithmeticService().pow("rational", "x^3-1", 100)
        assert result.coordinates == ["0", "1", "0"]
        assert result.exponent == 100

    def test_table(self):
        """Test the structure matrix of X^2 + 1"""
        result = ArithmeticService().table("rational", "x^2+1")
        assert result.block_size == 2
        assert result.rows == [["1", "0", "0", "-1"], ["0", "1", "1", "0"]]
        assert format_as_plain(result) == "[1,0|0,-1]\n[0,1|1,0]"

    def test_context_reused(self):
        """Test contexts are cached per ring and modulus text"""
        service = ArithmeticService()
        assert service.get_context("mod:7", "x^2+1") is service.get_context("mod:7", "x^2+1")
        assert service.get_context("mod:7", "x^2+1") is not service.get_context("mod:5", "x^2+1")

    def test_parse_error(self):
        """Test operand syntax errors surface with an offset"""
        with pytest.raises(PolynomialSyntaxError):
            ArithmeticService().mul("rational", "x^2+1", "x^^2", "1", "regular")

    def test_singleton(self):
        """Test the global service is created once"""
        assert get_arithmetic_service() is get_arithmetic_service()


@pytest.mark.unit
class TestVerification:
    """Tests for the property suite"""

    def test_small_run_passes(self):
        """Test a reduced run reports no failures"""
        report = run_check(seed=7, max_degree=3, trials=2, pairs=2)
        assert report.passed, format_as_plain(report)
        names = {result.name for result in report.results}
        assert {
            "ring_axioms",
            "noncommutativity_witness",
            "division_identity",
            "companion_annihilation",
            "strategy_equivalence",
            "theorem2",
            "golden_structure",
        } <= names

    def test_deterministic(self):
        """Test the same seed yields the same report"""
        first = format_as_plain(run_check(seed=3, max_degree=3, trials=2, pairs=2))
        second = format_as_plain(run_check(seed=3, max_degree=3, trials=2, pairs=2))
        assert first == second
        assert first.splitlines()[-1].startswith("SUMMARY seed=3 ")

    def test_injected_fault_detected(self, monkeypatch):
        """Test a wrong companion matrix is caught with a counterexample"""
        monkeypatch.setattr(settings, "INJECT_COMPANION_FAULT", True)
        report = run_check(seed=1, max_degree=4, trials=3, pairs=3)
        assert not report.passed
        failed = [r for r in report.failures if r.name == "strategy_equivalence"]
        assert failed
        assert "f=" in failed[0].counterexample
        assert "naive=" in failed[0].counterexample

    @pytest.mark.slow
    def test_default_run_passes(self):
        """Test the full default suite"""
        report = run_check(seed=settings.DEFAULT_SEED)
        assert report.passed, format_as_plain(report)


@pytest.mark.unit
class TestBenchmark:
    """Tests for run_bench"""

    def test_rows_and_checksums(self):
        """Test one row per degree and strategy with matching checksums"""
        report = run_bench(BENCH_RING, [2, 4, 8], reps=2, seed=1)
        assert len(report.rows) == 3 * len(STRATEGIES)
        for degree in (2, 4, 8):
            rows = report.rows_for(degree)
            assert {row.strategy for row in rows} == set(STRATEGIES)
            assert len({row.checksum for row in rows}) == 1
            assert len({row.setup_ns for row in rows}) == 1

    def test_strategy_subset(self):
        """Test benchmarking a subset of strategies"""
        report = run_bench(BENCH_RING, [3], reps=1, seed=1, strategies=["naive", "regular"])
        assert [row.strategy for row in report.rows] == ["naive", "regular"]

    def test_checksums_are_seeded(self):
        """Test the same seed benchmarks the same products"""
        first = run_bench(BENCH_RING, [5], reps=2, seed=9)
        second = run_bench(BENCH_RING, [5], reps=2, seed=9)
        assert [r.checksum for r in first.rows] == [r.checksum for r in second.rows]

    def test_mismatch_detected(self, monkeypatch):
        """Test a wrong strategy makes the benchmark fail"""
        monkeypatch.setitem(STRATEGIES, "regular", broken_strategy)
        with pytest.raises(ChecksumMismatchError):
            run_bench(BENCH_RING, [4], reps=2, seed=1)

    def test_csv(self):
        """Test the CSV header and row count"""
        report = run_bench(BENCH_RING, [2], reps=1, seed=1)
        lines = format_as_csv(report).splitlines()
        assert lines[0] == "degree,strategy,setup_ns,per_product_ns,reps,checksum"
        assert len(lines) == 1 + len(STRATEGIES)

    @pytest.mark.slow
    def test_regular_beats_kronecker_at_large_degree(self):
        """Test O(n^2) regular is faster than O(n^3) kronecker at n = 256"""
        report = run_bench(BENCH_RING, [4, 16, 64, 256], reps=1, seed=42)
        rows = {row.strategy: row for row in report.rows_for(256)}
        assert rows["kronecker"].per_product_ns > rows["regular"].per_product_ns
