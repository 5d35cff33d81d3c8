"""
Configuration Tests

Tests for settings loading, validation and logging setup.
"""

import io
import logging
import sys

import pytest

from kronring.core.config import Settings, settings
from kronring.core.logging import setup_logging


@pytest.mark.unit
class TestSettings:
    """Tests for environment-driven settings"""

    def test_defaults(self):
        """Test the shipped defaults"""
        fresh = Settings(_env_file=None)
        assert fresh.DEFAULT_STRATEGY == "regular"
        assert fresh.BENCH_DEGREES == [4, 16, 64, 256]
        assert fresh.BENCH_RING == "mod:2305843009213693951"
        assert fresh.INJECT_COMPANION_FAULT is False

    def test_env_prefix(self, monkeypatch):
        """Test KRONRING_ variables override defaults"""
        monkeypatch.setenv("KRONRING_DEFAULT_SEED", "7")
        monkeypatch.setenv("KRONRING_DEFAULT_STRATEGY", "Kronecker")
        fresh = Settings(_env_file=None)
        assert fresh.DEFAULT_SEED == 7
        assert fresh.DEFAULT_STRATEGY == "kronecker"

    def test_degree_list_parsing(self):
        """Test BENCH_DEGREES accepts comma-separated strings"""
        assert Settings(_env_file=None, BENCH_DEGREES="2, 8,32").BENCH_DEGREES == [2, 8, 32]
        assert Settings(_env_file=None, BENCH_DEGREES=[5]).BENCH_DEGREES == [5]

    def test_global_instance(self):
        """Test the module-level settings object is a Settings"""
        assert isinstance(settings, Settings)
        assert settings.APP_NAME == "kronring"


@pytest.mark.unit
class TestLogging:
    """Tests for setup_logging"""

    def test_single_handler(self):
        """Test repeated setup keeps one handler and updates the level"""
        logger = setup_logging("info")
        setup_logging("debug")
        assert len(logger.handlers) == 1
        assert logger.level == logging.DEBUG
        setup_logging("warning")
        assert logger.handlers[0].level == logging.WARNING

    def test_follows_rebound_stderr(self, monkeypatch):
        """Test setup after the previous stderr was closed"""
        first = io.StringIO()
        monkeypatch.setattr(sys, "stderr", first)
        setup_logging("info")
        first.close()

        second = io.StringIO()
        monkeypatch.setattr(sys, "stderr", second)
        logger = setup_logging("info")
        assert len(logger.handlers) == 1
        logger.info("hello")
        assert "hello" in second.getvalue()
