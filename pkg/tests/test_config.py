"""Tests for argument validation and logging setup."""

import logging
from logging.handlers import RotatingFileHandler

import pytest

from src.config import (
    LOG_FILE_NAME,
    MIN_PRIME_BOUND,
    CliConfig,
    DensitySettings,
    SieveSettings,
    UsageError,
    setup_logging,
)


class TestValidate:
    """Tests for CliConfig.validate."""

    def test_defaults_are_valid(self):
        """Test that the default density run validates."""
        config = CliConfig("density")

        assert config.validate() is config
        assert config.recurrence == (1, 1, 3, 1)

    def test_unknown_subcommand(self):
        """Test that only known subcommands pass."""
        with pytest.raises(UsageError, match="unknown subcommand"):
            CliConfig("plot").validate()

    def test_unknown_format(self):
        """Test that --format is checked."""
        with pytest.raises(UsageError) as exc_info:
            CliConfig("classify", format="xml").validate()

        assert exc_info.value.flag == "--format"

    @pytest.mark.parametrize(
        ("settings", "flag"),
        [
            ({"sieve": SieveSettings(limit=0)}, "--limit"),
            ({"sieve": SieveSettings(jobs=0)}, "--jobs"),
            ({"sieve": SieveSettings(block_size=-1)}, "--block-size"),
            ({"density": DensitySettings(euler_bound=0)}, "--euler-bound"),
            ({"density": DensitySettings(j_max=0)}, "--j-max"),
        ],
    )
    def test_non_positive_values(self, settings, flag):
        """Test that every numeric flag must be positive."""
        with pytest.raises(UsageError, match=f"^{flag}: must be positive"):
            CliConfig("density", **settings).validate()

    @pytest.mark.parametrize(
        ("settings", "flag"),
        [
            (DensitySettings(euler_bound=50), "--euler-bound"),
            (DensitySettings(artin_prime_bound=99), "--artin-prime-bound"),
        ],
    )
    def test_prime_bounds_below_minimum(self, settings, flag):
        """Test that truncated products need a prime bound of at least MIN_PRIME_BOUND."""
        with pytest.raises(UsageError, match=f"^{flag}: must be at least {MIN_PRIME_BOUND}"):
            CliConfig("artin", base=5, density=settings).validate()

    def test_minimum_prime_bound_is_accepted(self):
        """Test that the bound itself is valid."""
        config = CliConfig("density", density=DensitySettings(euler_bound=MIN_PRIME_BOUND))

        assert config.validate() is config

    def test_sieve_limit_at_least_two(self):
        """Test that a sieve needs at least one prime."""
        with pytest.raises(UsageError, match="at least 2"):
            CliConfig("sieve", sieve=SieveSettings(limit=1)).validate()

    def test_check_requires_prime(self):
        """Test that check needs --prime."""
        with pytest.raises(UsageError, match="required"):
            CliConfig("check").validate()

    def test_check_rejects_composite(self):
        """Test that --prime must be prime."""
        with pytest.raises(UsageError, match="15 is not prime"):
            CliConfig("check", prime=15).validate()

    def test_artin_requires_base(self):
        """Test that artin needs --base."""
        with pytest.raises(UsageError, match="--base"):
            CliConfig("artin").validate()

    def test_recurrence_needs_four_integers(self):
        """Test the recurrence length check."""
        with pytest.raises(UsageError, match="four integers"):
            CliConfig("classify", recurrence=(1, 1, 3)).validate()


class TestSetupLogging:
    """Tests for setup_logging."""

    def setup_method(self):
        """Detach the root handlers so setup_logging starts clean."""
        self.root = logging.getLogger()
        self.saved = (self.root.level, self.root.handlers[:])
        for handler in self.saved[1]:
            self.root.removeHandler(handler)

    def teardown_method(self):
        """Restore the root handlers."""
        for handler in self.root.handlers[:]:
            self.root.removeHandler(handler)
            handler.close()
        level, handlers = self.saved
        self.root.setLevel(level)
        for handler in handlers:
            self.root.addHandler(handler)

    def test_file_and_console_handlers(self, tmp_path):
        """Test a rotating file handler and a warning-level console handler."""
        setup_logging(log_dir=tmp_path)

        file_handlers = [h for h in self.root.handlers if isinstance(h, RotatingFileHandler)]
        console = [h for h in self.root.handlers if not isinstance(h, RotatingFileHandler)]

        assert len(file_handlers) == 1
        assert file_handlers[0].baseFilename == str(tmp_path / LOG_FILE_NAME)
        assert console[0].level == logging.WARNING
        assert self.root.level == logging.INFO

    def test_debug_lowers_levels(self, tmp_path):
        """Test that debug shows everything on the console."""
        setup_logging(debug=True, log_dir=tmp_path)

        assert self.root.level == logging.DEBUG
        assert all(h.level in (logging.DEBUG, logging.NOTSET) for h in self.root.handlers)

    def test_reconfiguration_replaces_handlers(self, tmp_path):
        """Test that a second call does not duplicate handlers."""
        setup_logging(log_dir=tmp_path)
        setup_logging(log_dir=tmp_path / "nested")

        assert len(self.root.handlers) == 2
        assert (tmp_path / "nested").is_dir()
