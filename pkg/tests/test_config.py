"""
Tests for command-line configuration.
"""

import math

import pytest

from footprint_simplify.config import CliConfig
from footprint_simplify.exceptions import ParameterOutOfRange


class TestCliConfig:
    """Test cases for CliConfig validation."""

    def test_simplify_defaults(self):
        """Test unset thresholds fall back to the defaults."""
        params = CliConfig("simplify", tau=2.0).simplify_params()
        assert params.tau == 2.0
        assert params.epsilon == pytest.approx(math.pi / 36)
        assert params.delta == pytest.approx(math.pi / 180)
        assert params.gamma == "dynamic"

    def test_override_tau(self):
        """Test a sweep threshold replaces the configured one."""
        config = CliConfig("sweep", sweep_from=1, sweep_to=2, sweep_step=0.5, gamma=1.0)
        params = config.simplify_params(1.5)
        assert (params.tau, params.gamma) == (1.5, 1.0)

    @pytest.mark.parametrize(
        "options",
        [
            {"subcommand": "simplify"},
            {"subcommand": "simplify", "tau": -1.0},
            {"subcommand": "simplify", "tau": 2.0, "epsilon": 2.0},
            {"subcommand": "simplify", "tau": 2.0, "gamma": "wide"},
            {"subcommand": "simplify", "tau": 2.0, "threads": -1},
            {"subcommand": "compare", "tau": 2.0},
            {"subcommand": "compare", "tau": 2.0, "rdp_tolerance": -0.5},
            {"subcommand": "sweep", "sweep_from": 1.0, "sweep_to": 2.0},
            {"subcommand": "sweep", "sweep_from": 1.0, "sweep_to": 2.0, "sweep_step": 0.0},
            {"subcommand": "sweep", "sweep_from": 3.0, "sweep_to": 2.0, "sweep_step": 0.5},
            {"subcommand": "sweep", "sweep_from": -1.0, "sweep_to": 2.0, "sweep_step": 0.5},
        ],
    )
    def test_invalid(self, options):
        """Test missing or out-of-range settings raise ParameterOutOfRange."""
        with pytest.raises(ParameterOutOfRange):
            CliConfig(**options)

    def test_render_without_tau(self):
        """Test render draws the input alone without a threshold."""
        assert CliConfig("render").tau is None

    def test_rdp_params(self):
        """Test the baseline tolerance is passed through."""
        assert CliConfig("compare", tau=2.0, rdp_tolerance=1.2).rdp_params().tolerance == 1.2


class TestSweepValues:
    """Test cases for sweep_values."""

    def test_inclusive_range(self):
        """Test both ends are part of the sweep."""
        config = CliConfig("sweep", sweep_from=1.5, sweep_to=4.5, sweep_step=0.5)
        assert config.sweep_values() == [1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5]

    def test_decimal_steps_do_not_drift(self):
        """Test repeated steps land on the decimal values."""
        config = CliConfig("sweep", sweep_from=0.1, sweep_to=0.5, sweep_step=0.1)
        assert config.sweep_values() == [0.1, 0.2, 0.3, 0.4, 0.5]

    def test_single_value(self):
        """Test equal ends give one threshold."""
        config = CliConfig("sweep", sweep_from=2.0, sweep_to=2.0, sweep_step=1.0)
        assert config.sweep_values() == [2.0]

    def test_step_past_the_end(self):
        """Test the last threshold never exceeds the upper end."""
        config = CliConfig("sweep", sweep_from=1.0, sweep_to=2.0, sweep_step=0.75)
        assert config.sweep_values() == [1.0, 1.75]
