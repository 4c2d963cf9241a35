"""Tests for the closed-form convergence criteria."""
import math

import numpy as np
import pytest

from src.model import beg_system, power_law_system
from .criteria import (
    Dc_upper, F_of_beta, criterion_closed_form, criterion_crude, crude_constant, crude_margin,
    estr_margin, estr_sides, h_beta, log_F_of_beta
)


class TestH:
    """Test h(beta, J)."""

    @pytest.mark.parametrize("d", [1, 2])
    @pytest.mark.parametrize("beta", [0.0, 0.3, 2.0])
    def test_nearest_neighbor(self, make_nn_system, d, beta):
        """2d (1 - e^{-beta J0}) on nearest neighbours."""
        system = make_nn_system(1, 1.0, beta=beta, j0=0.7, d=d)
        assert h_beta(system) == pytest.approx(2 * d * (1 - math.exp(-beta * 0.7)))

    @pytest.mark.parametrize("beta", np.linspace(0.0, 10.0, 21))
    def test_below_two_beta_j(self, make_nn_system, beta):
        """h <= 2 beta J."""
        system = make_nn_system(2, 1.0, beta=beta, j0=1.3)
        assert h_beta(system) <= 2 * beta * system.J + 1e-15

    @pytest.mark.parametrize("d", [1, 2])
    def test_power_law_below_two_beta_j(self, d):
        """h <= 2 beta J with a tail certificate."""
        for beta in (0.1, 1.0, 5.0):
            system = power_law_system(C=1.0, epsilon=1.0, D=1.0, beta=beta, d=d, radius=10)
            assert h_beta(system) <= 2 * beta * system.J * (1 + 1e-12)


class TestF:
    """Test F(beta)."""

    def test_infinite_temperature(self, make_nn_system):
        """F(0) = (1 + 2N)^2 / (2 (3N + 14 N^2))."""
        for n in (1, 2, 3):
            system = make_nn_system(n, 1.5, beta=0.0)
            assert F_of_beta(system) == pytest.approx(
                (1 + 2 * n) ** 2 / (2 * (3 * n + 14 * n * n)), rel=1e-12)
        assert F_of_beta(make_nn_system(1, 1.5, beta=0.0)) == pytest.approx(9 / 34, rel=1e-12)
        assert F_of_beta(make_nn_system(1, 1.5, beta=0.0)) >= 9 / 68

    @pytest.mark.parametrize("n", [1, 2])
    def test_low_temperature(self, make_nn_system, n):
        """F tends to 1/(6N) and stays above 1/(12N)."""
        value = F_of_beta(make_nn_system(n, 2.0, beta=200.0))
        assert value == pytest.approx(1 / (6 * n), rel=1e-9)
        assert value >= 1 / (12 * n)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_uniform_lower_bound(self, make_nn_system, n):
        """F >= 1/(6N + 16N^2) whenever D >= J."""
        floor = 1 / (6 * n + 16 * n * n)
        for d_field in (1.0, 1.5, 4.0):
            system = make_nn_system(n, d_field)
            for beta in np.linspace(0.0, 100.0, 10001):
                assert F_of_beta(system.with_beta(beta)) >= floor * (1 - 1e-12), (d_field, beta)

    def test_log_stays_finite(self, make_nn_system):
        """ln F survives D < J at large beta."""
        value = log_F_of_beta(make_nn_system(1, -5.0, beta=500.0))
        assert math.isfinite(value)


class TestClosedForm:
    """Test the closed-form criterion."""

    def test_infinite_temperature(self, make_nn_system):
        """h = 0 makes the criterion hold."""
        system = make_nn_system(1, 0.5, beta=0.0)
        assert estr_margin(system) == math.inf
        assert criterion_closed_form(system)

    def test_sides_agree_with_margin(self, make_nn_system):
        """Both sides reproduce the log margin."""
        system = make_nn_system(1, 3.0, beta=1.2)
        lhs, rhs = estr_sides(system)
        assert math.log(lhs) - math.log(rhs) == pytest.approx(estr_margin(system))

    def test_overflowing_lhs(self, make_nn_system):
        """The left side saturates to inf without breaking the verdict."""
        system = make_nn_system(1, 30.0, beta=100.0)
        lhs, _ = estr_sides(system)
        assert lhs == math.inf
        assert criterion_closed_form(system)

    def test_low_temperature_below_threshold(self, make_nn_system):
        """D < J fails at large beta."""
        assert not criterion_closed_form(make_nn_system(1, 0.9, beta=30.0))


class TestCrude:
    """Test the crude criterion and the crystal-field threshold."""

    def test_constant(self):
        """12N + 32N^2."""
        assert crude_constant(1) == 44
        assert crude_constant(2) == 152

    def test_dc_upper(self):
        """1 + 44/e for N = J = 1."""
        assert Dc_upper(1, 1.0) == pytest.approx(1 + 44 / math.e, rel=1e-15)
        assert Dc_upper(1, 1.0) == pytest.approx(17.1867, abs=1e-4)
        assert Dc_upper(2, 0.5) == pytest.approx(0.5 * (1 + 152 / math.e))

    def test_dc_upper_rejects(self):
        """N >= 1 and J > 0."""
        with pytest.raises(ValueError):
            Dc_upper(0, 1.0)
        with pytest.raises(ValueError):
            Dc_upper(1, 0.0)

    @pytest.mark.parametrize("n", [1, 2])
    def test_holds_at_threshold(self, make_nn_system, n):
        """At D = Dc_upper the crude criterion holds for every beta."""
        threshold = Dc_upper(n, 1.0)
        for beta in np.linspace(0.0, 100.0, 2001):
            assert criterion_crude(make_nn_system(n, threshold, beta=beta)), beta

    def test_fails_below_j(self, make_nn_system):
        """D < J never satisfies the crude criterion."""
        assert not criterion_crude(make_nn_system(1, 0.99, beta=0.0))
        assert not criterion_crude(make_nn_system(1, 0.99, beta=5.0))

    def test_fails_below_threshold(self, make_nn_system):
        """Just below Dc_upper the tangent point fails."""
        threshold = Dc_upper(1, 1.0)
        system = make_nn_system(1, threshold - 0.5, beta=math.e / crude_constant(1))
        assert crude_margin(system) < 0
        assert not criterion_crude(system)

    def test_beg_coupling(self):
        """BEG with V + |K| = 1 has J = 1."""
        system = beg_system(V=0.6, K=-0.4, D=20.0, beta=3.0)
        assert system.J == pytest.approx(1.0)
        assert criterion_crude(system)
