"""Tests for the size-indexed convergence condition."""
import math

import numpy as np
import pytest

from src.model import Volume, beg_system
from src.polymers import activity_table
from .criteria import criterion_closed_form, criterion_crude
from .series import SizeSeries, criterion_numeric_FP, fp_infimum, fp_objective


class TestSizeSeries:
    """Test the series representations."""

    def test_closed_form_low_temperature(self, make_nn_system):
        """ln rho_n stays finite when exp(beta J) does not fit a float."""
        series = SizeSeries.closed_form(make_nn_system(1, 18.0, beta=1000.0))
        log_rho = series.log_rho(np.arange(2, 6, dtype=float))
        assert np.all(np.isfinite(log_rho))
        assert np.all(np.diff(log_rho) < 0)
        assert 0.0 <= series.growth < 1.0
        assert fp_infimum(series).satisfied

    def test_closed_form_growth_saturates(self, make_nn_system):
        """A ratio bound beyond the float range leaves no admissible a."""
        series = SizeSeries.closed_form(make_nn_system(1, 0.5, beta=2000.0))
        assert series.growth == math.inf
        assert series.a_max == 0.0

    def test_geometric_sum(self):
        """sum_{n >= 2} y^n = y^2 / (1 - y)."""
        series = SizeSeries.geometric(0.1)
        y = 0.1 * math.e
        assert series.log_sum(1.0) == pytest.approx(math.log(y * y / (1 - y)), rel=1e-9)

    def test_geometric_tail_fails(self):
        """No finite sum once e^a c >= 1."""
        series = SizeSeries.geometric(0.5)
        assert series.log_sum(1.0) == math.inf
        assert series.a_max == pytest.approx(math.log(2))

    def test_vectorized(self):
        """Arrays of a give arrays of sums."""
        series = SizeSeries.geometric(0.01)
        grid = np.array([0.5, 1.0, 2.0])
        values = series.log_sum(grid)
        assert values.shape == (3,)
        assert values[1] == pytest.approx(series.log_sum(1.0))

    def test_from_sups(self):
        """Finite support sums exactly."""
        series = SizeSeries.from_sups({2: 0.1, 3: 0.0, 4: 0.01})
        assert series.support == 4
        expected = math.log(0.1 * math.exp(2.0) + 0.01 * math.exp(4.0))
        assert series.log_sum(1.0) == pytest.approx(expected)

    def test_zero(self):
        """All-zero sups vanish."""
        assert SizeSeries.from_sups({2: 0.0}).vanishing
        assert SizeSeries.geometric(0.0).vanishing


class TestFPInfimum:
    """Test the infimum over a."""

    def test_geometric_small(self):
        """c = 0.01 satisfies the condition."""
        result = fp_infimum(SizeSeries.geometric(0.01))
        assert result.satisfied
        assert 0 < result.a < -math.log(0.01)

    def test_geometric_large(self):
        """c = 1 fails."""
        result = fp_infimum(SizeSeries.geometric(1.0))
        assert not result.satisfied
        assert result.value == math.inf

    def test_optimum_beats_grid(self):
        """The refined a does at least as well as a few sampled points."""
        series = SizeSeries.geometric(0.05)
        result = fp_infimum(series)
        samples = np.linspace(0.1, 2.9, 15)
        assert math.log(result.value) <= float(np.min(fp_objective(series, samples))) + 1e-9

    def test_vanishing(self):
        """A zero series is satisfied at value 0."""
        result = fp_infimum(SizeSeries.zero())
        assert result.satisfied and result.value == 0.0


class TestCriterionNumericFP:
    """Test the FP criterion on spin systems."""

    def test_infinite_temperature(self, make_nn_system):
        """beta = 0 always converges."""
        assert criterion_numeric_FP(make_nn_system(1, 0.1, beta=0.0))

    def test_table_mode(self):
        """Measured sups of a weakly coupled chain converge."""
        system = beg_system(V=1.0, K=0.0, D=1.0, beta=0.2)
        table = activity_table(system, Volume.chain(4), 4)
        assert criterion_numeric_FP(system, 'table', table)

    def test_table_mode_needs_table(self, make_nn_system):
        """table mode without a table is a usage error."""
        with pytest.raises(ValueError):
            criterion_numeric_FP(make_nn_system(1, 1.0), 'table')

    @pytest.mark.parametrize("beta", [1.0, 10.0])
    def test_mode_names_agree(self, make_nn_system, beta):
        """The default analytic mode and its closed_form alias give the same verdict."""
        for d_field in (0.5, 1.2, 18.0):
            system = make_nn_system(1, d_field, beta=beta)
            assert criterion_numeric_FP(system, 'paper_bound') == criterion_numeric_FP(
                system, 'closed_form') == criterion_numeric_FP(system)

    def test_analytic_mode_by_name(self, make_nn_system):
        """The analytic mode is selected by name."""
        assert criterion_numeric_FP(make_nn_system(1, 18.0, beta=1.0), 'paper_bound')

    @pytest.mark.parametrize("beta", [800.0, 5000.0])
    def test_beta_j_beyond_float_range(self, make_nn_system, beta):
        """exp(beta J) overflows a float; the verdicts are still decided."""
        assert criterion_numeric_FP(make_nn_system(1, 18.0, beta=beta))
        assert criterion_numeric_FP(beg_system(1.0, 0.0, 18.0, beta), 'paper_bound')
        assert not criterion_numeric_FP(make_nn_system(1, 0.5, beta=beta))
        assert not criterion_numeric_FP(make_nn_system(2, 0.9, beta=beta))

    def test_unknown_mode(self, make_nn_system):
        """Only two bound modes exist."""
        with pytest.raises(ValueError):
            criterion_numeric_FP(make_nn_system(1, 1.0), 'guess')

    def test_strong_field(self, make_nn_system):
        """A large crystal field converges at low temperature."""
        assert criterion_numeric_FP(make_nn_system(1, 18.0, beta=10.0))

    def test_weak_field_low_temperature(self, make_nn_system):
        """D < J fails at low temperature."""
        assert not criterion_numeric_FP(make_nn_system(1, 0.5, beta=20.0))


class TestImplications:
    """crude => closed form => FP on a parameter grid."""

    @pytest.mark.parametrize("n", [1, 2])
    def test_chain(self, make_nn_system, n):
        """No grid point breaks the chain of implications."""
        checked = 0
        for d_field in np.linspace(0.2, 30.0, 25):
            for beta in np.geomspace(0.01, 40.0, 25):
                system = make_nn_system(n, float(d_field), beta=float(beta))
                crude = criterion_crude(system)
                closed = criterion_closed_form(system)
                if crude:
                    assert closed, (d_field, beta)
                if closed:
                    assert criterion_numeric_FP(system), (d_field, beta)
                checked += 1
        assert checked >= 500
