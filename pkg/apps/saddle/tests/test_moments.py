import math
from fractions import Fraction

import numpy as np
import pytest
from mpmath import mp

from apps.exact import Kind
from apps.saddle import ComponentSums, mean_M, rho_l, variance_B2
from apps.saddle.moments import eulerian_row
from apps.sequences.tests.factories import (
    ColoredForestsFactory, ExplicitFactory, PartitionsFactory, PlanePartitionsFactory,
)


def test_eulerian_rows():
    assert eulerian_row(1) == [1]
    assert eulerian_row(2) == [1, 1]
    assert eulerian_row(3) == [1, 4, 1]
    assert eulerian_row(4) == [1, 11, 11, 1]


class TestMean:
    def test_single_partition_component(self):
        with mp.workprec(128):
            assert abs(mean_M(PartitionsFactory(), 1, mp.log(2)) - 1) < mp.mpf(10) ** -30

    def test_selection(self):
        with mp.workprec(128):
            value = mean_M(PartitionsFactory(), 2, mp.log(2), Kind.SELECTION)
            assert abs(value - mp.mpf(11) / 15) < mp.mpf(10) ** -30

    def test_vanishes_for_large_sigma(self):
        assert mean_M(PartitionsFactory(), 10, 1000) < mp.mpf(10) ** -400

    @pytest.mark.parametrize('kind', [Kind.MULTISET, Kind.SELECTION])
    def test_strictly_decreasing(self, kind):
        seq = PlanePartitionsFactory()
        values = [mean_M(seq, 30, sigma, kind) for sigma in (0.1, 0.2, 0.5, 1.0, 2.0)]
        assert all(later < earlier for earlier, later in zip(values, values[1:]))

    def test_zero_sequence(self):
        assert mean_M(ExplicitFactory(values=[0]), 5, 0.5) == 0

    def test_accepts_fractions(self):
        assert mean_M(PartitionsFactory(), 5, Fraction(1, 2)) == mean_M(PartitionsFactory(), 5, 0.5)


class TestVariance:
    def test_single_partition_component(self):
        with mp.workprec(128):
            assert abs(variance_B2(PartitionsFactory(), 1, mp.log(2)) - 2) < mp.mpf(10) ** -30

    def test_selection_below_multiset(self):
        seq = ColoredForestsFactory(k=2)
        assert variance_B2(seq, 40, 0.8, Kind.SELECTION) < variance_B2(seq, 40, 0.8)

    def test_is_minus_the_slope_of_the_mean(self):
        seq = PlanePartitionsFactory()
        h = mp.mpf(10) ** -12
        with mp.workprec(128):
            numeric = -(mean_M(seq, 50, 0.3 + h) - mean_M(seq, 50, 0.3 - h)) / (2 * h)
            assert abs(numeric / variance_B2(seq, 50, 0.3) - 1) < 1e-8


class TestRho:
    def test_single_component(self):
        with mp.workprec(128):
            value = rho_l(ExplicitFactory(values=[1]), 1, mp.log(2), 3)
            assert abs(value / 6 - 1) < mp.mpf(10) ** -28

    def test_orders_below_three_are_rejected(self):
        with pytest.raises(ValueError):
            rho_l(PartitionsFactory(), 10, 0.5, 2)

    def test_closed_form_agrees_with_series(self, settings):
        seq = PartitionsFactory()
        series = rho_l(seq, 50, 0.2, 4)
        settings.ENUMERATION_CONFIG = {**settings.ENUMERATION_CONFIG, 'RHO_MAX_SERIES_TERMS': 0}
        closed = rho_l(seq, 50, 0.2, 4)
        assert abs(closed / series - 1) < mp.mpf(10) ** -25

    def test_grows_with_order(self):
        sums = ComponentSums(PartitionsFactory(), 100, precision_bits=128)
        assert sums.rho(0.15, 3) < sums.rho(0.15, 4) < sums.rho(0.15, 5)


class TestComponentSums:
    def test_empty(self):
        assert ComponentSums(ExplicitFactory(values=[0, 0]), 10).empty
        assert not ComponentSums(PartitionsFactory(), 10).empty

    def test_log_mean_matches_high_precision_mean(self):
        sums = ComponentSums(PlanePartitionsFactory(), 200)
        assert sums.log_mean(0.1) == pytest.approx(float(mp.log(sums.mean(0.1))), rel=1e-12)

    def test_log_normaliser(self):
        sums = ComponentSums(ExplicitFactory(values=[1]), 1, precision_bits=128)
        with mp.workprec(128):
            assert abs(sums.log_normaliser(mp.log(2)) - mp.log(2)) < mp.mpf(10) ** -30

    def test_guard_bits_grow_for_small_sigma(self):
        sums = ComponentSums(PartitionsFactory(), 10)
        assert sums.guard_bits(2.0) == sums.guard_bits(1.0) < sums.guard_bits(1e-6)

    @pytest.mark.parametrize('kind', [Kind.MULTISET, Kind.SELECTION])
    def test_log_abs_log_denominator_is_finite_past_underflow(self, kind):
        values = ComponentSums(PartitionsFactory(), 1000, kind).log_abs_log_denominator(1.0)
        assert np.isfinite(values).all()
        assert values[49] == pytest.approx(-50, rel=1e-12)
        assert values[999] == -1000
        expected = math.log(math.log1p(math.exp(-1))) if kind == Kind.SELECTION \
            else math.log(-math.log1p(-math.exp(-1)))
        assert values[0] == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize('kind', [Kind.MULTISET, Kind.SELECTION])
    def test_log_normaliser_keeps_tiny_q_components(self, kind):
        seq = ColoredForestsFactory(k=2)
        sums = ComponentSums(seq, 1000, kind, precision_bits=128)
        with mp.workprec(160):
            sigma = mp.mpf('0.75')
            direct = mp.fsum(
                seq.eval(j) * (mp.log1p(mp.exp(-j * sigma)) if kind == Kind.SELECTION
                               else -mp.log1p(-mp.exp(-j * sigma)))
                for j in range(1, 1001)
            )
            assert abs(sums.log_normaliser(sigma) / direct - 1) < mp.mpf(10) ** -25

    def test_normaliser_magnitude_in_log2(self):
        sums = ComponentSums(ExplicitFactory(values=[1]), 1)
        assert sums.log2_normaliser_magnitude(math.log(2)) == pytest.approx(math.log2(math.log(2)))
        assert ComponentSums(ExplicitFactory(values=[0]), 1).log2_normaliser_magnitude(1.0) == -math.inf
