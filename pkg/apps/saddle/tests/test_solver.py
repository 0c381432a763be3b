import math

import pytest
from mpmath import mp

from apps.exact import Kind
from apps.saddle import (
    leading_delta, mean_M, partition_sigma_asymptotic, saddle_tolerance, solve_saddle,
)
from apps.sequences.tests.factories import (
    CentralBinomialFactory, ColoredForestsFactory, ExpansiveParamsFactory, ExplicitFactory,
    PartitionsFactory, PlanePartitionsFactory,
)
from enumeration_engine.exceptions import NoSaddle, PrecisionExhausted


class TestSolveSaddle:
    def test_partitions_at_100(self):
        solution = solve_saddle(PartitionsFactory(), 100)
        assert abs(float(solution.sigma) - 0.125755) < 1e-3
        assert abs(solution.residual) <= solution.tolerance
        assert solution.delta == solution.sigma
        assert solution.precision_bits == 128

    def test_two_term_asymptotic(self):
        assert partition_sigma_asymptotic(100) == pytest.approx(0.125755, abs=1e-6)

    def test_residual_meets_tolerance_at_higher_precision(self):
        solution = solve_saddle(PlanePartitionsFactory(), 500, precision_bits=256)
        assert abs(solution.residual) <= saddle_tolerance(500, 256)
        with mp.workprec(256):
            recomputed = mean_M(PlanePartitionsFactory(), 500, solution.sigma, precision_bits=256)
            assert abs(recomputed - 500) <= 2 * saddle_tolerance(500, 256)

    @pytest.mark.parametrize('kind', [Kind.MULTISET, Kind.SELECTION])
    def test_sigma_decreases_and_variance_grows_with_n(self, kind):
        solutions = [solve_saddle(PartitionsFactory(), n, kind) for n in (10, 20, 30)]
        sigmas = [solution.sigma for solution in solutions]
        variances = [solution.B2 for solution in solutions]
        assert sigmas[0] > sigmas[1] > sigmas[2] > 0
        assert variances[0] < variances[1] < variances[2]

    def test_selection_saddle_is_smaller(self):
        seq = ColoredForestsFactory(k=2)
        assert solve_saddle(seq, 50, Kind.SELECTION).sigma < solve_saddle(seq, 50).sigma

    def test_delta_is_offset_from_log_y(self):
        solution = solve_saddle(ColoredForestsFactory(k=2), 400)
        with mp.workprec(128):
            assert abs(solution.delta - (solution.sigma - mp.log(2))) < mp.mpf(10) ** -30
        assert float(solution.delta) == pytest.approx(leading_delta(ColoredForestsFactory(k=2).declared_params(), 400), rel=0.05)

    def test_no_metadata_means_no_delta(self):
        solution = solve_saddle(ExplicitFactory(values=[1, 1, 1, 1, 1]), 20)
        assert solution.delta is None
        assert abs(solution.residual) <= solution.tolerance

    def test_requested_rho_orders(self):
        solution = solve_saddle(CentralBinomialFactory(), 200, rho_orders=(4, 3))
        assert sorted(solution.rho) == [3, 4]
        assert solution.rho[4] > solution.rho[3] > 0

    @pytest.mark.parametrize('factory_class', [PartitionsFactory, ColoredForestsFactory])
    def test_rho_grows_with_n(self, factory_class):
        seq = factory_class()
        rhos = [solve_saddle(seq, n, rho_orders=(3, 4)).rho for n in range(20, 41)]
        for order in (3, 4):
            values = [rho[order] for rho in rhos]
            assert all(earlier <= later for earlier, later in zip(values, values[1:]))

    def test_variance_scaling_for_partitions(self):
        solution = solve_saddle(PartitionsFactory(), 10_000)
        assert float(solution.sigma ** 3 * solution.B2) == pytest.approx(math.pi ** 2 / 3, rel=0.01)

    def test_zero_sequence_has_no_saddle(self):
        with pytest.raises(NoSaddle):
            solve_saddle(ExplicitFactory(values=[0]), 5)

    def test_infeasible_selection(self):
        with pytest.raises(NoSaddle):
            solve_saddle(ExplicitFactory(values=[1]), 5, Kind.SELECTION)

    def test_n_must_be_positive(self):
        with pytest.raises(ValueError):
            solve_saddle(PartitionsFactory(), 0)

    def test_newton_budget_exhausted(self, settings):
        settings.ENUMERATION_CONFIG = {**settings.ENUMERATION_CONFIG, 'NEWTON_MAX_ITER': 0}
        with pytest.raises(PrecisionExhausted):
            solve_saddle(PartitionsFactory(), 50)


def test_leading_delta():
    params = ExpansiveParamsFactory(K=1, r=1, y=2)
    assert leading_delta(params, 100) == pytest.approx(0.1)
    params = ExpansiveParamsFactory(K=1, r=2, y=1)
    assert leading_delta(params, 2000) == pytest.approx(0.1)


def test_tolerance_scales_with_n_and_precision():
    assert saddle_tolerance(10, 128) == 10 * saddle_tolerance(1, 128)
    assert saddle_tolerance(1, 256) < saddle_tolerance(1, 128)
