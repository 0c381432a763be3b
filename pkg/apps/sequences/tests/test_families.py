import math
from fractions import Fraction

import pytest
from mpmath import mp

from apps.sequences import Family, expansive_bounds, make_sequence
from apps.sequences.families import lollipop_tree_size
from enumeration_engine.exceptions import InvalidFamilyParams, InvalidSequenceValue
from .factories import (
    BUILTIN_FACTORIES, CentralBinomialFactory, ColoredForestsFactory, ExpansiveParamsFactory,
    ExplicitFactory, LollipopFactory, ParityColoredFactory, PartitionsFactory,
    PlanePartitionsFactory, PowerExpFactory,
)


class TestEval:
    def test_partitions_are_all_ones(self):
        assert PartitionsFactory().eval(7) == 1

    def test_colored_forests(self):
        assert ColoredForestsFactory(k=2).eval(3) == 8

    def test_parity_colored_repeats_odd_terms(self):
        seq = ParityColoredFactory(k=3)
        assert seq.eval(4) == 81
        assert seq.eval(5) == 81

    def test_central_binomial(self):
        assert CentralBinomialFactory().eval(4) == 6
        assert CentralBinomialFactory().eval(5) == 10

    def test_plane_partitions(self):
        assert PlanePartitionsFactory().eval(5) == 5

    def test_explicit_pads_with_zeros(self):
        seq = ExplicitFactory(values=[0, 0, 1])
        assert seq.terms(5) == [0, 0, 1, 0, 0]

    def test_lollipop_alpha_zero_is_a_path_with_colors(self):
        seq = LollipopFactory(alpha=0, k=3)
        assert [seq.eval(j) for j in range(1, 5)] == [1, 3, 9, 27]

    def test_lollipop_tree_size_snaps_exact_powers(self):
        assert lollipop_tree_size(8, Fraction(1, 3)) == 2
        assert lollipop_tree_size(9, Fraction(1, 2)) == 3
        assert lollipop_tree_size(10, Fraction(1, 2)) == 3

    def test_power_exp_rounds(self):
        seq = PowerExpFactory(K=1, r=2, y=2)
        assert seq.terms(4) == [2, 8, 24, 64]

    def test_partitions_min_part(self):
        seq = make_sequence(Family.PARTITIONS_MIN_PART, s=3)
        assert seq.terms(4) == [0, 0, 1, 1]

    def test_rejects_nonpositive_index(self):
        with pytest.raises(ValueError):
            PartitionsFactory().eval(0)

    def test_custom_callback_is_memoized(self):
        calls = []

        def triangular(j):
            calls.append(j)
            return j * (j + 1) // 2

        seq = make_sequence(Family.CUSTOM, callback=triangular)
        assert seq.eval(4) == 10
        assert seq.eval(4) == 10
        assert calls == [4]

    def test_custom_negative_value_is_rejected(self):
        seq = make_sequence(Family.CUSTOM, callback=lambda j: -1)
        with pytest.raises(InvalidSequenceValue):
            seq.eval(1)

    def test_custom_non_integer_value_is_rejected(self):
        seq = make_sequence(Family.CUSTOM, callback=lambda j: 0.5)
        with pytest.raises(InvalidSequenceValue):
            seq.eval(2)


class TestValidation:
    def test_colored_forests_need_positive_k(self):
        with pytest.raises(InvalidFamilyParams):
            ColoredForestsFactory(k=0)

    def test_lollipop_alpha_range(self):
        with pytest.raises(InvalidFamilyParams):
            LollipopFactory(alpha=2)

    def test_explicit_negative_entry(self):
        with pytest.raises(InvalidFamilyParams):
            ExplicitFactory(values=[1, -1])

    def test_power_exp_needs_all_parameters(self):
        with pytest.raises(InvalidFamilyParams):
            make_sequence(Family.POWER_EXP, K=1, r=1)

    def test_custom_needs_callable(self):
        with pytest.raises(InvalidFamilyParams):
            make_sequence(Family.CUSTOM, callback=None)

    def test_expansive_params_reject_y_below_one(self):
        with pytest.raises(InvalidFamilyParams):
            ExpansiveParamsFactory(y=0.5)

    def test_expansive_params_reject_nu_outside_unit_interval(self):
        with pytest.raises(InvalidFamilyParams):
            ExpansiveParamsFactory(nu=1)


class TestDeclaredParams:
    def test_colored_forests(self):
        params = ColoredForestsFactory(k=2).declared_params()
        assert (params.K, params.r, params.y) == (1, 1, 2)
        assert params.nu is not None

    def test_central_binomial(self):
        params = CentralBinomialFactory().declared_params()
        assert params.K == pytest.approx(math.sqrt(2 / math.pi))
        assert params.r == 0.5
        assert params.y == 2

    def test_parity_colored_band(self):
        params = ParityColoredFactory(k=2).declared_params()
        assert params.r == 1
        assert params.r1 == pytest.approx(2 / 3)
        assert params.r2 == 1
        assert params.oscillating
        assert params.nu is None

    def test_lollipop_remainder_exponent_only_without_tree(self):
        # alpha = 0 makes a_j = k^(j-1) exactly
        assert LollipopFactory(alpha=0, k=3).declared_params().nu == 0.5
        assert LollipopFactory().declared_params().nu is None

    def test_explicit_has_none(self):
        assert ExplicitFactory().declared_params() is None

    def test_metadata_overrides(self):
        seq = ExplicitFactory(values=[1, 2, 4], expansive=ExpansiveParamsFactory(K=1, r=1, y=2))
        assert seq.declared_params().y == 2

    def test_with_params_keeps_values(self):
        seq = ExplicitFactory(values=[1, 2, 4]).with_params(ExpansiveParamsFactory())
        assert seq.terms(3) == [1, 2, 4]
        assert seq.declared_params().K == 1


@pytest.mark.parametrize('factory_class', BUILTIN_FACTORIES)
def test_declared_bounds_hold(factory_class):
    seq = factory_class()
    params = seq.declared_params()
    if params is None or params.d1 is None or params.d2 is None:
        pytest.skip(f"{seq.descriptor} declares no explicit bounds")
    lower, upper = expansive_bounds(seq, j_max=1000)
    assert lower >= params.d1 - 1e-9
    assert upper <= params.d2 + 1e-9


@pytest.mark.parametrize('factory_class', [
    CentralBinomialFactory, LollipopFactory, PowerExpFactory, ColoredForestsFactory,
])
def test_log_eval_matches_exact_value(factory_class):
    seq = factory_class()
    for j in (1, 10, 65, 100):
        assert seq.log_eval(j) == pytest.approx(float(mp.log(seq.eval(j))), rel=1e-12)


@pytest.mark.parametrize('factory_class', [
    PartitionsFactory, ColoredForestsFactory, CentralBinomialFactory, LollipopFactory,
])
def test_iter_weights_matches_eval(factory_class):
    seq = factory_class()
    with mp.workprec(200):
        for j, weight in seq.iter_weights(5, 40):
            assert weight == seq.eval(j)
