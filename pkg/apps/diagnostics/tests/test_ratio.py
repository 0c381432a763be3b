import pytest
from mpmath import mp

from apps.diagnostics import limit_law_check, observed_threshold, ratio_report
from apps.diagnostics.tasks import solve_saddles
from apps.exact import CountTable, Kind, count
from apps.sequences.tests.factories import (
    ColoredForestsFactory, ExplicitFactory, ParityColoredFactory, PartitionsFactory,
)
from enumeration_engine.exceptions import NotExpansive, RangeMismatch


class TestObservedThreshold:
    def test_partitions_never_violate(self):
        assert observed_threshold(count(PartitionsFactory(), 100), 1) == 0

    def test_last_violation(self):
        table = CountTable(Kind.MULTISET, 'explicit', (1, 3, 4, 20, 41))
        assert observed_threshold(table, 2) == 1

    def test_violation_at_the_end_of_the_table(self):
        table = CountTable(Kind.MULTISET, 'explicit', (1, 3, 4))
        assert observed_threshold(table, 2) is None


class TestRatioReport:
    def test_partitions(self):
        seq = PartitionsFactory()
        report = ratio_report(seq, count(seq, 201), solve_saddles(seq, [50, 100, 200]))
        assert report.n_range == (50, 100, 200)
        assert all(ratio < 1 for ratio in report.ratios)
        assert report.deviations[-1] < 0.1
        assert report.threshold_observed == 0

    def test_colored_forests_tend_to_one_over_y(self):
        seq = ColoredForestsFactory(k=2)
        report = ratio_report(seq, count(seq, 201), solve_saddles(seq, [100, 200]))
        assert abs(report.ratios[-1] - mp.mpf(1) / 2) < 0.05
        assert report.deviations[-1] < 0.1
        assert report.threshold_observed is not None

    @pytest.mark.parametrize('factory_class', [ColoredForestsFactory, ParityColoredFactory])
    def test_normalized_ratio_tends_to_one(self, factory_class):
        seq = factory_class()
        report = ratio_report(seq, count(seq, 1001), solve_saddles(seq, [100, 1000]))
        assert report.deviations[1] < report.deviations[0]
        assert report.deviations[1] < 0.01

    def test_counts_must_cover_n_plus_one(self):
        seq = PartitionsFactory()
        with pytest.raises(RangeMismatch):
            ratio_report(seq, count(seq, 100), solve_saddles(seq, [100]))

    def test_kinds_must_agree(self):
        seq = PartitionsFactory()
        with pytest.raises(RangeMismatch):
            ratio_report(seq, count(seq, 50), solve_saddles(seq, [20], Kind.SELECTION))

    def test_needs_saddles(self):
        with pytest.raises(RangeMismatch):
            ratio_report(PartitionsFactory(), count(PartitionsFactory(), 10), [])

    def test_needs_y(self):
        seq = ExplicitFactory(values=[1, 1, 1])
        with pytest.raises(NotExpansive):
            ratio_report(seq, count(seq, 11), solve_saddles(seq, [10]))

    def test_explicit_y(self):
        seq = ExplicitFactory(values=[1, 1, 1])
        report = ratio_report(seq, count(seq, 11), solve_saddles(seq, [10]), y=1)
        assert report.y == 1


class TestLimitLaw:
    @pytest.mark.parametrize('factory_class', [ColoredForestsFactory, ParityColoredFactory])
    def test_hypotheses_hold(self, factory_class):
        verdict = limit_law_check(factory_class(), n_max=300)
        assert verdict.hypotheses_hold_over_sample
        assert verdict.threshold_observed is not None
        assert verdict.final_normalized_deviation < 0.1

    @pytest.mark.slow
    @pytest.mark.parametrize('factory_class', [ColoredForestsFactory, ParityColoredFactory])
    def test_hypotheses_hold_to_1500(self, factory_class):
        verdict = limit_law_check(factory_class(), n_max=1500)
        assert verdict.hypotheses_hold_over_sample
        assert verdict.threshold_observed <= 1500
