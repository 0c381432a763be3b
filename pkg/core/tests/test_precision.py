import json
from fractions import Fraction

import pytest
from mpmath import mp

from core.commands import parse_n_values
from core.output import read_csv_rows, render_csv, render_json, render_plot_data
from core.precision import LogValue, format_real, resolve_precision, to_fraction, to_mpf
from enumeration_engine.exceptions import UsageError


class TestPrecision:
    def test_configured_default(self, settings):
        settings.ENUMERATION_CONFIG = {**settings.ENUMERATION_CONFIG, 'PRECISION_BITS': 192}
        assert resolve_precision() == 192
        assert resolve_precision(256) == 256

    def test_to_mpf_is_exact_for_dyadic_fractions(self):
        assert to_mpf(Fraction(3, 4)) == 0.75

    def test_to_fraction(self):
        assert to_fraction('2.5') == Fraction(5, 2)
        assert to_fraction(0.1) == Fraction(1, 10)
        assert to_fraction('1/3') == Fraction(1, 3)

    def test_format_real(self):
        assert format_real(2, 128) == '2'
        assert format_real(None, 128) is None
        with mp.workprec(128):
            third = mp.mpf(1) / 3
        assert format_real(third, 128).startswith('0.3333333333333333333333333333333333')


class TestLogValue:
    def test_relative_error(self):
        assert float(LogValue.from_int(11, 128).relerr(LogValue.from_int(10, 128))) == pytest.approx(0.1)

    def test_handles_huge_integers(self):
        value = LogValue.from_int(10 ** 5000, 128)
        assert float(value.log10) == pytest.approx(5000)

    def test_must_be_finite(self):
        with pytest.raises(ValueError):
            LogValue(mp.inf)

    def test_nonpositive_integers(self):
        with pytest.raises(ValueError):
            LogValue.from_int(0, 128)


class TestOutput:
    def test_json_carries_schema_version(self):
        text = render_json({'n': 1})
        assert json.loads(text) == {'schema_version': 1, 'n': 1}
        assert text.index('schema_version') < text.index('"n"')

    def test_csv_round_trip(self):
        text = render_csv([(0, '1'), (1, '3/4')])
        assert text == 'n,value\n0,1\n1,3/4\n'
        assert read_csv_rows(text) == [(0, '1'), (1, '3/4')]

    def test_plot_data(self):
        assert render_plot_data([(1, '2')], ('n', 'sigma')) == '# n sigma\n1 2\n'

    def test_csv_needs_header(self):
        with pytest.raises(ValueError):
            read_csv_rows('1,2\n')


class TestNValues:
    def test_list(self):
        assert parse_n_values('50, 100,200') == [50, 100, 200]

    def test_range(self):
        assert parse_n_values('10:30:10') == [10, 20, 30]
        assert parse_n_values('1:3') == [1, 2, 3]

    @pytest.mark.parametrize('text', ['1:2:3:4', 'ten', '1:5:0'])
    def test_malformed(self, text):
        with pytest.raises(UsageError):
            parse_n_values(text)
