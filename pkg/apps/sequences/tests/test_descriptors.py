import json

import pytest

from apps.sequences import Family, format_descriptor, parse_descriptor, read_explicit_file
from enumeration_engine.exceptions import InvalidFamilyParams
from .factories import ExpansiveParamsFactory, ExplicitFactory


class TestParseDescriptor:
    def test_bare_family(self):
        seq = parse_descriptor('partitions')
        assert seq.family == Family.PARTITIONS
        assert seq.descriptor == 'partitions'

    def test_family_with_options(self):
        seq = parse_descriptor('colored-forests:k=2')
        assert seq.eval(3) == 8
        assert seq.descriptor == 'colored-forests:k=2'

    def test_lollipop_fraction(self):
        seq = parse_descriptor('lollipop:alpha=1/2,k=2')
        assert seq.descriptor == 'lollipop:alpha=1/2,k=2'
        assert seq.eval(9) == 3 * 2 ** 6

    def test_power_exp(self):
        seq = parse_descriptor('power-exp:K=1,r=2,y=2')
        assert seq.eval(3) == 24

    def test_explicit_values(self):
        seq = parse_descriptor('explicit:values=0;0;1')
        assert seq.terms(4) == [0, 0, 1, 0]
        assert seq.declared_params() is None

    def test_explicit_metadata(self):
        seq = parse_descriptor('explicit:values=2;4;8,K=1,r=1,y=2')
        params = seq.declared_params()
        assert (params.K, params.r, params.y) == (1, 1, 2)
        assert params.nu is None

    def test_explicit_metadata_needs_all_of_K_r_y(self):
        with pytest.raises(InvalidFamilyParams):
            parse_descriptor('explicit:values=1;2,K=1')

    def test_unknown_family(self):
        with pytest.raises(InvalidFamilyParams, match='unknown sequence family'):
            parse_descriptor('trees')

    def test_custom_cannot_come_from_text(self):
        with pytest.raises(InvalidFamilyParams):
            parse_descriptor('custom')

    def test_malformed_option(self):
        with pytest.raises(InvalidFamilyParams):
            parse_descriptor('colored-forests:k')

    def test_invalid_parameter_value(self):
        with pytest.raises(InvalidFamilyParams):
            parse_descriptor('colored-forests:k=two')


class TestExplicitFile:
    def test_reads_one_integer_per_line(self, tmp_path):
        path = tmp_path / 'aj.txt'
        path.write_text('# a_j for j = 1..3\n1\n\n2\n4\n')
        assert read_explicit_file(path) == [1, 2, 4]
        assert parse_descriptor(f'explicit:file={path}').terms(3) == [1, 2, 4]

    def test_rejects_csv_tables(self, tmp_path):
        path = tmp_path / 'counts.csv'
        path.write_text('n,value\n0,1\n1,1\n')
        with pytest.raises(InvalidFamilyParams):
            read_explicit_file(path)

    def test_rejects_json_dumps(self, tmp_path):
        path = tmp_path / 'counts.json'
        path.write_text(json.dumps({'counts': ['1', '1', '2']}, indent=2))
        with pytest.raises(InvalidFamilyParams):
            parse_descriptor(f'explicit:file={path}')

    def test_rejects_negative_entries(self, tmp_path):
        path = tmp_path / 'aj.txt'
        path.write_text('1\n-2\n')
        with pytest.raises(InvalidFamilyParams, match='negative'):
            read_explicit_file(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(InvalidFamilyParams):
            read_explicit_file(tmp_path / 'missing.txt')


@pytest.mark.parametrize('text', [
    'partitions',
    'plane-partitions',
    'constant:c=3',
    'colored-forests:k=3',
    'parity-colored:k=2',
    'central-binomial',
    'lollipop:alpha=1/3,k=2',
    'partitions-min:s=2',
    'power-exp:K=1,r=1/2,y=2',
])
def test_descriptor_is_canonical(text):
    assert parse_descriptor(text).descriptor == text


def test_explicit_descriptor_carries_metadata():
    seq = ExplicitFactory(values=[2, 4], expansive=ExpansiveParamsFactory(K=1, r=1, y=2, nu=0.5))
    text = format_descriptor(seq)
    assert text == 'explicit:values=2;4,K=1,r=1,y=2,nu=0.5'
    assert parse_descriptor(text).declared_params().nu == 0.5
