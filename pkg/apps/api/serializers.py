"""
Serializers for command payloads
"""

from rest_framework import serializers

from apps.diagnostics import within_tolerance
from apps.exact import Kind
from core.precision import format_real


class DecimalStringField(serializers.Field):
    """High-precision real rendered as a decimal string at the payload's precision"""

    def to_representation(self, value):
        return format_real(value, self.context.get('precision_bits', 128))


class RunConfigSerializer(serializers.Serializer):
    """Validates the options shared by every command"""

    OUTPUT_FORMATS = ['json', 'csv', 'plot-data']

    seq = serializers.CharField(required=False)
    kind = serializers.ChoiceField(choices=Kind.choices, default=Kind.MULTISET)
    n = serializers.IntegerField(required=False, min_value=0)
    n_values = serializers.ListField(child=serializers.IntegerField(min_value=1), required=False)
    precision = serializers.IntegerField(min_value=64)
    format = serializers.ChoiceField(choices=OUTPUT_FORMATS, default='json')
    output = serializers.CharField(required=False, allow_null=True)

    def validate_n_values(self, value):
        if not value:
            raise serializers.ValidationError('n-range must not be empty')
        return sorted(set(value))


class CountTableSerializer(serializers.Serializer):
    """Serializer for exact count tables"""

    kind = serializers.CharField()
    seq_id = serializers.CharField()
    N = serializers.IntegerField()
    counts = serializers.SerializerMethodField()

    def get_counts(self, obj):
        return [str(value) for value in obj.counts]


class BruteForceSerializer(serializers.Serializer):
    kind = serializers.CharField()
    seq_id = serializers.CharField()
    n = serializers.IntegerField()
    count = serializers.SerializerMethodField()

    def get_count(self, obj):
        return str(obj['count'])


class StarSequenceSerializer(serializers.Serializer):
    """Serializer for star-transform terms as exact fractions"""

    seq_id = serializers.CharField()
    N = serializers.IntegerField()
    terms = serializers.SerializerMethodField()

    def get_terms(self, obj):
        return [str(value) for value in obj['star'].terms]


class SaddleSolutionSerializer(serializers.Serializer):
    """Serializer for saddle solutions"""

    n = serializers.IntegerField()
    kind = serializers.CharField()
    sigma = DecimalStringField()
    delta = DecimalStringField()
    residual = DecimalStringField()
    B2 = DecimalStringField()
    rho = serializers.SerializerMethodField()
    precision_bits = serializers.IntegerField()

    def get_rho(self, obj):
        return {
            str(order): format_real(value, obj.precision_bits)
            for order, value in sorted(obj.rho.items())
        }


class EstimateSerializer(serializers.Serializer):
    """Serializer for log-space estimates of c_n"""

    n = serializers.IntegerField()
    log_e = DecimalStringField(source='value.log_e')
    log10 = DecimalStringField(source='value.log10')
    formula = serializers.CharField()
    exact = serializers.SerializerMethodField()
    relative_error = DecimalStringField(required=False)

    def get_exact(self, obj):
        exact = obj.get('exact')
        return str(exact) if exact is not None else None


class ClosedFormConstantsSerializer(serializers.Serializer):
    """Serializer for kappa1, kappa2 and the provenance of kappa1"""

    kind = serializers.CharField()
    K = DecimalStringField()
    r = DecimalStringField()
    y = DecimalStringField()
    kappa1 = DecimalStringField()
    kappa2 = DecimalStringField()
    exponent_poly = DecimalStringField()
    exponent_power = DecimalStringField()
    provenance = serializers.SerializerMethodField()

    def get_provenance(self, obj):
        return {
            key: str(value) if isinstance(value, int) else format_real(value, obj.precision_bits)
            for key, value in obj.provenance.items()
        }


class ScalarSerializer(serializers.Serializer):
    method = serializers.CharField()
    value = DecimalStringField()


class IdentitySampleSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    sigma = DecimalStringField()
    log_reconstructed = DecimalStringField()
    log_exact = DecimalStringField()
    abs_log_error = DecimalStringField()


class IdentityReportSerializer(serializers.Serializer):
    """Serializer for the Khintchine identity check against exact counts"""

    seq_id = serializers.CharField()
    kind = serializers.CharField()
    samples = IdentitySampleSerializer(many=True)
    max_abs_log_error = DecimalStringField()


class RatioReportSerializer(serializers.Serializer):
    """Serializer for ratio-law reports"""

    seq_id = serializers.CharField()
    kind = serializers.CharField()
    y = DecimalStringField()
    n_range = serializers.ListField(child=serializers.IntegerField())
    ratios = serializers.ListField(child=DecimalStringField())
    normalized = serializers.ListField(child=DecimalStringField())
    threshold_observed = serializers.IntegerField(allow_null=True)
    precision_bits = serializers.IntegerField()


class LimitLawVerdictSerializer(serializers.Serializer):
    seq_id = serializers.CharField()
    kind = serializers.CharField()
    y = DecimalStringField()
    n_max = serializers.IntegerField()
    hypotheses_hold_over_sample = serializers.BooleanField()
    threshold_observed = serializers.IntegerField(allow_null=True)
    final_normalized_deviation = DecimalStringField()


class ScalingReportSerializer(serializers.Serializer):
    """Serializer for log-log slope fits"""

    quantity = serializers.CharField()
    samples = serializers.SerializerMethodField()
    fitted_slope = DecimalStringField()
    expected_slope = DecimalStringField()
    deviation = DecimalStringField()
    band = serializers.ListField(child=DecimalStringField(), allow_null=True)
    within_tolerance = serializers.SerializerMethodField()

    def get_samples(self, obj):
        bits = self.context.get('precision_bits', 128)
        return [{'n': n, 'value': format_real(value, bits)} for n, value in obj.samples]

    def get_within_tolerance(self, obj):
        return within_tolerance(obj, self.context.get('tolerance'))


class TrendReportSerializer(serializers.Serializer):
    """Serializer for quantities expected to tend to 1 (local limit, exponent identity)"""

    seq_id = serializers.CharField()
    kind = serializers.CharField()
    samples = serializers.SerializerMethodField()
    final_deviation = DecimalStringField()
    decreasing = serializers.BooleanField()

    def get_samples(self, obj):
        bits = self.context.get('precision_bits', 128)
        return [
            {'n': n, 'value': format_real(value, bits), 'deviation': format_real(deviation, bits)}
            for n, value, deviation in obj.samples
        ]


class FittedParamsSerializer(serializers.Serializer):
    seq_id = serializers.CharField()
    K = DecimalStringField()
    r = DecimalStringField()
    y = DecimalStringField()
    residual_rms = DecimalStringField()
    j_min = serializers.IntegerField()
    j_max = serializers.IntegerField()
