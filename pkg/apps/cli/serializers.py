from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from apps.multipoly.polynomial import format_polynomial


class PolynomialField(serializers.Field):
    """Canonical text of a Polynomial."""

    def to_representation(self, value):
        return format_polynomial(value)


class ElementField(serializers.Field):
    """A raw field element (Fraction or residue) as text."""

    def to_representation(self, value):
        return str(value)


class TextField(serializers.Field):
    def to_representation(self, value):
        return str(value)


class HilbertRowSerializer(serializers.Serializer):
    k = serializers.IntegerField()
    ideal_dimension = serializers.IntegerField()
    quotient_dimension = serializers.IntegerField()


class SmoothnessVerdictSerializer(serializers.Serializer):
    status = serializers.CharField()
    method = serializers.CharField()
    detail = serializers.IntegerField()
    certified_modulo = serializers.IntegerField(allow_null=True)
    quotient_dimensions = serializers.DictField(child=serializers.IntegerField())


class MultiplicationMapSerializer(serializers.Serializer):
    form = PolynomialField()
    source_degree = serializers.IntegerField()
    target_degree = serializers.IntegerField()
    source_dimension = serializers.SerializerMethodField()
    target_dimension = serializers.SerializerMethodField()
    rank = serializers.IntegerField()
    kernel_dimension = serializers.IntegerField()
    injective = serializers.BooleanField(source='is_injective')
    kernel = serializers.ListField(child=PolynomialField(), source='kernel_polynomials')

    def get_source_dimension(self, obj):
        return len(obj.source_basis)

    def get_target_dimension(self, obj):
        return len(obj.target_basis)


class WlpWitnessSerializer(serializers.Serializer):
    outcome = serializers.CharField()
    form = PolynomialField(allow_null=True)
    degree = serializers.IntegerField()
    trials = serializers.IntegerField()
    failures = serializers.SerializerMethodField()

    def get_failures(self, obj):
        return [{'form': format_polynomial(L), 'kernel_dimension': k} for L, k in obj.failures]


class EtaleVerdictSerializer(serializers.Serializer):
    status = serializers.CharField()
    wlp_kernel_dimension = serializers.IntegerField(allow_null=True)
    tangent_kernel_dimension = serializers.IntegerField(allow_null=True)
    crosscheck_passed = serializers.BooleanField(allow_null=True)
    jacobian_dimensions = serializers.DictField(child=serializers.IntegerField())
    wlp_kernel = serializers.ListField(child=PolynomialField())
    tangent_kernel = serializers.ListField(child=TextField())


class DemoReportSerializer(serializers.Serializer):
    name = serializers.CharField()
    passed = serializers.BooleanField()
    checks = serializers.DictField(child=serializers.BooleanField())
    details = serializers.DictField()


class ProbeRecordSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    d = serializers.IntegerField()
    char = serializers.IntegerField()
    sample = serializers.IntegerField()
    seed = serializers.IntegerField()
    smooth = serializers.CharField()
    wlp_injective = serializers.BooleanField(allow_null=True)
    kernel_dim = serializers.IntegerField(allow_null=True)


class ReportEnvelopeSerializer(serializers.Serializer):
    tool_version = serializers.CharField()
    command = serializers.CharField()
    arguments = serializers.DictField()
    field = serializers.CharField(allow_null=True)
    input = PolynomialField(allow_null=True)
    result = serializers.JSONField()
    timing = serializers.DictField()


def render_json(data):
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode()
