from rest_framework import serializers

from core.constants import REPORT_SCHEMA
from limit_harness.models import SweepPoint, SweepRun
from limit_harness.records import COLUMNS

STATUSES = ('passed', 'failed', 'incomplete')


class FitSerializer(serializers.Serializer):
    column = serializers.ChoiceField(choices=COLUMNS)
    slope = serializers.FloatField()
    intercept = serializers.FloatField()
    r_squared = serializers.FloatField(min_value=0.0, max_value=1.0)
    prefactor = serializers.FloatField()
    theory = serializers.FloatField(allow_null=True)
    points = serializers.ListField(
        child=serializers.ListField(
            child=serializers.FloatField(), min_length=2, max_length=2
        )
    )


class CriterionSerializer(serializers.Serializer):
    name = serializers.CharField()
    passed = serializers.BooleanField()
    value = serializers.JSONField(allow_null=True)
    threshold = serializers.JSONField(allow_null=True)
    detail = serializers.CharField(allow_blank=True)


class FailureSerializer(serializers.Serializer):
    c = serializers.FloatField()
    error = serializers.CharField()


class FieldDigestSerializer(serializers.Serializer):
    path = serializers.CharField()
    sha256 = serializers.RegexField(r'^[0-9a-f]{64}$')


class ReportSerializer(serializers.Serializer):
    """Executable form of the ndgs-report/1 summary schema."""
    schema = serializers.ChoiceField(choices=(REPORT_SCHEMA,))
    status = serializers.ChoiceField(choices=STATUSES)
    created = serializers.DateTimeField()
    columns = serializers.ListField(child=serializers.CharField())
    row_count = serializers.IntegerField(min_value=0)
    settings = serializers.DictField()
    tolerances = serializers.DictField(child=serializers.FloatField())
    model = serializers.DictField(allow_null=True)
    fits = FitSerializer(many=True)
    criteria = CriterionSerializer(many=True)
    failures = FailureSerializer(many=True)
    field_files = FieldDigestSerializer(many=True)
    refinement = serializers.DictField(
        child=serializers.FloatField(), allow_null=True, required=False
    )

    def validate_columns(self, value):
        if tuple(value) != COLUMNS:
            raise serializers.ValidationError(
                'Columns differ from the sweep record layout.'
            )
        return value

    def validate(self, data):
        criteria = data['criteria']
        if not data['fits'] or not criteria:
            expected = 'incomplete'
        elif all(item['passed'] for item in criteria):
            expected = 'passed'
        else:
            expected = 'failed'
        if data['status'] != expected:
            raise serializers.ValidationError(
                {'status': f'Status must be "{expected}".'}
            )
        return data


class SweepPointSerializer(serializers.ModelSerializer):
    class Meta:
        model = SweepPoint
        fields = ('id', 'run') + COLUMNS
        read_only_fields = fields


class SweepRunSerializer(serializers.ModelSerializer):
    points_count = serializers.IntegerField(read_only=True)

    class Meta:
        model = SweepRun
        fields = (
            'id',
            'kind',
            'p',
            'm',
            'tau',
            'n',
            'box',
            'status',
            'created',
            'csv_path',
            'json_path',
            'points_count',
        )
        read_only_fields = fields


class SweepRunDetailSerializer(SweepRunSerializer):
    points = SweepPointSerializer(many=True, read_only=True)

    class Meta(SweepRunSerializer.Meta):
        fields = SweepRunSerializer.Meta.fields + ('summary', 'points')
        read_only_fields = fields
