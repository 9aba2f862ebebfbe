from django.conf import settings
from rest_framework import serializers

from rings.domains import RING_CHOICES, get_ring


class ScalarField(serializers.Field):
    """스칼라를 리터럴 문자열로 직렬화합니다. 환은 context['ring'] 에서 가져옵니다."""

    def to_representation(self, value):
        return self.context['ring'].format(value)


class MatrixSerializer(serializers.Serializer):
    rows = serializers.IntegerField(min_value=0)
    cols = serializers.IntegerField(min_value=0)
    entries = serializers.ListField(child=serializers.ListField(child=serializers.CharField()))

    def to_representation(self, matrix):
        return {
            'rows': matrix.rows,
            'cols': matrix.cols,
            'entries': [[matrix.ring.format(e) for e in matrix.row(i)] for i in range(matrix.rows)],
        }


class CliConfigSerializer(serializers.Serializer):
    """CLI 공통 옵션 검증"""
    ring = serializers.ChoiceField(choices=RING_CHOICES, default=settings.BEZOUT.get('DEFAULT_RING', 'int'))
    json = serializers.BooleanField(default=False)
    seed = serializers.IntegerField(required=False, allow_null=True)
    trials = serializers.IntegerField(min_value=1, required=False, allow_null=True)
    witness = serializers.BooleanField(default=False)

    def validate(self, data):
        # 시드가 없으면 재현성을 위해 고정값 사용
        if data.get('seed') is None:
            data['seed'] = settings.BEZOUT.get('DEFAULT_SEED', 7)
        data['ring'] = get_ring(data['ring'])
        return data
