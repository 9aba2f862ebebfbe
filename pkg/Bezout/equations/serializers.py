from rest_framework import serializers

from matrices.serializers import MatrixSerializer


class SolveResultSerializer(serializers.Serializer):
    solvable = serializers.BooleanField()
    n = serializers.IntegerField()
    k = serializers.IntegerField()
    t = serializers.IntegerField()
    failing_cell = serializers.ListField(child=serializers.IntegerField(), allow_null=True)
    X = MatrixSerializer(allow_null=True)


class GcdLcmSerializer(serializers.Serializer):
    F = MatrixSerializer()
    N = MatrixSerializer()
    K = MatrixSerializer()


class DivisibilitySerializer(serializers.Serializer):
    divides = serializers.BooleanField()
    side = serializers.ChoiceField(choices=['left', 'right'])
    witness = MatrixSerializer(allow_null=True)
