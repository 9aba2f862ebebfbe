from rest_framework import serializers

from matrices.serializers import MatrixSerializer, ScalarField


class SmithSerializer(serializers.Serializer):
    P = MatrixSerializer()
    Pinv = MatrixSerializer()
    E = MatrixSerializer()
    Q = MatrixSerializer()
    Qinv = MatrixSerializer()
    inv_factors = serializers.ListField(child=ScalarField())
    rank = serializers.IntegerField()


class HermiteSerializer(serializers.Serializer):
    H = MatrixSerializer()
    W = MatrixSerializer()
    pivot_rows = serializers.ListField(child=serializers.IntegerField())
    rank = serializers.IntegerField()
