from rest_framework import serializers


class CheckResultSerializer(serializers.Serializer):
    name = serializers.CharField()
    passed = serializers.BooleanField()
    detail = serializers.CharField(allow_blank=True)


class BatteryReportSerializer(serializers.Serializer):
    passed = serializers.BooleanField()
    checks = CheckResultSerializer(many=True)
