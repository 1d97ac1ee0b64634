from rest_framework import serializers

from apps.core.serializers import WordField


class UnambiguityWitnessSerializer(serializers.Serializer):
    unambiguous = serializers.BooleanField(source='verdict')
    witness = WordField(allow_null=True)
    paths = serializers.ListField(child=serializers.ListField(child=serializers.CharField()), allow_null=True)


class UnambiguousRecurrenceSerializer(serializers.Serializer):
    delta_strongly_connected = serializers.BooleanField()
    reversal_strongly_connected = serializers.BooleanField()
    witness_x = WordField(allow_null=True)
    witness_y = WordField(allow_null=True)
    minimal_rank = serializers.IntegerField(allow_null=True)
    birecurrent = serializers.BooleanField()
