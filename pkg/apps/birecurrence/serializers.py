from rest_framework import serializers

from apps.core.serializers import RationalField, WordField, WordListField


def word_set(value):
    if value is None:
        return None
    if not value.finite:
        return 'infinite'
    return WordListField().to_representation(value.words)


class BirecurrenceReportSerializer(serializers.Serializer):
    states = serializers.IntegerField()
    recurrent = serializers.BooleanField()
    birecurrent = serializers.BooleanField()
    degree = serializers.IntegerField(allow_null=True)
    k = serializers.IntegerField(allow_null=True)
    index = RationalField(allow_null=True)
    dense = serializers.BooleanField()
    density = RationalField(allow_null=True)
    finite_type = serializers.BooleanField()
    left_root = serializers.SerializerMethodField()
    P = serializers.SerializerMethodField()
    right_root = serializers.SerializerMethodField()
    Q = serializers.SerializerMethodField()
    saturating_word = WordField(allow_null=True)
    reversal_index = RationalField(allow_null=True)
    left_root_degree = serializers.IntegerField(allow_null=True)

    def _part(self, obj, name):
        return word_set(getattr(obj.decomposition, name)) if obj.decomposition else None

    def get_left_root(self, obj):
        return self._part(obj, 'left_root')

    def get_P(self, obj):
        return self._part(obj, 'prefix_part')

    def get_right_root(self, obj):
        return self._part(obj, 'right_root')

    def get_Q(self, obj):
        return self._part(obj, 'suffix_part')


class IndecomposabilitySerializer(serializers.Serializer):
    kind = serializers.CharField()
    degree = serializers.IntegerField(allow_null=True)
    witness_code = WordListField(allow_null=True)
    congruence = serializers.ListField(child=serializers.ListField(child=serializers.CharField()),
                                       allow_null=True)
    method = serializers.CharField(allow_null=True)
    terminal = serializers.ListField(child=serializers.CharField(), allow_null=True)
    finite_type = serializers.BooleanField(allow_null=True)
