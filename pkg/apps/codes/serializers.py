from rest_framework import serializers

from apps.automata.serializers import DfaSerializer
from apps.birecurrence.serializers import word_set
from apps.core.serializers import OutcomeField, RationalField, WordField, WordListField


class CodeCheckSerializer(serializers.Serializer):
    verdict = serializers.BooleanField()
    witness = serializers.ListField(child=WordField(allow_blank=True), allow_null=True)


class PureSquareSerializer(serializers.Serializer):
    w = WordField()
    x = WordField()
    G = WordListField()
    D = WordListField()


class DpSetSerializer(serializers.Serializer):
    x = WordListField()
    y = WordListField()
    left_root = serializers.SerializerMethodField()
    P = serializers.SerializerMethodField()
    right_root = serializers.SerializerMethodField()
    Q = serializers.SerializerMethodField()
    automaton = DfaSerializer()

    def get_left_root(self, obj):
        return word_set(obj.decomposition.left_root)

    def get_P(self, obj):
        return word_set(obj.decomposition.prefix_part)

    def get_right_root(self, obj):
        return word_set(obj.decomposition.right_root)

    def get_Q(self, obj):
        return word_set(obj.decomposition.suffix_part)


class VincentReportSerializer(serializers.Serializer):
    nfa_states = serializers.SerializerMethodField()
    states = serializers.SerializerMethodField()
    x = WordListField()
    y = WordListField()
    u = WordListField()
    identities = serializers.ListField(child=serializers.CharField())
    birecurrent = serializers.BooleanField()
    finite_type = serializers.BooleanField()
    automaton = DfaSerializer()

    def get_nfa_states(self, obj):
        return len(obj.nfa.states)

    def get_states(self, obj):
        return len(obj.automaton.states)


class ConjectureResultSerializer(serializers.Serializer):
    outcome = OutcomeField()
    found = serializers.BooleanField()
    M = WordListField(source='m', allow_null=True)
    N = WordListField(source='n', allow_null=True)
    index = RationalField(allow_null=True)
    measures = serializers.DictField(child=RationalField())
    reason = serializers.CharField(allow_blank=True)
