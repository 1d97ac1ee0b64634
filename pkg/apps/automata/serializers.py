from rest_framework import serializers

from apps.core.serializers import RationalField


class _AutomatonSerializer(serializers.Serializer):
    alphabet = serializers.ListField(source='alphabet.letters', child=serializers.CharField())
    states = serializers.ListField(child=serializers.CharField())
    transitions = serializers.SerializerMethodField()

    def get_transitions(self, obj):
        return [list(edge) for edge in obj.edges()]


class DfaSerializer(_AutomatonSerializer):
    initial = serializers.CharField(allow_null=True)
    final = serializers.SerializerMethodField()
    # subset states of a determinized or reversed automaton
    members = serializers.SerializerMethodField()

    def get_final(self, obj):
        return [q for q in obj.states if q in obj.terminal]

    def get_members(self, obj):
        if not obj.members:
            return None
        return {q: list(obj.members[q]) for q in obj.states if q in obj.members}


class NfaSerializer(_AutomatonSerializer):
    initial = serializers.SerializerMethodField()
    final = serializers.SerializerMethodField()

    def get_transitions(self, obj):
        return [list(edge) for edge in obj.sorted_edges()]

    def get_initial(self, obj):
        return [q for q in obj.states if q in obj.initials]

    def get_final(self, obj):
        return [q for q in obj.states if q in obj.terminals]


class ScalarOutputDfaSerializer(_AutomatonSerializer):
    initial = serializers.CharField(allow_null=True)
    output = serializers.SerializerMethodField()

    def get_transitions(self, obj):
        return [[q, x, obj.delta[(q, x)]] for q in obj.states for x in obj.alphabet if (q, x) in obj.delta]

    def get_output(self, obj):
        field = RationalField()
        return {q: field.to_representation(obj.tau[q]) for q in obj.states if obj.tau.get(q, 0)}
