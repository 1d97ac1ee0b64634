from rest_framework import serializers

from apps.automata.serializers import DfaSerializer, ScalarOutputDfaSerializer
from apps.core.serializers import MatrixField, OutcomeField, RationalField, VectorField, WordField


class LinearRepresentationSerializer(serializers.Serializer):
    dim = serializers.IntegerField()
    alphabet = serializers.ListField(source='alphabet.letters', child=serializers.CharField())
    lam = VectorField()
    gamma = VectorField()
    mu = serializers.SerializerMethodField()

    def get_mu(self, obj):
        field = MatrixField()
        return {letter: field.to_representation(obj.mu[letter]) for letter in obj.alphabet}


class MinimalRepresentationSerializer(serializers.Serializer):
    original_dim = serializers.IntegerField()
    rep = LinearRepresentationSerializer()
    row_words = serializers.ListField(child=WordField(allow_blank=True))
    column_words = serializers.ListField(child=WordField(allow_blank=True))


class ReducibilityVerdictSerializer(serializers.Serializer):
    outcome = OutcomeField()
    completely_reducible = serializers.BooleanField(source='verdict', allow_null=True)
    ek_dim = serializers.IntegerField()
    er_dim = serializers.IntegerField()
    meet_dim = serializers.IntegerField(allow_null=True)
    certificate = VectorField(allow_null=True)
    reason = serializers.CharField(allow_blank=True)


class DecompositionTermSerializer(serializers.Serializer):
    coefficient = RationalField()
    terminal = serializers.ListField(child=serializers.CharField())
    automaton = DfaSerializer()


class DecompositionResultSerializer(serializers.Serializer):
    outcome = OutcomeField()
    terms = DecompositionTermSerializer(many=True)
    verified_bound = serializers.IntegerField(allow_null=True)
    reason = serializers.CharField(allow_blank=True)


class IntegerSearchSerializer(serializers.Serializer):
    outcome = OutcomeField()
    max_coefficient = serializers.IntegerField()
    candidates = serializers.ListField(child=serializers.ListField(child=serializers.CharField()))
    coefficients = serializers.SerializerMethodField()
    reason = serializers.CharField(allow_blank=True)

    def get_coefficients(self, obj):
        if obj.coefficients is None:
            return None
        return [{'terminal': list(t), 'coefficient': c} for t, c in obj.coefficients.items()]


class CR2TermSerializer(serializers.Serializer):
    coefficient = RationalField()
    x = WordField(allow_blank=True)
    y = WordField(allow_blank=True)


class CR2TraceSerializer(serializers.Serializer):
    outcome = OutcomeField()
    u = WordField(allow_null=True)
    v = WordField(allow_null=True)
    birecurrent = ScalarOutputDfaSerializer(allow_null=True)
    X = serializers.SerializerMethodField()
    Y = serializers.SerializerMethodField()
    terms = CR2TermSerializer(many=True)
    verified_bound = serializers.IntegerField(allow_null=True)
    invariant_subspace = serializers.ListField(child=VectorField(), allow_null=True)
    reason = serializers.CharField(allow_blank=True)

    def _polynomial(self, terms):
        return [[WordField().to_representation(w), RationalField().to_representation(c)] for w, c in terms.items()]

    def get_X(self, obj):
        return self._polynomial(obj.x_terms)

    def get_Y(self, obj):
        return self._polynomial(obj.y_terms)


class IrreducibleCountSerializer(serializers.Serializer):
    outcome = OutcomeField()
    count = serializers.IntegerField(allow_null=True)
    dimensions = serializers.ListField(child=serializers.IntegerField())
    group_order = serializers.IntegerField(allow_null=True)
    reason = serializers.CharField(allow_blank=True)
