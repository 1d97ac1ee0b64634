"""Serializer fields shared by every app, and the JSON renderer used by the CLI."""
from fractions import Fraction

from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from apps.automata.models import EPSILON_TOKEN, format_word
from apps.core.linalg import format_fraction


class RationalField(serializers.Field):
    """Exact rational rendered as "p/q" (or "p" for integers)."""

    def to_representation(self, value):
        return format_fraction(value)

    def to_internal_value(self, data):
        try:
            return Fraction(str(data))
        except (ValueError, ZeroDivisionError):
            raise serializers.ValidationError(f"not a rational: {data!r}")


class WordField(serializers.CharField):
    def to_representation(self, value):
        return format_word(value)

    def to_internal_value(self, data):
        data = super().to_internal_value(data)
        return '' if data == EPSILON_TOKEN else data


class WordListField(serializers.ListField):
    """Finite word set, listed in length-lex order."""

    child = WordField(allow_blank=True)

    def to_representation(self, data):
        return [self.child.to_representation(w) for w in sorted(data, key=lambda w: (len(w), w))]


class VectorField(serializers.ListField):
    child = RationalField()


class MatrixField(serializers.ListField):
    child = VectorField()


class OutcomeField(serializers.Field):
    def to_representation(self, value):
        return value.value


def render_json(data) -> str:
    """Two-space indented JSON; identical data always gives identical text."""
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8')
