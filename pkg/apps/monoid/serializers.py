from rest_framework import serializers

from apps.core.serializers import WordField
from apps.monoid.models import PartialMap


class MonoidElementSerializer(serializers.Serializer):
    id = serializers.IntegerField()
    witness = WordField()
    value = serializers.SerializerMethodField()

    def get_value(self, obj):
        states = self.context['states']
        if isinstance(obj.value, PartialMap):
            return {states[p]: states[q] for p, q in enumerate(obj.value.images) if q >= 0}
        return obj.value.matrix.tolist()


class GreenStructureSerializer(serializers.Serializer):
    size = serializers.SerializerMethodField()
    minimal_rank = serializers.IntegerField(allow_null=True)
    has_zero = serializers.BooleanField()
    elements = serializers.SerializerMethodField()
    ranks = serializers.ListField(child=serializers.IntegerField())
    r_class = serializers.ListField(child=serializers.IntegerField())
    l_class = serializers.ListField(child=serializers.IntegerField())
    h_class = serializers.ListField(child=serializers.IntegerField())
    d_class = serializers.ListField(child=serializers.IntegerField())
    idempotents = serializers.ListField(child=serializers.IntegerField())
    ideal = serializers.ListField(child=serializers.IntegerField())
    suschkevitch_order = serializers.SerializerMethodField()

    def get_size(self, obj):
        return len(obj)

    def get_elements(self, obj):
        return MonoidElementSerializer(obj.elements, many=True, context={'states': obj.states}).data

    def get_suschkevitch_order(self, obj):
        return obj.suschkevitch.order if obj.suschkevitch else None


class EggboxSerializer(serializers.Serializer):
    rows = serializers.ListField(child=serializers.CharField())
    columns = serializers.ListField(child=serializers.CharField())
    cells = serializers.SerializerMethodField()

    def get_cells(self, obj):
        return [{'row': r, 'column': c, 'witness': WordField().to_representation(cell.witness),
                 'idempotent': cell.idempotent}
                for (r, c), cell in obj.cells.items()]
