from django.conf import settings
from rest_framework import serializers

from generators.seeds import MAX_SEED
from measures.selectors import MeasureSelector


class MeasureListField(serializers.Field):
    """Comma-separated measure ids such as "ARI,AMI,ARI(G)" or a list of ids"""

    def to_internal_value(self, data):
        try:
            return MeasureSelector.parse_list(data)
        except (ValueError, TypeError) as exc:
            raise serializers.ValidationError(str(exc))

    def to_representation(self, value):
        return [selector.label for selector in value]


class IntegerListField(serializers.Field):
    """Comma-separated integers, or a range "start:stop[:step]" with stop
    included"""

    def to_internal_value(self, data):
        if isinstance(data, (list, tuple)):
            items = list(data)
        else:
            text = str(data).strip()
            try:
                if ":" in text:
                    bounds = [int(part) for part in text.split(":")]
                    if len(bounds) not in (2, 3) or (len(bounds) == 3 and bounds[2] <= 0):
                        raise ValueError
                    start, stop, step = bounds[0], bounds[1], bounds[2] if len(bounds) == 3 else 1
                    items = list(range(start, stop + 1, step))
                else:
                    items = [part for part in text.split(",") if part.strip()]
            except ValueError:
                raise serializers.ValidationError(f"malformed integer range {text!r}")
        try:
            values = [int(item) for item in items]
        except (TypeError, ValueError):
            raise serializers.ValidationError("expected comma-separated integers")
        if not values:
            raise serializers.ValidationError("at least one value is required")
        return values

    def to_representation(self, value):
        return list(value)


class FloatListField(serializers.Field):
    """Comma-separated reals"""

    def to_internal_value(self, data):
        items = list(data) if isinstance(data, (list, tuple)) else [
            part for part in str(data).split(",") if part.strip()
        ]
        try:
            values = [float(item) for item in items]
        except (TypeError, ValueError):
            raise serializers.ValidationError("expected comma-separated numbers")
        if not values:
            raise serializers.ValidationError("at least one value is required")
        return values

    def to_representation(self, value):
        return list(value)


def seed_field():
    return serializers.IntegerField(min_value=0, max_value=MAX_SEED, default=0)


def default_measures(key):
    return settings.GRAPHSIM_DEFAULTS[key]


# ============================================
# Command input serializers
# ============================================

class GraphInputSerializer(serializers.Serializer):
    graph = serializers.CharField()
    one_based = serializers.BooleanField(default=False)
    symmetric = serializers.BooleanField(default=False)


class CompareSerializer(GraphInputSerializer):
    """Input serializer for compare"""
    part_a = serializers.CharField()
    part_b = serializers.CharField()
    measures = MeasureListField(required=False)
    json = serializers.BooleanField(default=False)

    def validate(self, attrs):
        if "measures" not in attrs:
            attrs["measures"] = MeasureSelector.parse_list(default_measures("compare_measures"))
        return attrs


class RepresentSerializer(GraphInputSerializer):
    bits = serializers.RegexField(r"^[01]*$", allow_blank=True, trim_whitespace=True, required=False)
    class_one = serializers.CharField(required=False)

    def validate(self, attrs):
        if ("bits" in attrs) == ("class_one" in attrs):
            raise serializers.ValidationError("give exactly one of --bits and --class-one")
        return attrs


class GraphGenSerializer(serializers.Serializer):
    """Input serializer for gen graph"""
    model = serializers.ChoiceField(choices=["planted", "er", "tree"])
    n = serializers.IntegerField(min_value=0, required=False)
    m = serializers.IntegerField(min_value=0, required=False)
    k = serializers.IntegerField(min_value=1, required=False)
    sizes = IntegerListField(required=False)
    p = serializers.FloatField(min_value=0.0, max_value=1.0, required=False)
    q = serializers.FloatField(min_value=0.0, max_value=1.0, required=False)
    k1 = serializers.IntegerField(min_value=0, required=False)
    k2 = serializers.IntegerField(min_value=0, required=False)
    seed = seed_field()
    out = serializers.CharField(required=False)
    truth_out = serializers.CharField(required=False)

    def validate_sizes(self, value):
        if any(size < 1 for size in value):
            raise serializers.ValidationError("part sizes must be positive")
        return value

    def validate(self, attrs):
        model = attrs["model"]
        if model == "planted":
            if "sizes" not in attrs and not ("n" in attrs and "k" in attrs):
                raise serializers.ValidationError("planted graphs need --sizes or both --n and --k")
            densities = "p" in attrs and "q" in attrs
            counts = "k1" in attrs and "k2" in attrs
            if densities == counts:
                raise serializers.ValidationError("planted graphs need either --p and --q or --k1 and --k2")
        else:
            if "n" not in attrs:
                raise serializers.ValidationError(f"{model} graphs need --n")
            if model == "er" and "m" not in attrs:
                raise serializers.ValidationError("er graphs need --m")
            if "truth_out" in attrs:
                raise serializers.ValidationError("--truth-out applies to planted graphs only")
        return attrs


class PartitionGenSerializer(GraphInputSerializer):
    """Input serializer for gen partition"""
    process = serializers.ChoiceField(choices=["process1", "process2", "coarsen", "refine"])
    partition = serializers.CharField(required=False)
    k = serializers.IntegerField(min_value=0)
    seed = seed_field()
    out = serializers.CharField(required=False)

    def validate(self, attrs):
        if attrs["process"] in ("coarsen", "refine") and "partition" not in attrs:
            raise serializers.ValidationError(f"{attrs['process']} needs --partition")
        return attrs


class CurveSerializer(serializers.Serializer):
    """Input serializer for curve over ingested files"""
    graphs = serializers.CharField()
    truths = serializers.CharField()
    candidates = serializers.CharField()
    x_values = FloatListField()
    measures = MeasureListField(required=False)
    one_based = serializers.BooleanField(default=False)
    symmetric = serializers.BooleanField(default=False)
    window = serializers.IntegerField(min_value=1, required=False)
    out = serializers.CharField(required=False)
    svg = serializers.CharField(required=False)

    def validate_window(self, value):
        if value % 2 == 0:
            raise serializers.ValidationError("window must be odd")
        return value

    def validate(self, attrs):
        if "measures" not in attrs:
            attrs["measures"] = MeasureSelector.parse_list(default_measures("curve_measures"))
        attrs.setdefault("window", settings.GRAPHSIM_DEFAULTS["window"])
        return attrs


# ============================================
# Output serializers
# ============================================

class CompareResultSerializer(serializers.Serializer):
    """compare --json document"""
    n = serializers.IntegerField()
    m = serializers.IntegerField()
    parts_a = serializers.IntegerField()
    parts_b = serializers.IntegerField()
    measures = serializers.DictField(child=serializers.FloatField(allow_null=True))
    degenerate = serializers.ListField(child=serializers.CharField())
