from django.conf import settings
from rest_framework import serializers

from generators.models import balanced_partition, even_sizes
from interchange.serializers import FloatListField, IntegerListField, MeasureListField, seed_field
from measures.selectors import MeasureSelector
from partitions.exceptions import PartitionError


def _defaults():
    return settings.GRAPHSIM_DEFAULTS


class RunSerializer(serializers.Serializer):
    """Options shared by every Monte Carlo command"""
    trials = serializers.IntegerField(min_value=1, required=False)
    seed = seed_field()
    out = serializers.CharField(required=False)
    svg = serializers.CharField(required=False)
    window = serializers.IntegerField(min_value=1, required=False)

    measures_default = None

    def validate_window(self, value):
        if value % 2 == 0:
            raise serializers.ValidationError("window must be odd")
        return value

    def validate(self, attrs):
        attrs.setdefault("trials", _defaults()["trials"])
        attrs.setdefault("window", _defaults()["window"])
        if self.measures_default and "measures" not in attrs:
            attrs["measures"] = MeasureSelector.parse_list(_defaults()[self.measures_default])
        return attrs


class PlantedTruthSerializer(RunSerializer):
    """A ground truth of consecutive blocks, from --sizes or from --n and --k
    (k parts whose sizes differ by at most one)"""
    sizes = IntegerListField(required=False)
    n = serializers.IntegerField(min_value=1, required=False)
    k = serializers.IntegerField(min_value=1, required=False)
    p = serializers.FloatField(min_value=0.0, max_value=1.0)

    def validate_sizes(self, value):
        if any(size < 1 for size in value):
            raise serializers.ValidationError("part sizes must be positive")
        return value

    def validate(self, attrs):
        attrs = super().validate(attrs)
        if "sizes" in attrs:
            attrs["truth"] = balanced_partition(attrs["sizes"])
        elif "n" in attrs and "k" in attrs:
            try:
                attrs["truth"] = balanced_partition(even_sizes(attrs["n"], attrs["k"]))
            except PartitionError as exc:
                raise serializers.ValidationError(str(exc))
        else:
            raise serializers.ValidationError("the ground truth needs --sizes or both --n and --k")
        return attrs


class BaselineSerializer(RunSerializer):
    """Input serializer for the no-structure baseline"""
    process = serializers.ChoiceField(choices=["size", "internal-edges"])
    ks = IntegerListField()
    measures = MeasureListField(required=False)
    graph = serializers.CharField(required=False)
    truth = serializers.CharField(required=False)
    one_based = serializers.BooleanField(default=False)
    symmetric = serializers.BooleanField(default=False)
    model = serializers.ChoiceField(choices=["er", "tree"], required=False)
    n = serializers.IntegerField(min_value=1, required=False)
    m = serializers.IntegerField(min_value=0, required=False)
    truth_k = serializers.IntegerField(min_value=1, required=False)

    measures_default = "baseline_measures"

    def validate_ks(self, value):
        if any(k < 0 for k in value):
            raise serializers.ValidationError("sweep values must be non-negative")
        return value

    def validate(self, attrs):
        attrs = super().validate(attrs)
        if ("graph" in attrs) == ("model" in attrs):
            raise serializers.ValidationError("give either --graph with --truth, or --model")
        if "graph" in attrs and "truth" not in attrs:
            raise serializers.ValidationError("--graph needs --truth")
        if "model" in attrs:
            if "n" not in attrs or "truth_k" not in attrs:
                raise serializers.ValidationError("generated graphs need --n and --truth-k")
            if attrs["model"] == "er" and "m" not in attrs:
                raise serializers.ValidationError("er graphs need --m")
        return attrs


class StructureSweepSerializer(PlantedTruthSerializer):
    """Input serializer for the mixing sweep, q = ratio * p"""
    ratios = FloatListField()
    candidates = serializers.ChoiceField(choices=["process1", "process2"], default="process1")
    internal_fraction = serializers.FloatField(min_value=0.0, max_value=1.0, default=0.25)
    measures = MeasureListField(required=False)

    measures_default = "structure_measures"

    def validate(self, attrs):
        attrs = super().validate(attrs)
        for ratio in attrs["ratios"]:
            if ratio < 0 or ratio * attrs["p"] > 1:
                raise serializers.ValidationError(f"ratio {ratio} gives q outside [0, 1]")
        return attrs


class CheckSerializer(PlantedTruthSerializer):
    """Input serializer for lemma-check and theorem-check"""
    q = serializers.FloatField(min_value=0.0, max_value=1.0)
    coarse_k = serializers.IntegerField(min_value=1)
    fine_k = serializers.IntegerField(min_value=1)
    margin = serializers.FloatField(min_value=0.0, required=False)

    def validate(self, attrs):
        attrs = super().validate(attrs)
        truth = attrs["truth"]
        if not attrs["coarse_k"] <= truth.k <= attrs["fine_k"] <= truth.n:
            raise serializers.ValidationError(
                f"need coarse-k <= {truth.k} <= fine-k <= {truth.n}, "
                f"got {attrs['coarse_k']} and {attrs['fine_k']}"
            )
        return attrs


class ResolutionSerializer(PlantedTruthSerializer):
    """Input serializer for the refinement-versus-coarsening experiment"""
    qs = FloatListField()
    finer_k = serializers.IntegerField(min_value=1)
    coarser_k = serializers.IntegerField(min_value=1)
    margin = serializers.FloatField(min_value=0.0, required=False)
    measures = MeasureListField(required=False)

    measures_default = "resolution_measures"

    def validate_qs(self, value):
        if any(not 0.0 <= q <= 1.0 for q in value):
            raise serializers.ValidationError("q values must lie in [0, 1]")
        return value

    def validate(self, attrs):
        attrs = super().validate(attrs)
        truth = attrs["truth"]
        if not attrs["coarser_k"] <= truth.k <= attrs["finer_k"] <= truth.n:
            raise serializers.ValidationError(
                f"need coarser-k <= {truth.k} <= finer-k <= {truth.n}, "
                f"got {attrs['coarser_k']} and {attrs['finer_k']}"
            )
        attrs.setdefault("margin", _defaults()["resolution_margin"])
        return attrs
