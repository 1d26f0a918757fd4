from django.core.management.base import CommandError
from rest_framework.renderers import JSONRenderer

from graphsim.cli import EXIT_DEGENERATE
from interchange.base import GraphsimCommand, add_graph_arguments
from interchange.formats import read_edge_list, read_partition
from interchange.serializers import CompareResultSerializer, CompareSerializer
from measures.selectors import Comparison


class Command(GraphsimCommand):
    help = "Print agnostic and graph-aware similarities between two partitions of a graph"

    def add_arguments(self, parser):
        add_graph_arguments(parser)
        parser.add_argument("--part-a", required=True, help="first partition file")
        parser.add_argument("--part-b", required=True, help="second partition file")
        parser.add_argument("--measures", help="comma-separated measure ids, e.g. ARI,AMI,ARI(G)")
        parser.add_argument("--json", action="store_true", help="print a JSON document")

    def handle(self, *args, **options):
        data = self.validated(CompareSerializer, options)
        g = read_edge_list(data["graph"], one_based=data["one_based"], symmetric=data["symmetric"])
        a = read_partition(data["part_a"], g.n, one_based=data["one_based"])
        b = read_partition(data["part_b"], g.n, one_based=data["one_based"])

        values = Comparison(a, b, g).values(data["measures"])
        degenerate = [label for label, value in values.items() if value is None]

        if data["json"]:
            document = CompareResultSerializer({
                "n": g.n, "m": g.m, "parts_a": a.k, "parts_b": b.k,
                "measures": values, "degenerate": degenerate,
            }).data
            self.stdout.write(JSONRenderer().render(document, renderer_context={"indent": 2}).decode())
        else:
            for label, value in values.items():
                self.stdout.write(f"{label}\t{'undefined' if value is None else format(value, '.12g')}")

        if degenerate:
            raise CommandError(f"undefined measures: {', '.join(degenerate)}", returncode=EXIT_DEGENERATE)
