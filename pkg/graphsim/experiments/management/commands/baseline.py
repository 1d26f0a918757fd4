from experiments.sweeps import baseline_internal_edges_sweep, baseline_size_sweep
from experiments.serializers import BaselineSerializer
from generators.models import erdos_renyi_graph, random_tree
from generators.processes import random_partition_process1
from generators.seeds import TRUTH_STREAM, Seed
from interchange.base import GraphsimCommand, add_graph_arguments, add_output_arguments, add_run_arguments
from interchange.formats import read_edge_list, read_partition


class Command(GraphsimCommand):
    help = (
        "Similarity between a ground truth and random connected partitions of the same "
        "graph, swept over the part count (size) or the class-one edge count (internal-edges)"
    )

    def add_arguments(self, parser):
        parser.add_argument("process", choices=["size", "internal-edges"])
        parser.add_argument("--ks", required=True, help="sweep values, e.g. 1:50 or 1,5,10")
        parser.add_argument("--measures", help="comma-separated measure ids")
        add_graph_arguments(parser, required=False)
        parser.add_argument("--truth", help="ground truth partition file for --graph")
        parser.add_argument("--model", choices=["er", "tree"], help="generate the graph instead")
        parser.add_argument("--n", help="vertex count of the generated graph")
        parser.add_argument("--m", help="edge count of the generated er graph")
        parser.add_argument("--truth-k", help="parts of the Process-1 ground truth on the generated graph")
        add_run_arguments(parser)
        add_output_arguments(parser)

    def handle(self, *args, **options):
        data = self.validated(BaselineSerializer, options)
        seed = Seed(data["seed"])
        if "graph" in data:
            g = read_edge_list(data["graph"], one_based=data["one_based"], symmetric=data["symmetric"])
            truth = read_partition(data["truth"], g.n, one_based=data["one_based"])
        else:
            rng = seed.rng(TRUTH_STREAM, 0)
            g = erdos_renyi_graph(data["n"], data["m"], rng) if data["model"] == "er" else random_tree(data["n"], rng)
            truth = random_partition_process1(g, data["truth_k"], seed.rng(TRUTH_STREAM, 1))

        sweep = baseline_size_sweep if data["process"] == "size" else baseline_internal_edges_sweep
        points = sweep(g, truth, data["ks"], data["trials"], data["measures"], seed)
        xlabel = "parts" if data["process"] == "size" else "class-one edges"
        self.emit_points(points, data, title=f"baseline ({data['process']})", xlabel=xlabel)
