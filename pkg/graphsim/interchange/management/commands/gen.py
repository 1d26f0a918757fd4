import logging

from generators.models import (
    PlantedSpec,
    balanced_partition,
    erdos_renyi_graph,
    even_sizes,
    planted_partition_graph,
    random_tree,
)
from generators.perturb import random_coarsening, random_refinement
from generators.processes import random_partition_process1, random_partition_process2
from generators.seeds import CANDIDATE_STREAM, GRAPH_STREAM, Seed
from interchange.base import GraphsimCommand, add_graph_arguments
from interchange.formats import read_edge_list, read_partition, write_edge_list, write_partition, write_text
from interchange.serializers import GraphGenSerializer, PartitionGenSerializer

logger = logging.getLogger(__name__)


class Command(GraphsimCommand):
    help = "Generate random graphs and random partitions as files"

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest="kind", required=True)

        graph = subparsers.add_parser("graph", help="random graph as an edge list")
        graph.add_argument("model", choices=["planted", "er", "tree"])
        graph.add_argument("--n", help="vertex count")
        graph.add_argument("--m", help="edge count (er)")
        graph.add_argument("--k", help="number of equal planted parts")
        graph.add_argument("--sizes", help="planted part sizes, e.g. 10,10,20")
        graph.add_argument("--p", help="intra-part edge density (planted)")
        graph.add_argument("--q", help="inter-part edge density (planted)")
        graph.add_argument("--k1", help="exact intra-part edge count (planted)")
        graph.add_argument("--k2", help="exact inter-part edge count (planted)")
        graph.add_argument("--seed", help="master seed")
        graph.add_argument("--out", help="edge list file (default: stdout)")
        graph.add_argument("--truth-out", help="write the planted partition here")

        partition = subparsers.add_parser("partition", help="random partition of a graph")
        partition.add_argument("process", choices=["process1", "process2", "coarsen", "refine"])
        add_graph_arguments(partition)
        partition.add_argument("--partition", help="partition to coarsen or refine")
        partition.add_argument("--k", required=True,
                               help="parts (process1, coarsen, refine) or class-one edges (process2)")
        partition.add_argument("--seed", help="master seed")
        partition.add_argument("--out", help="partition file (default: stdout)")

    def handle(self, *args, **options):
        if options["kind"] == "graph":
            self.generate_graph(self.validated(GraphGenSerializer, options))
        else:
            self.generate_partition(self.validated(PartitionGenSerializer, options))

    def generate_graph(self, data):
        rng = Seed(data["seed"]).rng(GRAPH_STREAM)
        model = data["model"]
        if model == "er":
            g = erdos_renyi_graph(data["n"], data["m"], rng)
        elif model == "tree":
            g = random_tree(data["n"], rng)
        else:
            truth = balanced_partition(data.get("sizes") or even_sizes(data["n"], data["k"]))
            if "k1" in data:
                spec = PlantedSpec(ground_truth=truth, k1=data["k1"], k2=data["k2"])
            else:
                spec = PlantedSpec.from_densities(truth, data["p"], data["q"])
            g = planted_partition_graph(spec, rng)
            if data.get("truth_out"):
                write_text(data["truth_out"], write_partition(truth))
        logger.info("generated %s graph with n=%d m=%d", model, g.n, g.m)
        self.emit(write_edge_list(g), data.get("out"))

    def generate_partition(self, data):
        g = read_edge_list(data["graph"], one_based=data["one_based"], symmetric=data["symmetric"])
        rng = Seed(data["seed"]).rng(CANDIDATE_STREAM)
        process, k = data["process"], data["k"]
        if process == "process1":
            result = random_partition_process1(g, k, rng)
        elif process == "process2":
            result = random_partition_process2(g, k, rng)
        else:
            a = read_partition(data["partition"], g.n, one_based=data["one_based"])
            perturb = random_coarsening if process == "coarsen" else random_refinement
            result = perturb(a, k, rng)
        logger.info("generated %s partition with %d parts", process, result.k)
        self.emit(write_partition(result), data.get("out"))
