import logging

from django.core.management.base import CommandError

from experiments.sweeps import ingested_curve
from graphsim.cli import EXIT_USAGE
from interchange.base import GraphsimCommand, add_output_arguments
from interchange.formats import directory_files, read_edge_list, read_partition
from interchange.serializers import CurveSerializer

logger = logging.getLogger(__name__)


def _broadcast(files, count, what):
    """A directory holds one file per instance, or a single shared file"""
    if len(files) == count:
        return files
    if len(files) == 1:
        return files * count
    raise CommandError(f"{what}: expected 1 or {count} files, found {len(files)}", returncode=EXIT_USAGE)


class Command(GraphsimCommand):
    help = (
        "Similarity curves for externally produced partitions; the i-th file of each "
        "directory (in name order) forms the instance plotted at the i-th x value"
    )

    def add_arguments(self, parser):
        parser.add_argument("--graphs", required=True, help="directory of edge list files")
        parser.add_argument("--truths", required=True, help="directory of ground truth partition files")
        parser.add_argument("--candidates", required=True, help="directory of candidate partition files")
        parser.add_argument("--x-values", required=True, help="comma-separated x value per candidate")
        parser.add_argument("--measures", help="comma-separated measure ids")
        parser.add_argument("--one-based", action="store_true", help="vertex ids in input files start at 1")
        parser.add_argument("--symmetric", action="store_true", help="edges may be listed in both directions")
        add_output_arguments(parser)

    def handle(self, *args, **options):
        data = self.validated(CurveSerializer, options)
        candidates = directory_files(data["candidates"])
        xs = data["x_values"]
        if len(xs) != len(candidates):
            raise CommandError(
                f"{len(xs)} x values for {len(candidates)} candidate files", returncode=EXIT_USAGE
            )
        graphs = _broadcast(directory_files(data["graphs"]), len(candidates), "--graphs")
        truths = _broadcast(directory_files(data["truths"]), len(candidates), "--truths")

        cache = {}

        def graph(path):
            if path not in cache:
                cache[path] = read_edge_list(path, one_based=data["one_based"], symmetric=data["symmetric"])
            return cache[path]

        instances = []
        for x, graph_file, truth_file, candidate_file in zip(xs, graphs, truths, candidates):
            g = graph(graph_file)
            instances.append((
                x,
                g,
                read_partition(truth_file, g.n, one_based=data["one_based"]),
                read_partition(candidate_file, g.n, one_based=data["one_based"]),
            ))
        logger.info("curve over %d ingested instances", len(instances))
        self.emit_points(ingested_curve(instances, data["measures"]), data, xlabel="x")
