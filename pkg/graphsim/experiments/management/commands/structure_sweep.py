from experiments.serializers import StructureSweepSerializer
from experiments.sweeps import STRUCTURE_CANDIDATES, structure_sweep
from generators.seeds import Seed
from interchange.base import GraphsimCommand, add_output_arguments, add_run_arguments, add_truth_arguments


class Command(GraphsimCommand):
    help = "Baseline similarity of random partitions on planted graphs as q/p grows towards 1"

    def add_arguments(self, parser):
        add_truth_arguments(parser)
        parser.add_argument("--ratios", required=True, help="q/p values, e.g. 0.01,0.1,0.5,1")
        parser.add_argument(
            "--candidates", choices=STRUCTURE_CANDIDATES,
            help="process1: as many connected parts as the truth (default); "
                 "process2: partitions induced by a share of the edges",
        )
        parser.add_argument(
            "--internal-fraction",
            help="process2 only: class-one edges as a share of the graph's edges (default 0.25)",
        )
        parser.add_argument("--measures", help="comma-separated measure ids")
        add_run_arguments(parser)
        add_output_arguments(parser)

    def handle(self, *args, **options):
        data = self.validated(StructureSweepSerializer, options)
        points = structure_sweep(
            data["truth"], data["p"], data["ratios"], data["trials"], data["measures"], Seed(data["seed"]),
            candidates=data["candidates"], internal_fraction=data["internal_fraction"],
        )
        self.emit_points(points, data, title=f"structure sweep, p = {data['p']:g}", xlabel="q / p")
