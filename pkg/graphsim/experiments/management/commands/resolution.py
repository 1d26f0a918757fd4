from experiments.exceptions import CheckFailed
from experiments.serializers import ResolutionSerializer
from experiments.sweeps import resolution_experiment
from generators.seeds import Seed
from interchange.base import GraphsimCommand, add_output_arguments, add_run_arguments, add_truth_arguments


class Command(GraphsimCommand):
    help = (
        "Compare a random refinement and a random coarsening of a planted truth across q; "
        "curves are labelled finer:<measure> and coarser:<measure>"
    )

    def add_arguments(self, parser):
        add_truth_arguments(parser)
        parser.add_argument("--qs", required=True, help="inter-part densities, e.g. 0.02,0.05,0.1")
        parser.add_argument("--finer-k", required=True, help="parts of the refinement")
        parser.add_argument("--coarser-k", required=True, help="parts of the coarsening")
        parser.add_argument("--measures", help="comma-separated measure ids")
        parser.add_argument("--margin", help="separation in standard errors for a flagged contradiction")
        parser.add_argument("--expect-contradiction", action="store_true",
                            help="exit with status 4 unless some q is flagged")
        add_run_arguments(parser)
        add_output_arguments(parser)

    def handle(self, *args, **options):
        data = self.validated(ResolutionSerializer, options)
        report = resolution_experiment(
            data["truth"], data["p"], data["qs"], data["finer_k"], data["coarser_k"],
            data["trials"], data["measures"], Seed(data["seed"]), margin=data["margin"],
        )
        self.emit_points(report.points, data, title=f"refinement vs coarsening, p = {data['p']:g}", xlabel="q")
        for finding in report.findings:
            self.stderr.write(
                f"q={finding.x:g} {finding.agnostic_measure} finer-coarser {finding.agnostic_gap:+.4g} "
                f"(se {finding.agnostic_se:.2g}), {finding.aware_measure} finer-coarser "
                f"{finding.aware_gap:+.4g} (se {finding.aware_se:.2g})"
                + (" contradiction" if finding.contradiction else "")
            )
        if options["expect_contradiction"] and not report.contradictions:
            raise CheckFailed("no q value shows contradicting rankings")
