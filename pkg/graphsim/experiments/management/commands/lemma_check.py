from django.conf import settings

from experiments.checks import CheckConfig, lemma1_check
from experiments.exceptions import CheckFailed
from experiments.serializers import CheckSerializer
from generators.seeds import Seed
from interchange.base import GraphsimCommand, add_run_arguments, add_truth_arguments
from interchange.curves import emit_check_csv


def add_check_arguments(parser):
    add_truth_arguments(parser)
    parser.add_argument("--q", required=True, help="inter-part edge density")
    parser.add_argument("--coarse-k", required=True, help="parts of the random coarsening B1")
    parser.add_argument("--fine-k", required=True, help="parts of the random refinement B2")
    parser.add_argument("--margin", help="pass margin in standard errors")
    add_run_arguments(parser)
    parser.add_argument("--out", help="CSV report file (default: stdout)")


def draw_config(data):
    seed = Seed(data["seed"])
    return seed, CheckConfig.draw(data["truth"], data["p"], data["q"], data["coarse_k"], data["fine_k"], seed)


def failed_parts(report):
    return ", ".join(f"({row.part})" for row in report.rows if row.applicable and not row.passed)


class Command(GraphsimCommand):
    help = (
        "Monte Carlo check that graph-aware PC_mn rewards a coarsening B1 (when p >= q) "
        "and penalizes a refinement B2 relative to the agnostic PC_mn"
    )

    def add_arguments(self, parser):
        add_check_arguments(parser)

    def handle(self, *args, **options):
        data = self.validated(CheckSerializer, options)
        seed, config = draw_config(data)
        margin = data.get("margin", settings.GRAPHSIM_DEFAULTS["lemma_margin"])
        report = lemma1_check(config, data["trials"], seed, margin=margin)
        self.emit(emit_check_csv(report), data.get("out"))
        if not report.passed:
            raise CheckFailed(f"lemma check failed in part {failed_parts(report)}")
