from django.conf import settings

from experiments.checks import theorem1_check
from experiments.exceptions import CheckFailed
from experiments.serializers import CheckSerializer
from interchange.base import GraphsimCommand
from interchange.curves import emit_check_csv

from .lemma_check import add_check_arguments, draw_config, failed_parts


class Command(GraphsimCommand):
    help = (
        "Check that agnostic PC_mn prefers the refinement B2 while graph-aware PC_mn "
        "prefers the coarsening B1, given |P_A|^2 < |P_B1| |P_B2| and p > q x1 / x2"
    )

    def add_arguments(self, parser):
        add_check_arguments(parser)

    def handle(self, *args, **options):
        data = self.validated(CheckSerializer, options)
        seed, config = draw_config(data)
        margin = data.get("margin", settings.GRAPHSIM_DEFAULTS["theorem_margin"])
        report = theorem1_check(config, data["trials"], seed, margin=margin)
        self.emit(emit_check_csv(report), data.get("out"))
        if not report.passed:
            raise CheckFailed(f"theorem check failed in part {failed_parts(report)}")
