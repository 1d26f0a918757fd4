"""
Shared behaviour of the graphsim management commands
Domain errors become CommandError with the documented exit status; argument
parser errors exit with the usage status.
"""

import logging
from typing import Iterable, Optional

from django.core.management.base import BaseCommand, CommandError

from experiments.exceptions import CheckFailed, HypothesisViolation
from experiments.records import CurvePoint
from experiments.smoothing import smooth_points
from graphsim.cli import EXIT_CHECK_FAILED, EXIT_DEGENERATE, EXIT_INPUT, EXIT_USAGE
from measures.exceptions import DegenerateMeasureError
from partitions.exceptions import GraphError, PartitionError

from .curves import emit_curve_csv, emit_curve_svg
from .exceptions import ParseError
from .formats import write_text

logger = logging.getLogger(__name__)


def format_errors(errors, prefix: str = "") -> str:
    """Flatten serializer errors to "field: message" lines"""
    if isinstance(errors, dict):
        lines = []
        for field, messages in errors.items():
            label = "" if field == "non_field_errors" else f"{prefix}{field}: "
            lines.append(format_errors(messages, label))
        return "\n".join(lines)
    if isinstance(errors, (list, tuple)):
        return "\n".join(format_errors(message, prefix) for message in errors)
    return f"{prefix}{errors}"


class GraphsimCommand(BaseCommand):
    requires_system_checks = []

    _arguments_parsed = False

    def run_from_argv(self, argv):
        self._arguments_parsed = False
        try:
            super().run_from_argv(argv)
        except CommandError as exc:
            # subparsers may report usage errors this way before execute runs
            self.stderr.write(str(exc))
            raise SystemExit(EXIT_USAGE)
        except SystemExit as exit_request:
            if not self._arguments_parsed and exit_request.code == 2:
                raise SystemExit(EXIT_USAGE)
            raise

    def execute(self, *args, **options):
        self._arguments_parsed = True
        try:
            return super().execute(*args, **options)
        except CheckFailed as exc:
            raise CommandError(str(exc), returncode=EXIT_CHECK_FAILED)
        except DegenerateMeasureError as exc:
            raise CommandError(str(exc), returncode=EXIT_DEGENERATE)
        except HypothesisViolation as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE)
        except ParseError as exc:
            raise CommandError(exc.located(), returncode=EXIT_INPUT)
        except (GraphError, PartitionError) as exc:
            raise CommandError(str(exc), returncode=EXIT_INPUT)
        except UnicodeDecodeError as exc:
            raise CommandError(f"input is not text: {exc}", returncode=EXIT_INPUT)
        except OSError as exc:
            raise CommandError(str(exc), returncode=EXIT_INPUT)
        except ValueError as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE)

    def validated(self, serializer_class, options) -> dict:
        data = {key: value for key, value in options.items() if value is not None}
        serializer = serializer_class(data=data)
        if not serializer.is_valid():
            raise CommandError(format_errors(serializer.errors), returncode=EXIT_USAGE)
        return serializer.validated_data

    def emit(self, text: str, path: Optional[str] = None) -> None:
        """Write text to path, or to stdout when no path is given"""
        if path:
            write_text(path, text)
        else:
            self.stdout.write(text, ending="")

    def emit_points(self, points: Iterable[CurvePoint], options: dict, title: str = None, xlabel: str = "x") -> None:
        points = smooth_points(points, options.get("window", 1))
        self.emit(emit_curve_csv(points), options.get("out"))
        if options.get("svg"):
            write_text(options["svg"], emit_curve_svg(points, title=title, xlabel=xlabel))


def add_output_arguments(parser) -> None:
    parser.add_argument("--out", help="CSV output file (default: stdout)")
    parser.add_argument("--svg", help="also plot the curves to this SVG file")
    parser.add_argument("--window", help="odd moving-average window applied before output")


def add_graph_arguments(parser, required: bool = True) -> None:
    parser.add_argument("--graph", required=required, help="edge list file")
    parser.add_argument("--one-based", action="store_true", help="vertex ids in input files start at 1")
    parser.add_argument("--symmetric", action="store_true",
                        help="edges may be listed in both directions")


def add_run_arguments(parser) -> None:
    parser.add_argument("--trials", help="Monte Carlo trials per point")
    parser.add_argument("--seed", help="master seed")


def add_truth_arguments(parser) -> None:
    parser.add_argument("--sizes", help="ground truth part sizes, e.g. 10,10,10")
    parser.add_argument("--n", help="vertex count of an evenly split ground truth")
    parser.add_argument("--k", help="part count of an evenly split ground truth")
    parser.add_argument("--p", required=True, help="intra-part edge density")
