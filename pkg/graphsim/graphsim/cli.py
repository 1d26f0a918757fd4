"""
Command-line entry point
Subcommands are Django management commands; hyphenated names such as
structure-sweep map to the structure_sweep command module.
"""

import os
import sys
from typing import List, Optional

from django.core.exceptions import ImproperlyConfigured
from django.core.management import execute_from_command_line

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_CHECK_FAILED = 4


def normalize_argv(argv: List[str]) -> List[str]:
    argv = list(argv)
    if len(argv) > 1 and not argv[1].startswith("-"):
        argv[1] = argv[1].replace("-", "_")
    return argv


def dispatch(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand and return its exit code"""
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "graphsim.settings")
    try:
        execute_from_command_line(normalize_argv(sys.argv if argv is None else argv))
    except ImproperlyConfigured as exc:
        sys.stderr.write(f"configuration error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exit_request:
        code = exit_request.code
        if code is None:
            return EXIT_OK
        if isinstance(code, int):
            return code
        sys.stderr.write(f"{code}\n")
        return EXIT_USAGE
    return EXIT_OK
