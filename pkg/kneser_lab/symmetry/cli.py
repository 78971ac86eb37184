# cli.py
"""Shared plumbing for the symmetry management commands."""

import json
import logging

from django.core.management.base import BaseCommand, CommandError

from .exceptions import BudgetExceededError, SymmetryError
from .families import FamilySpec, build
from .graph_io import FORMATS, read_graph_file

logger = logging.getLogger(__name__)

EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class SymmetryCommand(BaseCommand):
    """Base command: toolkit errors become ``CommandError`` with the right exit code."""

    accepts_graph = False

    def add_arguments(self, parser):
        if self.accepts_graph:
            parser.add_argument("spec", nargs="?", help='Family spec, e.g. "H(5,2)", "K(5,2)", "Q3".')
            parser.add_argument("--file", help="Read the graph from a .g6 or adjacency-text file.")

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except BudgetExceededError as exc:
            raise CommandError(str(exc), returncode=EXIT_BUDGET) from exc
        except SymmetryError as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc

    def load_graph(self, options):
        spec, path = options.get("spec"), options.get("file")
        if bool(spec) == bool(path):
            raise CommandError("Give exactly one of SPEC or --file.", returncode=EXIT_USAGE)
        if path:
            logger.info("reading graph from %s", path)
            return read_graph_file(path)
        return build(FamilySpec.parse(spec))

    def write_json(self, payload):
        self.stdout.write(json.dumps(payload, sort_keys=True))


def add_format_argument(parser, default="graph6"):
    parser.add_argument("--format", choices=sorted(FORMATS), default=default)
