from pathlib import Path

from django.core.management.base import CommandError

from symmetry.aut_search import automorphism_group
from symmetry.cli import EXIT_FAILURE, SymmetryCommand, add_format_argument
from symmetry.graph_io import render


class Command(SymmetryCommand):
    help = "Write a graph (or its automorphism generators) to a file."

    accepts_graph = True

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--output", required=True, help="Destination path.")
        add_format_argument(parser)
        parser.add_argument(
            "--generators",
            action="store_true",
            help="Write Aut generators in cycle notation instead of the graph.",
        )
        parser.add_argument("--budget", type=int)

    def handle(self, *args, **options):
        g = self.load_graph(options)
        if options["generators"]:
            group = automorphism_group(g, budget=options["budget"]).group
            text = "".join(f"{gamma.to_cycles()}\n" for gamma in group.generators)
        else:
            text = render(g, options["format"])
        path = Path(options["output"])
        try:
            path.write_text(text, encoding="ascii")
        except OSError as exc:
            raise CommandError(f"Cannot write {path}: {exc}", returncode=EXIT_FAILURE) from exc
        self.stdout.write(f"wrote {path}")
