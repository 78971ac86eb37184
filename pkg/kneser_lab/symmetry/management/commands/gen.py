from symmetry.cli import SymmetryCommand, add_format_argument
from symmetry.families import FamilySpec, build
from symmetry.graph_io import render


class Command(SymmetryCommand):
    help = "Serialize a family graph as graph6, DOT or adjacency text."

    def add_arguments(self, parser):
        parser.add_argument("spec", help='Family spec, e.g. "H(5,2)" or "Q3".')
        add_format_argument(parser)

    def handle(self, *args, **options):
        g = build(FamilySpec.parse(options["spec"]))
        self.stdout.write(render(g, options["format"]), ending="")
