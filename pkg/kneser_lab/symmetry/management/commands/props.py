from symmetry.cli import SymmetryCommand
from symmetry.graph_core import diameter, is_connected, parity_parts, vertex_connectivity


def summarize(g):
    """Structural summary of ``g`` as an ordered dict of exact values."""
    connected = is_connected(g)
    parts = g.bipartition or parity_parts(g)
    return {
        "graph": g.name,
        "vertices": g.order,
        "edges": g.size,
        "regular_degree": g.regular_degree(),
        "min_degree": min(g.degrees()),
        "max_degree": max(g.degrees()),
        "connected": connected,
        "diameter": diameter(g) if connected else None,
        "connectivity": vertex_connectivity(g) if g.order > 1 else 0,
        "bipartite": parts is not None,
        "parts": [parts.count(1), parts.count(2)] if parts is not None else None,
    }


def _text(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return " ".join(map(str, value))
    return str(value)


class Command(SymmetryCommand):
    help = "Print |V|, |E|, regularity, diameter, connectivity and bipartition sizes."

    accepts_graph = True

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--json", action="store_true")

    def handle(self, *args, **options):
        summary = summarize(self.load_graph(options))
        if options["json"]:
            self.write_json(summary)
            return
        for key, value in summary.items():
            self.stdout.write(f"{key} {_text(value)}")
