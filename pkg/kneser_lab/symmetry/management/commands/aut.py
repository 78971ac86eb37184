from symmetry.aut_search import InitialColoring, automorphism_group, classify_bipartite_action
from symmetry.cli import SymmetryCommand
from symmetry.exceptions import InvalidGraphError, MixedPartActionError
from symmetry.graph_core import is_connected


def part_action(g, f):
    """Preserving/swapping for connected bipartite graphs, ``None`` otherwise."""
    if not is_connected(g):
        return None
    try:
        return classify_bipartite_action(g, f).value
    except (InvalidGraphError, MixedPartActionError):
        return None


class Command(SymmetryCommand):
    help = "Compute the automorphism group of a family graph or a graph file."

    accepts_graph = True

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--budget", type=int, help="Search node budget.")
        parser.add_argument("--trace", action="store_true", help="Print one line per search node.")
        parser.add_argument("--coloring", choices=InitialColoring.values)
        parser.add_argument("--json", action="store_true")

    def handle(self, *args, **options):
        g = self.load_graph(options)
        result = automorphism_group(
            g,
            budget=options["budget"],
            trace=options["trace"],
            coloring=options["coloring"],
        )
        generators = [
            {"cycles": gamma.to_cycles(), "action": part_action(g, gamma)}
            for gamma in result.group.generators
        ]
        if options["json"]:
            self.write_json(
                {
                    "graph": g.name,
                    "vertices": g.order,
                    "order": result.order,
                    "base": [b + 1 for b in result.group.base],
                    "generators": generators,
                    "node_count": result.node_count,
                    "refinement_count": result.refinement_count,
                    "trace": list(result.trace),
                }
            )
            return
        for line in result.trace:
            self.stdout.write(line)
        self.stdout.write(f"graph {g.name}")
        self.stdout.write(f"vertices {g.order}")
        self.stdout.write(f"order {result.order}")
        self.stdout.write(f"nodes {result.node_count}")
        self.stdout.write(f"refinements {result.refinement_count}")
        self.stdout.write(f"generators {len(generators)}")
        for gen in generators:
            suffix = f" {gen['action']}" if gen["action"] else ""
            self.stdout.write(f"  {gen['cycles']}{suffix}")
