import random
from math import factorial

from django.test import SimpleTestCase
from hypothesis import given, settings

from symmetry.aut_search import (
    InitialColoring,
    OrderedPartition,
    PartAction,
    automorphism_group,
    brute_force_aut,
    brute_force_automorphisms,
    classify_bipartite_action,
    initial_partition,
    is_automorphism,
    refine,
)
from symmetry.exceptions import (
    BudgetExceededError,
    DomainMismatchError,
    InvalidGraphError,
    MixedPartActionError,
    SizeCapExceededError,
)
from symmetry.families import (
    Family,
    FamilySpec,
    build,
    complement_map,
    cycle_graph,
    edgeless_graph,
    path_graph,
    petersen_graph,
    star_graph,
    symmetric_generators,
)
from symmetry.graph_core import LabeledGraph
from symmetry.perm_core import VertexPermutation, compose

from .strategies import small_graphs

H52 = FamilySpec(Family.BIPARTITE_KNESER, 5, 2)


def oracle_corpus():
    yield from (cycle_graph(m) for m in range(3, 9))
    yield from (path_graph(m) for m in range(2, 7))
    yield petersen_graph()
    yield build(FamilySpec(Family.JOHNSON, 4, 2))
    yield build(FamilySpec(Family.KNESER, 5, 2))
    yield build(FamilySpec(Family.HYPERCUBE, 3))


class RefineTests(SimpleTestCase):
    def test_vertex_transitive_graph_keeps_unit_partition(self):
        q3 = build(FamilySpec(Family.HYPERCUBE, 3))
        self.assertEqual(len(refine(q3, OrderedPartition.unit(q3.order))), 1)

    def test_parts_coloring_stays_two_cells(self):
        g = build(H52)
        refined = refine(g, initial_partition(g, InitialColoring.PARTS))
        self.assertEqual(refined.shape(), (10, 10))
        self.assertEqual(set(refined.cells[0]), set(g.part(1)))

    def test_path_splits_by_degree(self):
        refined = refine(path_graph(3), OrderedPartition.unit(3))
        self.assertEqual(refined.cells, ((0, 2), (1,)))

    def test_individualize_puts_vertex_first(self):
        p = OrderedPartition.unit(4).individualize(2)
        self.assertEqual(p.cells, ((2,), (0, 1, 3)))

    def test_target_cell(self):
        p = OrderedPartition([[0, 1, 2], [3], [4, 5]])
        self.assertEqual(p.target_cell(), (4, 5))
        self.assertIsNone(OrderedPartition([[0], [1]]).target_cell())

    @settings(max_examples=80, deadline=None)
    @given(small_graphs(max_order=8))
    def test_refinement_is_equitable_finer_and_idempotent(self, g):
        start = initial_partition(g, InitialColoring.DEGREE)
        refined = refine(g, start)
        self.assertTrue(refined.is_equitable(g))
        self.assertTrue(refined.is_finer_or_equal(start))
        self.assertEqual(refine(g, refined), refined)
        self.assertEqual(sorted(refined.order), list(range(g.order)))


class AutomorphismGroupTests(SimpleTestCase):
    def test_known_orders(self):
        cases = {
            "H(5,2)": 240,
            "H(4,1)": 48,
            "H(6,2)": 1440,
            "K(5,2)": 120,
            "K(6,2)": 720,
            "J(4,2)": 48,
            "J(5,2)": 120,
            "J(6,3)": 1440,
            "Q2": 8,
            "Q3": 48,
            "Q4": 384,
        }
        for text, order in cases.items():
            with self.subTest(graph=text):
                self.assertEqual(automorphism_group(build(FamilySpec.parse(text))).order, order)

    def test_larger_instances(self):
        self.assertEqual(automorphism_group(build(FamilySpec.parse("H(7,3)"))).order, 10080)
        self.assertEqual(automorphism_group(build(FamilySpec.parse("K(7,3)"))).order, 5040)

    def test_controls(self):
        self.assertEqual(automorphism_group(edgeless_graph(5)).order, factorial(5))
        self.assertEqual(automorphism_group(cycle_graph(6)).order, 12)
        self.assertEqual(automorphism_group(path_graph(4)).order, 2)
        self.assertEqual(automorphism_group(star_graph(3)).order, 6)
        self.assertEqual(automorphism_group(LabeledGraph(1, [])).order, 1)

    def test_generators_are_automorphisms(self):
        g = build(H52)
        result = automorphism_group(g)
        self.assertGreater(result.node_count, 0)
        self.assertGreater(result.refinement_count, 0)
        for gamma in result.group.generators:
            self.assertTrue(is_automorphism(g, gamma))

    def test_deterministic(self):
        g = build(H52)
        first = automorphism_group(g, trace=True)
        second = automorphism_group(g, trace=True)
        self.assertEqual(first.group.generators, second.group.generators)
        self.assertEqual(first.trace, second.trace)

    def test_trace(self):
        result = automorphism_group(cycle_graph(5), trace=True)
        self.assertEqual(len(result.trace), result.node_count)
        self.assertTrue(result.trace[0].startswith("node 1 depth 0 cells 1 shape 5"))

    def test_budget(self):
        with self.assertRaises(BudgetExceededError) as ctx:
            automorphism_group(build(H52), budget=2)
        self.assertEqual(ctx.exception.node_count, 3)

    def test_parts_coloring_gives_part_preserving_subgroup(self):
        g = build(H52)
        result = automorphism_group(g, coloring=InitialColoring.PARTS)
        self.assertEqual(result.order, 120)
        self.assertFalse(result.group.contains(complement_map(g)))

    def test_empty_graph(self):
        with self.assertRaises(InvalidGraphError):
            automorphism_group(LabeledGraph(0, []))


class BruteForceTests(SimpleTestCase):
    def test_cycle(self):
        self.assertEqual(brute_force_aut(cycle_graph(6)).order, 12)

    def test_johnson(self):
        self.assertEqual(brute_force_aut(build(FamilySpec(Family.JOHNSON, 4, 2))).order, 48)

    def test_keeps_only_non_member_generators(self):
        group = brute_force_aut(edgeless_graph(7))
        self.assertEqual(group.order, factorial(7))
        # every kept element at least doubles the group built so far
        self.assertLessEqual(len(group.generators), 12)

    def test_enumeration_is_lazy(self):
        elements = brute_force_automorphisms(cycle_graph(6))
        self.assertTrue(is_automorphism(cycle_graph(6), next(elements)))
        self.assertEqual(sum(1 for _ in elements), 11)

    def test_cap(self):
        with self.assertRaises(SizeCapExceededError):
            brute_force_aut(cycle_graph(11))

    def test_oracle_equivalence(self):
        for g in oracle_corpus():
            with self.subTest(graph=g.name):
                searched = automorphism_group(g).group
                brute = brute_force_aut(g)
                self.assertEqual(searched.order, brute.order)
                self.assertEqual(set(searched.elements()), set(brute.elements()))

    @settings(max_examples=60, deadline=None)
    @given(small_graphs(max_order=7))
    def test_oracle_equivalence_on_random_graphs(self, g):
        searched = automorphism_group(g).group
        brute = brute_force_aut(g)
        self.assertEqual(searched.order, brute.order)
        for gamma in brute.generators:
            self.assertTrue(searched.contains(gamma))


class PartActionTests(SimpleTestCase):
    def test_classification(self):
        g = build(H52)
        f12 = symmetric_generators(g)[0]
        alpha = complement_map(g)
        identity = VertexPermutation.identity(g.order, g.name)
        self.assertEqual(classify_bipartite_action(g, identity), PartAction.PRESERVING)
        self.assertEqual(classify_bipartite_action(g, alpha), PartAction.SWAPPING)
        self.assertEqual(classify_bipartite_action(g, f12), PartAction.PRESERVING)
        self.assertEqual(classify_bipartite_action(g, compose(alpha, f12)), PartAction.SWAPPING)

    def test_mixed_action(self):
        g = cycle_graph(4)
        with self.assertRaises(MixedPartActionError):
            classify_bipartite_action(g, VertexPermutation((1, 0, 2, 3), g.name))

    def test_non_bipartite(self):
        g = cycle_graph(5)
        with self.assertRaises(InvalidGraphError):
            classify_bipartite_action(g, VertexPermutation.identity(5, g.name))

    def test_wrong_graph(self):
        with self.assertRaises(DomainMismatchError):
            classify_bipartite_action(build(H52), VertexPermutation.identity(20, "other"))

    def test_classification_is_a_homomorphism(self):
        for spec in ("H(5,2)", "H(6,1)", "Q3"):
            g = build(FamilySpec.parse(spec))
            group = automorphism_group(g).group
            rng = random.Random(spec)
            swaps = lambda f: classify_bipartite_action(g, f) == PartAction.SWAPPING
            for _ in range(200):
                a, b = group.random_element(rng), group.random_element(rng)
                self.assertEqual(swaps(compose(a, b)), swaps(a) != swaps(b))

    def test_unnamed_graphs_of_equal_order_are_distinct_domains(self):
        g = LabeledGraph(4, [(0, 1), (2, 3)])
        h = LabeledGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        self.assertNotEqual(g.name, h.name)
        self.assertEqual(g.name, LabeledGraph(4, [(0, 1), (2, 3)]).name)
        swap = automorphism_group(g).group.generators[0]
        with self.assertRaises(DomainMismatchError):
            classify_bipartite_action(h, swap)
