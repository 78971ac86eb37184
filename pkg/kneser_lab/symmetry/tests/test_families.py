from math import comb

import networkx as nx
from django.test import SimpleTestCase

from symmetry.aut_search import is_automorphism
from symmetry.exceptions import InvalidSpecError, NullGraphError
from symmetry.families import (
    Family,
    FamilySpec,
    boolean_lattice_iso,
    boolean_lattice_iso_holds,
    build,
    complement_map,
    cycle_graph,
    petersen_graph,
    star_graph,
    symmetric_generators,
    translation_generators,
)
from symmetry.graph_core import SubsetVertex
from symmetry.perm_core import compose


class FamilySpecTests(SimpleTestCase):
    def test_parse(self):
        self.assertEqual(FamilySpec.parse("H(5,2)"), FamilySpec(Family.BIPARTITE_KNESER, 5, 2))
        self.assertEqual(FamilySpec.parse(" K( 7 , 3 ) "), FamilySpec(Family.KNESER, 7, 3))
        self.assertEqual(FamilySpec.parse("J(4,2)"), FamilySpec(Family.JOHNSON, 4, 2))
        self.assertEqual(FamilySpec.parse("Q3"), FamilySpec(Family.HYPERCUBE, 3))
        self.assertEqual(FamilySpec.parse("BL_3"), FamilySpec(Family.BOOLEAN_LATTICE, 3))

    def test_str(self):
        for text in ("H(5,2)", "K(5,2)", "J(4,2)", "Q3", "BL3"):
            self.assertEqual(str(FamilySpec.parse(text)), text)

    def test_null_bipartite_kneser(self):
        with self.assertRaisesMessage(NullGraphError, "H(n, k) is a null graph"):
            FamilySpec.parse("H(4,2)")

    def test_invalid_specs(self):
        for text in ("H(3,2)", "H(3,0)", "K(4,2)", "J(5,3)", "Q0", "X(3,1)", "Q3(1)"):
            with self.subTest(text=text), self.assertRaises(InvalidSpecError):
                FamilySpec.parse(text)
        with self.assertRaises(InvalidSpecError):
            FamilySpec(Family.HYPERCUBE, 3, 1).validate()


class BuildTests(SimpleTestCase):
    def test_h52(self):
        g = build(FamilySpec(Family.BIPARTITE_KNESER, 5, 2))
        self.assertEqual((g.order, g.size, g.regular_degree()), (20, 30, 3))
        self.assertEqual(g.bipartition.count(1), 10)
        self.assertEqual(g.family_tag, Family.BIPARTITE_KNESER)

    def test_j42_is_octahedron(self):
        g = build(FamilySpec(Family.JOHNSON, 4, 2))
        self.assertEqual((g.order, g.regular_degree()), (6, 4))
        self.assertTrue(nx.is_isomorphic(g.to_networkx(), nx.octahedral_graph()))

    def test_k52_is_petersen(self):
        g = build(FamilySpec(Family.KNESER, 5, 2))
        self.assertEqual((g.order, g.regular_degree()), (10, 3))
        self.assertTrue(nx.is_isomorphic(g.to_networkx(), nx.petersen_graph()))
        self.assertTrue(nx.is_isomorphic(g.to_networkx(), petersen_graph().to_networkx()))

    def test_vertex_counts_and_regularity(self):
        for n in range(3, 9):
            for k in range(1, (n - 1) // 2 + 1):
                with self.subTest(n=n, k=k):
                    h = build(FamilySpec(Family.BIPARTITE_KNESER, n, k))
                    kn = build(FamilySpec(Family.KNESER, n, k))
                    j = build(FamilySpec(Family.JOHNSON, n, k))
                    self.assertEqual(h.order, 2 * comb(n, k))
                    self.assertEqual(h.regular_degree(), comb(n - k, k))
                    self.assertEqual(kn.order, comb(n, k))
                    self.assertEqual(kn.regular_degree(), comb(n - k, k))
                    self.assertEqual(j.order, comb(n, k))
                    self.assertEqual(j.regular_degree(), k * (n - k))
        for n in range(1, 7):
            q = build(FamilySpec(Family.HYPERCUBE, n))
            self.assertEqual((q.order, q.regular_degree()), (2**n, n))

    def test_vertex_order(self):
        g = build(FamilySpec(Family.BIPARTITE_KNESER, 5, 2))
        self.assertEqual(str(g.labels[0]), "{1,2}")
        self.assertEqual(str(g.labels[-1]), "{3,4,5}")
        keys = [label.sort_key() for label in g.labels]
        self.assertEqual(keys, sorted(keys))


class ComplementMapTests(SimpleTestCase):
    def test_involution(self):
        alpha = complement_map(build(FamilySpec(Family.BIPARTITE_KNESER, 5, 2)))
        self.assertTrue(compose(alpha, alpha).is_identity())

    def test_image(self):
        g = build(FamilySpec(Family.BIPARTITE_KNESER, 5, 2))
        v = g.index_of(SubsetVertex.parse("{1,2}", 5))
        self.assertEqual(str(g.labels[complement_map(g)(v)]), "{3,4,5}")

    def test_preserves_edges_of_h73(self):
        g = build(FamilySpec(Family.BIPARTITE_KNESER, 7, 3))
        alpha = complement_map(g)
        self.assertEqual(g.size, 140)
        for u, v in g.edges():
            self.assertTrue(g.has_edge(alpha(u), alpha(v)))

    def test_commutes_with_symmetric_action(self):
        for n, k in [(5, 2), (6, 1), (7, 3)]:
            g = build(FamilySpec(Family.BIPARTITE_KNESER, n, k))
            alpha = complement_map(g)
            for f in symmetric_generators(g):
                self.assertEqual(compose(alpha, f), compose(f, alpha))

    def test_other_families(self):
        with self.assertRaises(InvalidSpecError):
            complement_map(build(FamilySpec(Family.KNESER, 5, 2)))


class SymmetricGeneratorTests(SimpleTestCase):
    def test_generators_are_automorphisms(self):
        for text in ("H(5,2)", "H(7,3)", "K(6,2)", "J(5,2)", "J(4,2)", "Q3", "BL4"):
            g = build(FamilySpec.parse(text))
            for f in symmetric_generators(g):
                with self.subTest(graph=text, f=str(f)):
                    self.assertTrue(is_automorphism(g, f))

    def test_translations(self):
        q3 = build(FamilySpec(Family.HYPERCUBE, 3))
        translations = translation_generators(q3)
        self.assertEqual(len(translations), 3)
        for t in translations:
            self.assertTrue(is_automorphism(q3, t))
            self.assertTrue(compose(t, t).is_identity())
        with self.assertRaises(InvalidSpecError):
            translation_generators(build(FamilySpec(Family.KNESER, 5, 2)))


class BooleanLatticeTests(SimpleTestCase):
    def test_characteristic_vectors(self):
        iso = boolean_lattice_iso(3)
        self.assertEqual(iso[SubsetVertex(0, 3)], (0, 0, 0))
        self.assertEqual(iso[SubsetVertex.parse("{1,3}", 3)], (1, 0, 1))
        self.assertEqual(len(iso), 8)

    def test_isomorphism(self):
        for n in range(1, 7):
            with self.subTest(n=n):
                self.assertTrue(boolean_lattice_iso_holds(n))


class ControlGraphTests(SimpleTestCase):
    def test_controls(self):
        self.assertEqual(cycle_graph(6).regular_degree(), 2)
        self.assertEqual(star_graph(3).degrees(), [3, 1, 1, 1])
        self.assertEqual(petersen_graph().size, 15)
        with self.assertRaises(InvalidSpecError):
            cycle_graph(2)
