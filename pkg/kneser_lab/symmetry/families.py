# families.py
"""Constructors for the subset-labelled graph families and their symmetries.

Families: bipartite Kneser H(n,k), Kneser K(n,k), Johnson J(n,k), hypercube
Q_n and Boolean lattice BL_n.  Vertices are ordered by (cardinality, bit
value) so vertex indices, graph6 and DOT output are reproducible.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx
from django.db import models

from .exceptions import InvalidSpecError, NullGraphError
from .graph_core import MAX_GROUND_SET, LabeledGraph, SubsetVertex
from .perm_core import Permutation, VertexPermutation, induced_subset_action


class Family(models.TextChoices):
    BIPARTITE_KNESER = "H", "Bipartite Kneser"
    KNESER = "K", "Kneser"
    JOHNSON = "J", "Johnson"
    HYPERCUBE = "Q", "Hypercube"
    BOOLEAN_LATTICE = "BL", "Boolean lattice"


SUBSET_FAMILIES = (Family.BIPARTITE_KNESER, Family.KNESER, Family.JOHNSON)
CUBE_FAMILIES = (Family.HYPERCUBE, Family.BOOLEAN_LATTICE)

SUBSET_SPEC_RE = re.compile(r"^\s*([HKJ])\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")
CUBE_SPEC_RE = re.compile(r"^\s*(Q|BL)_?\s*(\d+)\s*$")

FAMILY_ORDER = {family: i for i, family in enumerate(Family)}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int
    k: int | None = None

    @classmethod
    def parse(cls, text):
        """Parse ``"H(5,2)"``, ``"K(5,2)"``, ``"J(4,2)"``, ``"Q3"`` or ``"BL3"``."""
        match = SUBSET_SPEC_RE.match(text)
        if match:
            spec = cls(Family(match.group(1)), int(match.group(2)), int(match.group(3)))
        else:
            match = CUBE_SPEC_RE.match(text)
            if not match:
                raise InvalidSpecError(
                    f"Cannot parse {text!r}; expected H(n,k), K(n,k), J(n,k), Qn or BLn."
                )
            spec = cls(Family(match.group(1)), int(match.group(2)))
        spec.validate()
        return spec

    def validate(self):
        n, k = self.n, self.k
        if not 1 <= n <= MAX_GROUND_SET:
            raise InvalidSpecError(f"{self}: n must lie in 1..{MAX_GROUND_SET}.")
        if self.family in CUBE_FAMILIES:
            if k is not None:
                raise InvalidSpecError(f"{self}: {self.family.label} takes no k.")
            return self
        if k is None or k < 1:
            raise InvalidSpecError(f"{self}: k must be at least 1.")
        if self.family == Family.BIPARTITE_KNESER:
            if n == 2 * k:
                raise NullGraphError(
                    f"{self}: for n = 2k, H(n, k) is a null graph (no edges); "
                    f"need n >= 2k + 1."
                )
            if n < 2 * k:
                raise InvalidSpecError(f"{self}: bipartite Kneser graphs need n >= 2k + 1.")
        elif self.family == Family.KNESER:
            if n <= 2 * k:
                raise InvalidSpecError(f"{self}: Kneser graphs need n >= 2k + 1.")
        elif 2 * k > n:
            raise InvalidSpecError(f"{self}: Johnson graphs need k <= n/2.")
        return self

    def sort_key(self):
        return (FAMILY_ORDER[self.family], self.n, self.k or 0)

    def __str__(self):
        if self.family in CUBE_FAMILIES:
            return f"{self.family.value}{self.n}"
        return f"{self.family.value}({self.n},{self.k})"


def _subsets(n, size):
    for combo in itertools.combinations(range(n), size):
        yield SubsetVertex.from_elements(combo, n)


def _sorted_labels(labels):
    return sorted(labels, key=SubsetVertex.sort_key)


def _pairs(labels, adjacent):
    return [
        (i, j)
        for i, j in itertools.combinations(range(len(labels)), 2)
        if adjacent(labels[i], labels[j])
    ]


def bipartite_kneser_graph(n, k):
    labels = _sorted_labels([*_subsets(n, k), *_subsets(n, n - k)])

    def contained(a, b):
        return a.bits & ~b.bits == 0 or b.bits & ~a.bits == 0

    edges = [
        (i, j)
        for i, j in _pairs(labels, contained)
        if labels[i].size != labels[j].size
    ]
    return LabeledGraph(
        len(labels),
        edges,
        labels=labels,
        bipartition=[1 if label.size == k else 2 for label in labels],
        family_tag=Family.BIPARTITE_KNESER,
        name=f"H({n},{k})",
    )


def kneser_graph(n, k):
    labels = _sorted_labels(_subsets(n, k))
    edges = _pairs(labels, lambda a, b: a.bits & b.bits == 0)
    return LabeledGraph(
        len(labels), edges, labels=labels, family_tag=Family.KNESER, name=f"K({n},{k})"
    )


def johnson_graph(n, k):
    labels = _sorted_labels(_subsets(n, k))
    edges = _pairs(labels, lambda a, b: (a.bits & b.bits).bit_count() == k - 1)
    return LabeledGraph(
        len(labels), edges, labels=labels, family_tag=Family.JOHNSON, name=f"J({n},{k})"
    )


def hypercube_graph(n):
    """Q_n on {0,1}^n: tuples adjacent when they differ in exactly one coordinate."""
    vectors = sorted(
        itertools.product((0, 1), repeat=n),
        key=lambda t: SubsetVertex.from_characteristic(t).sort_key(),
    )
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(vectors)), 2)
        if sum(a != b for a, b in zip(vectors[i], vectors[j])) == 1
    ]
    labels = [SubsetVertex.from_characteristic(t) for t in vectors]
    return LabeledGraph(
        len(labels),
        edges,
        labels=labels,
        bipartition=[1 + sum(t) % 2 for t in vectors],
        family_tag=Family.HYPERCUBE,
        name=f"Q{n}",
    )


def boolean_lattice_graph(n):
    """BL_n on subsets of [n]: adjacent when the symmetric difference is a singleton."""
    labels = _sorted_labels(SubsetVertex(bits, n) for bits in range(1 << n))
    edges = _pairs(labels, lambda a, b: (a.bits ^ b.bits).bit_count() == 1)
    return LabeledGraph(
        len(labels),
        edges,
        labels=labels,
        bipartition=[1 + label.size % 2 for label in labels],
        family_tag=Family.BOOLEAN_LATTICE,
        name=f"BL{n}",
    )


BUILDERS = {
    Family.BIPARTITE_KNESER: bipartite_kneser_graph,
    Family.KNESER: kneser_graph,
    Family.JOHNSON: johnson_graph,
    Family.HYPERCUBE: hypercube_graph,
    Family.BOOLEAN_LATTICE: boolean_lattice_graph,
}


@lru_cache(maxsize=64)
def build(spec):
    """Build the graph named by ``spec``; results are shared (graphs are immutable)."""
    spec.validate()
    builder = BUILDERS[spec.family]
    if spec.family in CUBE_FAMILIES:
        return builder(spec.n)
    return builder(spec.n, spec.k)


def complement_map(g):
    """α: ``v ↦ [n] \\ v`` on a bipartite Kneser graph."""
    if g.family_tag != Family.BIPARTITE_KNESER:
        raise InvalidSpecError(
            f"The complement map is defined on bipartite Kneser graphs, not {g.name}."
        )
    return VertexPermutation(
        tuple(g.index_of(label.complement()) for label in g.labels), g.name
    )


def ground_generators(n):
    """The transposition (1 2) and the n-cycle (1 2 ... n), which generate Sym([n])."""
    if n < 2:
        return []
    gens = [Permutation.transposition(n, 0, 1), Permutation.cycle(n)]
    return list(dict.fromkeys(gens))


def symmetric_generators(spec_or_graph):
    """Induced actions f_θ of the generators of Sym([n]) on the family graph."""
    g = build(spec_or_graph) if isinstance(spec_or_graph, FamilySpec) else spec_or_graph
    n = g.labels[0].n
    return [induced_subset_action(theta, g) for theta in ground_generators(n)]


def translation_generators(g):
    """The maps v ↦ v △ {i} of Q_n / BL_n, generating the translation group Z₂ⁿ."""
    if g.family_tag not in CUBE_FAMILIES:
        raise InvalidSpecError(f"Translations are defined on Q_n and BL_n, not {g.name}.")
    n = g.labels[0].n
    return [
        VertexPermutation(
            tuple(g.index_of(SubsetVertex(label.bits ^ (1 << i), n)) for label in g.labels),
            g.name,
        )
        for i in range(n)
    ]


def boolean_lattice_iso(n):
    """The bijection BL_n → Q_n sending a subset to its characteristic vector."""
    if n < 1:
        raise InvalidSpecError("BL_n needs n >= 1.")
    return {label: label.characteristic() for label in build(FamilySpec(Family.BOOLEAN_LATTICE, n)).labels}


def is_isomorphism(g1, g2, vertex_map):
    """True iff ``vertex_map`` (a sequence g1-index → g2-index) is an isomorphism."""
    if g1.order != g2.order or sorted(vertex_map) != list(range(g2.order)):
        return False
    return g1.size == g2.size and all(
        g2.has_edge(vertex_map[u], vertex_map[v]) for u, v in g1.edges()
    )


def boolean_lattice_iso_holds(n):
    """Check the characteristic-vector bijection is an isomorphism BL_n ≅ Q_n."""
    bl = build(FamilySpec(Family.BOOLEAN_LATTICE, n))
    cube = build(FamilySpec(Family.HYPERCUBE, n))
    coords = {label.characteristic(): i for i, label in enumerate(cube.labels)}
    mapping = boolean_lattice_iso(n)
    vertex_map = [coords[mapping[label]] for label in bl.labels]
    inverse = [0] * len(vertex_map)
    for i, j in enumerate(vertex_map):
        inverse[j] = i
    return is_isomorphism(bl, cube, vertex_map) and is_isomorphism(cube, bl, inverse)


# Control graphs for negative checks and the brute-force oracle corpus.


def edgeless_graph(m):
    return LabeledGraph.from_networkx(nx.empty_graph(m), name=f"E{m}")


def path_graph(m):
    return LabeledGraph.from_networkx(nx.path_graph(m), name=f"P{m}")


def cycle_graph(m):
    if m < 3:
        raise InvalidSpecError("Cycles need at least 3 vertices.")
    return LabeledGraph.from_networkx(nx.cycle_graph(m), name=f"C{m}")


def complete_graph(m):
    return LabeledGraph.from_networkx(nx.complete_graph(m), name=f"K{m}")


def complete_bipartite_graph(a, b):
    return LabeledGraph.from_networkx(
        nx.complete_bipartite_graph(a, b), name=f"K{a},{b}", bipartite_attribute="bipartite"
    )


def star_graph(leaves):
    """K_{1,leaves}: the centre is vertex 0."""
    return LabeledGraph.from_networkx(nx.star_graph(leaves), name=f"S{leaves}")


def petersen_graph():
    """Outer 5-cycle on 0..4, spokes i -> i+5, inner pentagram on 5..9."""
    return LabeledGraph.from_networkx(nx.petersen_graph(), name="Petersen")
