# aut_search.py
"""Automorphism groups by equitable refinement and individualization.

The search walks the leftmost path of the individualization-refinement
tree to a discrete partition, then, level by level from the bottom, asks
for every other vertex of the target cell whether some automorphism fixing
the path prefix moves the path vertex there.  Vertices already in the same
orbit of the generators found so far (or in the orbit of a vertex that
already failed) are skipped.  The generators found this way generate the
whole group; Schreier-Sims turns them into an exact order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from django.db import models

from . import conf
from .exceptions import (
    BudgetExceededError,
    DomainMismatchError,
    InvalidGraphError,
    MixedPartActionError,
    NotAnAutomorphismError,
    SizeCapExceededError,
)
from .graph_core import parity_parts
from .perm_core import VertexPermutation, schreier_sims

logger = logging.getLogger(__name__)


class InitialColoring(models.TextChoices):
    UNIT = "unit", "Unit partition"
    DEGREE = "degree", "Degree classes"
    PARTS = "parts", "Degree and bipartition tag"


class PartAction(models.TextChoices):
    PRESERVING = "preserving", "Preserves both parts"
    SWAPPING = "swapping", "Swaps the parts"


def _mask(cell):
    m = 0
    for v in cell:
        m |= 1 << v
    return m


class OrderedPartition:
    """An ordered sequence of disjoint cells covering the vertex set.

    Cells are kept sorted by vertex index; cell positions carry the meaning.
    """

    __slots__ = ("cells",)

    def __init__(self, cells):
        self.cells = tuple(tuple(sorted(c)) for c in cells if c)

    @classmethod
    def unit(cls, order):
        return cls([range(order)])

    @classmethod
    def from_colors(cls, colors):
        """Cells ordered by colour value."""
        groups = {}
        for v, c in enumerate(colors):
            groups.setdefault(c, []).append(v)
        return cls(groups[c] for c in sorted(groups))

    def __eq__(self, other):
        return isinstance(other, OrderedPartition) and self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __len__(self):
        return len(self.cells)

    def __repr__(self):
        return f"OrderedPartition({[list(c) for c in self.cells]})"

    @property
    def order(self):
        """The vertices in cell order."""
        return tuple(v for cell in self.cells for v in cell)

    def shape(self):
        return tuple(len(c) for c in self.cells)

    def is_discrete(self):
        return all(len(c) == 1 for c in self.cells)

    def target_cell(self):
        """First non-singleton cell of smallest size, or ``None`` when discrete."""
        best = None
        for cell in self.cells:
            if len(cell) > 1 and (best is None or len(cell) < len(best)):
                best = cell
        return best

    def individualize(self, v):
        """Split ``v`` out of its cell, placing it first."""
        cells = []
        for cell in self.cells:
            if v in cell and len(cell) > 1:
                cells.append((v,))
                cells.append(tuple(x for x in cell if x != v))
            else:
                cells.append(cell)
        partition = OrderedPartition.__new__(OrderedPartition)
        partition.cells = tuple(cells)
        return partition

    def is_equitable(self, g):
        masks = [_mask(c) for c in self.cells]
        for cell in self.cells:
            for m in masks:
                if len({(g.rows[v] & m).bit_count() for v in cell}) > 1:
                    return False
        return True

    def is_finer_or_equal(self, other):
        """True iff every cell of ``self`` lies inside a cell of ``other``."""
        owner = {}
        for i, cell in enumerate(other.cells):
            for v in cell:
                owner[v] = i
        return all(len({owner[v] for v in cell}) == 1 for cell in self.cells)


def refine(g, p, stats=None):
    """Coarsest equitable partition finer than ``p``.

    Each cell in turn serves as splitter; every cell is split by the number
    of neighbours its vertices have in the splitter, pieces ordered by
    increasing count.  Passes repeat until nothing splits.
    """
    if stats is not None:
        stats["refinements"] += 1
    cells = [list(c) for c in p.cells]
    rows = g.rows
    changed = True
    while changed and len(cells) < g.order:
        changed = False
        s = 0
        while s < len(cells):
            splitter = _mask(cells[s])
            split = []
            for cell in cells:
                if len(cell) == 1:
                    split.append(cell)
                    continue
                counts = {}
                for v in cell:
                    counts.setdefault((rows[v] & splitter).bit_count(), []).append(v)
                if len(counts) == 1:
                    split.append(cell)
                else:
                    changed = True
                    split.extend(counts[c] for c in sorted(counts))
            cells = split
            s += 1
    partition = OrderedPartition.__new__(OrderedPartition)
    partition.cells = tuple(tuple(c) for c in cells)
    return partition


def initial_partition(g, coloring=None):
    coloring = InitialColoring(conf.resolve("INITIAL_COLORING", coloring))
    if coloring == InitialColoring.UNIT:
        return OrderedPartition.unit(g.order)
    degrees = g.degrees()
    if coloring == InitialColoring.PARTS and g.bipartition is not None:
        return OrderedPartition.from_colors(list(zip(degrees, g.bipartition)))
    return OrderedPartition.from_colors(degrees)


def is_automorphism(g, f):
    """{u,v} ∈ E ⇔ {f(u), f(v)} ∈ E, for a bijection ``f`` of the vertices."""
    if f.degree != g.order:
        return False
    return all(
        g.rows[f(v)] == _mask(f(u) for u in g.neighbors[v]) for v in range(g.order)
    )


@dataclass
class AutResult:
    group: object
    node_count: int
    refinement_count: int
    trace: tuple[str, ...] = field(default=())

    @property
    def order(self):
        return self.group.order


class _Search:
    def __init__(self, g, budget, trace):
        self.g = g
        self.budget = budget
        self.trace = [] if trace else None
        self.stats = {"refinements": 0}
        self.nodes = 0

    def node(self, partition, depth):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"Automorphism search on {self.g.name} exceeded its budget of "
                f"{self.budget} nodes.",
                node_count=self.nodes,
            )
        refined = refine(self.g, partition, self.stats)
        if self.trace is not None:
            shape = ",".join(map(str, refined.shape()))
            self.trace.append(f"node {self.nodes} depth {depth} cells {len(refined)} shape {shape}")
        return refined

    def invariant(self, partition):
        masks = [_mask(c) for c in partition.cells]
        rows = self.g.rows
        return tuple(
            (len(cell), tuple((rows[cell[0]] & m).bit_count() for m in masks))
            for cell in partition.cells
        )

    def run(self, start):
        g = self.g
        path = [self.node(start, 0)]
        targets = []
        while not path[-1].is_discrete():
            cell = path[-1].target_cell()
            targets.append(cell)
            path.append(self.node(path[-1].individualize(cell[0]), len(path)))
        self.first_leaf = path[-1].order
        self.path_invariants = [self.invariant(p) for p in path]

        generators = []
        for level in reversed(range(len(targets))):
            v = targets[level][0]
            failed = []
            for w in targets[level][1:]:
                classes = _orbit_classes(generators, g.order)
                if classes[w] == classes[v] or any(classes[w] == classes[x] for x in failed):
                    continue
                gamma = self.search_subtree(path[level].individualize(w), level + 1)
                if gamma is None:
                    failed.append(w)
                else:
                    generators.append(gamma)
                    logger.debug(
                        "%s: level %d maps %d -> %d, %d generators so far",
                        g.name, level, v, w, len(generators),
                    )
        return generators

    def search_subtree(self, partition, depth):
        node = self.node(partition, depth)
        if depth >= len(self.path_invariants) or self.invariant(node) != self.path_invariants[depth]:
            return None
        if node.is_discrete():
            images = [0] * self.g.order
            for a, b in zip(self.first_leaf, node.order):
                images[a] = b
            gamma = VertexPermutation(tuple(images), self.g.name)
            return gamma if is_automorphism(self.g, gamma) else None
        for u in node.target_cell():
            gamma = self.search_subtree(node.individualize(u), depth + 1)
            if gamma is not None:
                return gamma
        return None


def _orbit_classes(generators, order):
    """Orbit representative per vertex under ``generators`` (union-find)."""
    parent = list(range(order))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        for x, y in enumerate(gen.images):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    return [find(x) for x in range(order)]


def automorphism_group(g, *, budget=None, trace=False, coloring=None):
    """Generators and exact order of Aut(g) (or of the colour-preserving subgroup).

    With the default unit colouring the result is the full automorphism
    group.  ``coloring="parts"`` restricts to automorphisms preserving the
    bipartition tag.  Raises ``BudgetExceededError`` rather than answer
    from an incomplete search.
    """
    if g.order < 1:
        raise InvalidGraphError("Automorphism search needs at least one vertex.")
    search = _Search(g, conf.resolve("NODE_BUDGET", budget), trace)
    generators = search.run(initial_partition(g, coloring))
    for gamma in generators:
        if not is_automorphism(g, gamma):
            raise NotAnAutomorphismError(f"Search produced a non-automorphism {gamma} of {g.name}.")
    group = schreier_sims(generators, degree=g.order, graph_id=g.name)
    logger.debug(
        "Aut(%s): order %d, %d generators, %d nodes, %d refinements",
        g.name, group.order, len(generators), search.nodes, search.stats["refinements"],
    )
    return AutResult(
        group=group,
        node_count=search.nodes,
        refinement_count=search.stats["refinements"],
        trace=tuple(search.trace or ()),
    )


def brute_force_automorphisms(g, *, max_vertices=None):
    """Yield every adjacency-preserving bijection, by exhaustive extension of partial maps."""
    cap = conf.resolve("BRUTE_FORCE_MAX_VERTICES", max_vertices)
    if g.order > cap:
        raise SizeCapExceededError(
            f"{g.name} has {g.order} vertices; brute-force enumeration is capped at {cap}."
        )
    n = g.order
    degrees = g.degrees()
    images = [0] * n

    def extend(v, used):
        if v == n:
            yield VertexPermutation(tuple(images), g.name)
            return
        for w in range(n):
            if used >> w & 1 or degrees[w] != degrees[v]:
                continue
            if all(g.has_edge(u, v) == g.has_edge(images[u], w) for u in range(v)):
                images[v] = w
                yield from extend(v + 1, used | 1 << w)

    yield from extend(0, 0)


def brute_force_aut(g, *, max_vertices=None):
    """Aut(g) by enumeration; only elements outside the group built so far are kept."""
    group = schreier_sims([], degree=g.order, graph_id=g.name)
    kept = []
    for gamma in brute_force_automorphisms(g, max_vertices=max_vertices):
        if not group.contains(gamma):
            kept.append(gamma)
            group = schreier_sims(kept)
    return group


def classify_bipartite_action(g, f):
    """Whether the automorphism ``f`` preserves or swaps the two parts of ``g``.

    On a connected bipartite graph every automorphism does one or the other;
    a mixed image raises ``MixedPartActionError``.
    """
    if f.graph_id != g.name or f.degree != g.order:
        raise DomainMismatchError(f"{f} does not act on {g.name}.")
    parts = g.bipartition or parity_parts(g)
    if parts is None:
        raise InvalidGraphError(f"{g.name} is not bipartite.")
    same = {parts[f(v)] == parts[v] for v in range(g.order)}
    if same == {True}:
        return PartAction.PRESERVING
    if same == {False}:
        return PartAction.SWAPPING
    raise MixedPartActionError(
        f"{f} maps part 1 of {g.name} into both parts; it is not an automorphism "
        f"of a connected bipartite graph."
    )
