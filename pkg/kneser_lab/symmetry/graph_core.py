# graph_core.py
"""Immutable subset-labelled simple graphs and the metrics the suite needs."""

from __future__ import annotations

import hashlib
import itertools
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property

import networkx as nx
from networkx.algorithms.connectivity import (
    build_auxiliary_node_connectivity,
    local_node_connectivity,
)
from networkx.algorithms.flow import build_residual_network, edmonds_karp

from . import conf
from .exceptions import (
    DisconnectedGraphError,
    InvalidGraphError,
    SizeCapExceededError,
    SizeMismatchError,
)

logger = logging.getLogger(__name__)

MAX_GROUND_SET = 32


@dataclass(frozen=True, order=False)
class SubsetVertex:
    """A subset of the ground set [n], stored as a bit vector (bit i ↔ point i+1)."""

    bits: int
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_GROUND_SET:
            raise SizeMismatchError(
                f"Ground set size {self.n} is outside 0..{MAX_GROUND_SET}."
            )
        if self.bits < 0 or self.bits >> self.n:
            raise SizeMismatchError(
                f"Bit vector {self.bits:#x} does not fit a ground set of size {self.n}."
            )

    @classmethod
    def from_elements(cls, elements, n):
        """Build from 0-based ground points."""
        bits = 0
        for x in elements:
            if not 0 <= x < n:
                raise SizeMismatchError(f"Point {x + 1} is not in [{n}].")
            bits |= 1 << x
        return cls(bits, n)

    @classmethod
    def parse(cls, text, n):
        """Parse the 1-based rendering ``"{1,3}"``."""
        body = text.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise SizeMismatchError(f"Could not parse subset {text!r}.")
        inner = body[1:-1].strip()
        points = [int(x) - 1 for x in inner.split(",")] if inner else []
        return cls.from_elements(points, n)

    @classmethod
    def from_characteristic(cls, vector):
        return cls(sum(1 << i for i, x in enumerate(vector) if x), len(vector))

    @property
    def size(self):
        return self.bits.bit_count()

    def elements(self):
        return tuple(i for i in range(self.n) if self.bits >> i & 1)

    def characteristic(self):
        return tuple(self.bits >> i & 1 for i in range(self.n))

    def complement(self):
        return SubsetVertex(((1 << self.n) - 1) ^ self.bits, self.n)

    def mapped(self, images):
        """Elementwise image under a ground-set map given as an image tuple."""
        return SubsetVertex(sum(1 << images[i] for i in self.elements()), self.n)

    def sort_key(self):
        return (self.size, self.bits)

    def __str__(self):
        return "{" + ",".join(str(i + 1) for i in self.elements()) + "}"


def _mask(indices):
    m = 0
    for v in indices:
        m |= 1 << v
    return m


def _content_name(order, rows):
    """Default name for an unnamed graph; distinct edge sets get distinct names."""
    digest = hashlib.blake2b(repr(rows).encode("ascii"), digest_size=6).hexdigest()
    return f"graph{order}-{digest}"


def _members(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class LabeledGraph:
    """Immutable simple graph with optional subset labels and bipartition.

    ``neighbors[v]`` is the sorted neighbour tuple of ``v`` and ``rows[v]`` the
    same set as an int bitset.  ``bipartition[v]`` is 1 or 2 when present.
    """

    def __init__(self, order, edges, *, labels=None, bipartition=None,
                 family_tag="custom", name=None):
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise InvalidGraphError(f"Edge ({u}, {v}) is out of range for {order} vertices.")
            if u == v:
                raise InvalidGraphError(f"Self-loop at vertex {u}.")
            if rows[u] >> v & 1:
                raise InvalidGraphError(f"Duplicate edge ({u}, {v}).")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.order = order
        self.rows = tuple(rows)
        self.neighbors = tuple(tuple(_members(r)) for r in rows)
        self.labels = tuple(labels) if labels is not None else None
        self.bipartition = tuple(bipartition) if bipartition is not None else None
        self.family_tag = family_tag
        self.name = name or _content_name(order, self.rows)
        self.validate()

    def validate(self):
        """Raise ``InvalidGraphError`` unless the structural invariants hold."""
        for v, row in enumerate(self.rows):
            if row >> v & 1:
                raise InvalidGraphError(f"Self-loop at vertex {v}.")
            for u in _members(row):
                if not self.rows[u] >> v & 1:
                    raise InvalidGraphError(f"Adjacency is not symmetric at ({v}, {u}).")
        if self.labels is not None:
            if len(self.labels) != self.order:
                raise InvalidGraphError("Label table size differs from the vertex count.")
            if len(set(self.labels)) != self.order:
                raise InvalidGraphError("Vertex labels are not pairwise distinct.")
        if self.bipartition is not None:
            if len(self.bipartition) != self.order or set(self.bipartition) - {1, 2}:
                raise InvalidGraphError("Bipartition tags must be 1 or 2 for every vertex.")
            for u, v in self.edges():
                if self.bipartition[u] == self.bipartition[v]:
                    raise InvalidGraphError(
                        f"Edge ({u}, {v}) joins two vertices of part {self.bipartition[u]}."
                    )

    def __repr__(self):
        return f"<LabeledGraph {self.name}: {self.order} vertices, {self.size} edges>"

    @cached_property
    def size(self):
        return sum(len(n) for n in self.neighbors) // 2

    @cached_property
    def _label_index(self):
        return {label: i for i, label in enumerate(self.labels or ())}

    def index_of(self, label):
        return self._label_index.get(label)

    def label_of(self, v):
        return str(self.labels[v]) if self.labels is not None else str(v)

    def degree(self, v):
        return len(self.neighbors[v])

    def degrees(self):
        return [len(n) for n in self.neighbors]

    def has_edge(self, u, v):
        return bool(self.rows[u] >> v & 1)

    def edges(self):
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nbrs in enumerate(self.neighbors):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def regular_degree(self):
        """The common degree if the graph is regular, else ``None``."""
        degrees = set(self.degrees())
        return degrees.pop() if len(degrees) == 1 else None

    def part(self, index):
        """Vertex indices tagged with part ``index``."""
        return tuple(v for v in range(self.order) if self.bipartition[v] == index)

    def to_networkx(self):
        G = nx.Graph()
        G.add_nodes_from(range(self.order))
        G.add_edges_from(self.edges())
        return G

    @classmethod
    def from_networkx(cls, G, *, name=None, bipartite_attribute=None, family_tag="custom"):
        """Adopt a networkx graph, relabelling its nodes 0..n-1 in sorted order.

        With ``bipartite_attribute`` the node attribute (0/1, as set by the
        networkx bipartite generators) becomes the part tag 1/2.
        """
        G = nx.convert_node_labels_to_integers(G, ordering="sorted", label_attribute="source")
        bipartition = None
        if bipartite_attribute is not None:
            tags = nx.get_node_attributes(G, bipartite_attribute)
            bipartition = [tags[v] + 1 for v in range(G.number_of_nodes())]
        edges = sorted(tuple(sorted(e)) for e in G.edges())
        return cls(G.number_of_nodes(), edges, bipartition=bipartition,
                   family_tag=family_tag, name=name)


def _check_index(g, v):
    if not 0 <= v < g.order:
        raise IndexError(f"Vertex {v} is out of range for {g.name!r} ({g.order} vertices).")


def bfs_distances(g, source):
    """Distances from ``source``; unreachable vertices map to ``None``."""
    _check_index(g, source)
    dist = [None] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g, u, v):
    """Shortest-path length from ``u`` to ``v``, or ``None`` when unreachable."""
    _check_index(g, v)
    return bfs_distances(g, u)[v]


def is_connected(g):
    if g.order == 0:
        raise InvalidGraphError("Connectivity of the empty graph is undefined.")
    return None not in bfs_distances(g, 0)


def diameter(g):
    if not is_connected(g):
        raise DisconnectedGraphError(f"{g.name} is disconnected; its diameter is infinite.")
    return max(max(bfs_distances(g, v)) for v in range(g.order))


def parity_parts(g):
    """Two-colour ``g`` by BFS parity.

    Returns a tuple of part tags (1 or 2) per vertex, or ``None`` when an odd
    cycle exists.  Each component's lowest vertex gets part 1.
    """
    tags = [None] * g.order
    for start in range(g.order):
        if tags[start] is not None:
            continue
        tags[start] = 1
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if tags[w] is None:
                    tags[w] = 3 - tags[u]
                    queue.append(w)
                elif tags[w] == tags[u]:
                    return None
    return tuple(tags)


def vertex_connectivity(g):
    """Minimum vertex cut size via unit-capacity max-flow on the split graph.

    Disconnected graphs give 0 and complete graphs ``|V| - 1``.  Only the
    pairs needed by the minimum-degree argument are flowed, and each flow is
    cut off at the best bound found so far.
    """
    if g.order < 2:
        raise InvalidGraphError("Vertex connectivity needs at least two vertices.")
    if not is_connected(g):
        return 0
    if g.size == g.order * (g.order - 1) // 2:
        return g.order - 1
    G = g.to_networkx()
    H = build_auxiliary_node_connectivity(G)
    R = build_residual_network(H, "capacity")
    kwargs = {"flow_func": edmonds_karp, "auxiliary": H, "residual": R}

    degrees = g.degrees()
    v = min(range(g.order), key=lambda x: (degrees[x], x))
    best = degrees[v]
    for w in range(g.order):
        if w == v or g.has_edge(v, w):
            continue
        best = min(best, local_node_connectivity(G, v, w, cutoff=best, **kwargs))
    for x, y in itertools.combinations(g.neighbors[v], 2):
        if g.has_edge(x, y):
            continue
        best = min(best, local_node_connectivity(G, x, y, cutoff=best, **kwargs))
    logger.debug("vertex connectivity of %s is %d", g.name, best)
    return best


def common_neighbors(g, u, v):
    _check_index(g, u)
    _check_index(g, v)
    return frozenset(_members(g.rows[u] & g.rows[v]))


def _colour_sort(candidates, adj):
    """Greedy colouring of ``candidates`` giving the clique-size upper bound."""
    order = []
    colours = []
    colour = 0
    remaining = candidates
    while remaining:
        colour += 1
        pool = remaining
        this_colour = 0
        while pool:
            low = pool & -pool
            v = low.bit_length() - 1
            order.append(v)
            colours.append(colour)
            this_colour |= low
            pool &= ~low
            pool &= ~adj[v]
        remaining &= ~this_colour
    return order, colours


def independence_number(g, *, max_vertices=None, allow_large=False):
    """Exact maximum independent set size by branch and bound.

    Searches cliques of the complement with the greedy colouring bound.
    Graphs above ``INDEPENDENCE_MAX_VERTICES`` are refused unless
    ``allow_large`` is set.
    """
    cap = conf.resolve("INDEPENDENCE_MAX_VERTICES", max_vertices)
    if g.order > cap and not allow_large:
        raise SizeCapExceededError(
            f"{g.name} has {g.order} vertices, above the independence-number cap "
            f"of {cap}; pass allow_large=True (or raise INDEPENDENCE_MAX_VERTICES) "
            f"to search anyway."
        )
    full = (1 << g.order) - 1
    adj = [full & ~row & ~(1 << v) for v, row in enumerate(g.rows)]
    best = 0

    def expand(size, candidates):
        nonlocal best
        order, colours = _colour_sort(candidates, adj)
        for i in range(len(order) - 1, -1, -1):
            if size + colours[i] <= best:
                return
            v = order[i]
            bit = 1 << v
            if not candidates & bit:
                continue
            narrowed = candidates & adj[v]
            if narrowed:
                expand(size + 1, narrowed)
            elif size + 1 > best:
                best = size + 1
            candidates &= ~bit

    if g.order:
        expand(0, full)
    return best


def neighborhood_injective_on_part(g, part):
    """True iff the vertices outside ``part`` have pairwise distinct neighbourhoods.

    When this holds, an automorphism fixing ``part`` pointwise fixes every
    vertex.
    """
    if g.bipartition is None:
        raise InvalidGraphError(f"{g.name} carries no bipartition.")
    if part not in (1, 2):
        raise ValueError(f"Part must be 1 or 2, not {part!r}.")
    rows = [g.rows[v] for v in range(g.order) if g.bipartition[v] != part]
    return len(set(rows)) == len(rows)


def induced_subgraph(g, keep, *, name=None, family_tag=None):
    """Subgraph induced on the vertex indices ``keep``, preserving their order."""
    keep = list(keep)
    position = {v: i for i, v in enumerate(keep)}
    edges = [
        (position[u], position[v])
        for u, v in g.edges()
        if u in position and v in position
    ]
    return LabeledGraph(
        len(keep),
        edges,
        labels=[g.labels[v] for v in keep] if g.labels is not None else None,
        bipartition=[g.bipartition[v] for v in keep] if g.bipartition is not None else None,
        family_tag=family_tag or g.family_tag,
        name=name or f"{g.name}[{_mask(keep):x}]",
    )
