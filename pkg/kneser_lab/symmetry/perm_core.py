# perm_core.py
"""Permutations of the ground set, induced actions, and permutation groups.

Composition convention, used everywhere in the app: ``compose(p, q)`` is
``p ∘ q``, i.e. ``q`` is applied first, ``(p ∘ q)(x) = p(q(x))``.

The ground set is 0-based internally; cycle notation and image lists are
rendered and parsed 1-based.
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from math import prod

from .exceptions import (
    DomainMismatchError,
    InvalidPermutationError,
    LabelNotFoundError,
    NotAnInvolutionError,
    SizeMismatchError,
)

logger = logging.getLogger(__name__)

CYCLE_RE = re.compile(r"\(\s*(\d+(?:[\s,]+\d+)*)?\s*\)")
IMAGE_LIST_RE = re.compile(r"^\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]$")


def _check_images(images):
    if sorted(images) != list(range(len(images))):
        raise InvalidPermutationError(
            f"Images {list(images)} do not form a bijection of 0..{len(images) - 1}."
        )


def _cycles(images):
    seen = set()
    cycles = []
    for start in range(len(images)):
        if start in seen or images[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        x = images[start]
        while x != start:
            seen.add(x)
            cycle.append(x)
            x = images[x]
        cycles.append(tuple(cycle))
    return cycles


def _format_cycles(images):
    cycles = _cycles(images)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cycles)


def _parse_cycles(text, size=None):
    stripped = text.strip()
    if not stripped:
        raise InvalidPermutationError("Empty cycle notation.")
    cycles = []
    pos = 0
    for match in CYCLE_RE.finditer(stripped):
        if stripped[pos : match.start()].strip():
            raise InvalidPermutationError(f"Could not parse cycle notation {text!r}.")
        pos = match.end()
        if match.group(1):
            cycles.append([int(x) for x in re.split(r"[\s,]+", match.group(1))])
    if stripped[pos:].strip():
        raise InvalidPermutationError(f"Could not parse cycle notation {text!r}.")
    largest = max((x for c in cycles for x in c), default=0)
    if size is None:
        size = largest
    if any(x < 1 or x > size for c in cycles for x in c):
        raise InvalidPermutationError(
            f"Cycle notation {text!r} mentions points outside 1..{size}."
        )
    images = list(range(size))
    touched = set()
    for cycle in cycles:
        if len(set(cycle)) != len(cycle) or touched & set(cycle):
            raise InvalidPermutationError(f"Cycles in {text!r} are not disjoint.")
        touched.update(cycle)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a - 1] = b - 1
    return tuple(images)


def _parse_image_list(text):
    match = IMAGE_LIST_RE.match(text.strip())
    if not match:
        raise InvalidPermutationError(f"Could not parse image list {text!r}.")
    values = [int(x) for x in match.group(1).split(",")] if match.group(1) else []
    images = tuple(x - 1 for x in values)
    _check_images(images)
    return images


@dataclass(frozen=True)
class Permutation:
    """A bijection θ of the ground set [n]."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        _check_images(self.images)

    @property
    def n(self):
        return len(self.images)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n, a, b):
        """The transposition of 0-based points ``a`` and ``b``."""
        images = list(range(n))
        images[a], images[b] = b, a
        return cls(tuple(images))

    @classmethod
    def cycle(cls, n):
        """The n-cycle (1 2 ... n)."""
        return cls(tuple((x + 1) % n for x in range(n)))

    @classmethod
    def from_cycles(cls, text, n=None):
        """Parse one-line cycle notation such as ``"(1 2)(3 4 5)"``."""
        return cls(_parse_cycles(text, n))

    @classmethod
    def from_image_list(cls, text):
        """Parse an image list such as ``"[2,1,4,5,3]"``."""
        return cls(_parse_image_list(text))

    def __call__(self, x):
        return self.images[x]

    def __mul__(self, other):
        return compose(self, other)

    def inverse(self):
        inv = [0] * self.n
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def is_identity(self):
        return all(x == y for x, y in enumerate(self.images))

    def to_cycles(self):
        return _format_cycles(self.images)

    def to_image_list(self):
        return "[" + ",".join(str(y + 1) for y in self.images) + "]"

    def __str__(self):
        return self.to_cycles()


@dataclass(frozen=True)
class VertexPermutation:
    """A bijection of the vertex indices of the graph named ``graph_id``."""

    images: tuple[int, ...]
    graph_id: str

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        _check_images(self.images)

    @property
    def degree(self):
        return len(self.images)

    @classmethod
    def identity(cls, degree, graph_id):
        return cls(tuple(range(degree)), graph_id)

    @classmethod
    def from_cycles(cls, text, degree, graph_id):
        return cls(_parse_cycles(text, degree), graph_id)

    def __call__(self, v):
        return self.images[v]

    def __mul__(self, other):
        return compose(self, other)

    def inverse(self):
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return VertexPermutation(tuple(inv), self.graph_id)

    def is_identity(self):
        return all(x == y for x, y in enumerate(self.images))

    def to_cycles(self):
        return _format_cycles(self.images)

    def __str__(self):
        return self.to_cycles()


def compose(p, q):
    """Return ``p ∘ q``: apply ``q`` first, then ``p``."""
    if type(p) is not type(q):
        raise SizeMismatchError(
            f"Cannot compose a {type(p).__name__} with a {type(q).__name__}."
        )
    if len(p.images) != len(q.images):
        raise SizeMismatchError(
            f"Cannot compose permutations of sizes {len(p.images)} and {len(q.images)}."
        )
    images = tuple(p.images[x] for x in q.images)
    if isinstance(p, VertexPermutation):
        if p.graph_id != q.graph_id:
            raise DomainMismatchError(
                f"Cannot compose maps on graphs {p.graph_id!r} and {q.graph_id!r}."
            )
        return VertexPermutation(images, p.graph_id)
    return Permutation(images)


def inverse(p):
    return p.inverse()


def induced_subset_action(theta, g):
    """Return f_θ: the vertex map ``v ↦ θ(v)`` applied elementwise to labels."""
    if g.labels is None:
        raise LabelNotFoundError(
            f"Graph {g.name!r} has no subset labels, so θ cannot act on it."
        )
    images = []
    for label in g.labels:
        if label.n != theta.n:
            raise SizeMismatchError(
                f"Label {label} of {g.name!r} lives in a ground set of size "
                f"{label.n}, but θ acts on {theta.n} points."
            )
        image = label.mapped(theta.images)
        index = g.index_of(image)
        if index is None:
            raise LabelNotFoundError(
                f"θ = {theta} maps {label} to {image}, which is not a vertex "
                f"of {g.name!r}; the graph is not closed under Sym([{theta.n}])."
            )
        images.append(index)
    return VertexPermutation(tuple(images), g.name)


# Stabilizer chain.  Elements are plain image tuples inside the chain; the
# public surface hands out VertexPermutation objects.


def _mul(p, q):
    return tuple(p[x] for x in q)


def _inv(p):
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def _is_id(p):
    return all(x == y for x, y in enumerate(p))


class _ChainNode:
    """One level of a stabilizer chain, owning the chain below it."""

    def __init__(self, degree):
        self.degree = degree
        self.base_point = None
        self.own_gens = []
        self.transversal = {}
        self.stab = None

    def generators(self):
        if self.stab is None:
            return list(self.own_gens)
        return self.stab.generators() + self.own_gens

    def sift(self, p):
        if self.base_point is None:
            return p
        rep = self.transversal.get(p[self.base_point])
        if rep is None:
            return p
        return self.stab.sift(_mul(_inv(rep), p))

    def add_gen(self, gen):
        residue = self.sift(gen)
        if not _is_id(residue):
            self.add_nonmember_gen(residue)

    def add_nonmember_gen(self, gen):
        if self.base_point is None:
            self.base_point = next(x for x, y in enumerate(gen) if x != y)
            self.stab = _ChainNode(self.degree)
        if gen[self.base_point] == self.base_point:
            self.stab.add_nonmember_gen(gen)
        else:
            self.own_gens.append(gen)
        self.rebuild_transversal()
        self.add_all_schreier_gens()

    def rebuild_transversal(self):
        identity = tuple(range(self.degree))
        self.transversal = {self.base_point: identity}
        queue = [self.base_point]
        gens = self.generators()
        while queue:
            a = queue.pop(0)
            rep = self.transversal[a]
            for s in gens:
                b = s[a]
                if b not in self.transversal:
                    self.transversal[b] = _mul(s, rep)
                    queue.append(b)

    def add_all_schreier_gens(self):
        for s in self.generators():
            for a in sorted(self.transversal):
                rep = self.transversal[a]
                schreier = _mul(_inv(self.transversal[s[a]]), _mul(s, rep))
                self.stab.add_gen(schreier)

    def chain(self):
        node = self
        while node.base_point is not None:
            yield node
            node = node.stab


class PermutationGroup:
    """A group of vertex permutations held as a base and strong generating set.

    ``order`` is an exact Python integer.  ``strong_generators[i]`` generates
    the pointwise stabilizer of ``base[:i]``; ``transversals[i]`` maps each
    point of the orbit of ``base[i]`` to a coset representative sending
    ``base[i]`` there.
    """

    def __init__(self, degree, graph_id, generators, root):
        self.degree = degree
        self.graph_id = graph_id
        self.generators = tuple(generators)
        levels = list(root.chain())
        self.base = tuple(node.base_point for node in levels)
        self.strong_generators = tuple(
            tuple(VertexPermutation(s, graph_id) for s in node.generators())
            for node in levels
        )
        self._transversals = [dict(node.transversal) for node in levels]
        self._root = root
        self.order = prod(len(t) for t in self._transversals)

    def __repr__(self):
        return f"<PermutationGroup on {self.graph_id!r} of order {self.order}>"

    def transversal(self, level):
        return {
            point: VertexPermutation(rep, self.graph_id)
            for point, rep in self._transversals[level].items()
        }

    def identity(self):
        return VertexPermutation.identity(self.degree, self.graph_id)

    def _check_domain(self, p):
        if p.degree != self.degree or p.graph_id != self.graph_id:
            raise DomainMismatchError(
                f"{p} acts on {p.degree} vertices of {p.graph_id!r}, but the group "
                f"acts on {self.degree} vertices of {self.graph_id!r}."
            )

    def sift(self, p):
        self._check_domain(p)
        return VertexPermutation(self._root.sift(p.images), self.graph_id)

    def contains(self, p):
        return self.sift(p).is_identity()

    def __contains__(self, p):
        return self.contains(p)

    def orbit(self, point):
        """The orbit of ``point`` under the group, as a sorted tuple."""
        return orbit(self.generators, point, self.degree)

    def random_element(self, rng):
        """A uniformly random element, drawn from the transversals with ``rng``."""
        element = tuple(range(self.degree))
        for level in self._transversals:
            element = _mul(element, level[rng.choice(sorted(level))])
        return VertexPermutation(element, self.graph_id)

    def elements(self):
        """Iterate over every element; only sensible for small groups."""
        levels = [[t[p] for p in sorted(t)] for t in self._transversals]
        identity = tuple(range(self.degree))
        for reps in itertools.product(*levels):
            element = identity
            for rep in reps:
                element = _mul(element, rep)
            yield VertexPermutation(element, self.graph_id)


def orbit(generators, point, degree=None):
    """Orbit of ``point`` under ``generators`` (any objects callable on points)."""
    seen = {point}
    queue = [point]
    while queue:
        a = queue.pop()
        for s in generators:
            b = s(a)
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return tuple(sorted(seen))


def schreier_sims(gens, degree=None, graph_id=None):
    """Build a base and strong generating set for the group ``<gens>``.

    Deterministic for a given generator order: each new base point is the
    first vertex moved by the generator that forced the new level.
    """
    gens = list(gens)
    if gens:
        degree = gens[0].degree
        graph_id = gens[0].graph_id
    if not degree:
        raise SizeMismatchError("Cannot build a permutation group on an empty vertex set.")
    for g in gens:
        if g.degree != degree or g.graph_id != graph_id:
            raise DomainMismatchError(
                f"Generators act on different vertex sets: {g.graph_id!r} "
                f"({g.degree}) vs {graph_id!r} ({degree})."
            )
    root = _ChainNode(degree)
    for g in gens:
        root.add_gen(g.images)
    group = PermutationGroup(degree, graph_id, gens, root)
    logger.debug(
        "Schreier-Sims on %s: %d generators, base length %d, order %d",
        graph_id,
        len(gens),
        len(group.base),
        group.order,
    )
    return group


def contains(group, p):
    return group.contains(p)


def is_central_involution(group, a):
    """True iff ``a`` commutes with every generator of ``group``.

    The identity is an involution in the sense ``a² = 1`` and passes.
    """
    if not compose(a, a).is_identity():
        raise NotAnInvolutionError(f"{a} does not square to the identity.")
    group._check_domain(a)
    return all(compose(a, g) == compose(g, a) for g in group.generators)
