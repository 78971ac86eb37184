# theorem_suite.py
"""Executable checks of the symmetry claims, one structured report per instance.

Every check recomputes what it certifies: automorphism groups come from
the refinement search, connectivity from max-flow, independence numbers
from branch and bound.  Closed formulas only ever appear as the expected
side of a report.
"""

from __future__ import annotations

import json
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import timedelta
from functools import lru_cache
from math import comb, factorial

from django.db import models

from . import conf
from .aut_search import PartAction, automorphism_group, classify_bipartite_action, is_automorphism
from .exceptions import (
    BudgetExceededError,
    InvalidSpecError,
    NotAnAutomorphismError,
    SizeCapExceededError,
    SymmetryError,
)
from .families import (
    Family,
    FamilySpec,
    boolean_lattice_iso_holds,
    build,
    complement_map,
    symmetric_generators,
    translation_generators,
)
from .graph_core import (
    LabeledGraph,
    common_neighbors,
    independence_number,
    induced_subgraph,
    neighborhood_injective_on_part,
    vertex_connectivity,
)
from .perm_core import VertexPermutation, compose, is_central_involution, orbit, schreier_sims

logger = logging.getLogger(__name__)


class ClaimId(models.TextChoices):
    PROP1_1 = "Prop1_1", "Vertex-transitivity of H(n,k)"
    PROP1_2 = "Prop1_2", "Arc-transitivity of H(n,k)"
    COR1_3 = "Cor1_3", "Maximum connectivity of H(n,k)"
    THM1_5 = "Thm1_5", "Aut(H(n,1)) = Sym([n]) x Z2"
    THM1_6 = "Thm1_6", "Aut of the middle-levels graphs"
    ITEM1_QN_AUT = "Item1_QnAut", "Order of Aut(Q_n)"
    ITEM1_QN_STRUCTURE = "Item1_QnStructure", "Aut(Q_n) generated by translations and Sym([n])"
    ITEM1_BL_ISO = "Item1_BLIso", "BL_n isomorphic to Q_n"
    LEMMA3_1 = "Lemma3_1", "Fixing one part fixes everything"
    LEMMA3_3 = "Lemma3_3", "Automorphisms preserve or swap the parts"
    LEMMA3_5 = "Lemma3_5", "Binomial monotonicity"
    COMMON_NEIGHBORS = "CommonNeighbors", "Common-neighbour counts in H(n,k)"
    BIPARTITE_DOUBLE = "BipartiteDouble", "H(n,k) is the bipartite double of K(n,k)"
    MIDDLE_CUBE = "MiddleCube", "H(2m+1,m) is the middle-levels subgraph of the cube"
    THM3_6 = "Thm3_6", "Aut(H(n,k)) = Sym([n]) x Z2"
    THM3_7 = "Thm3_7", "Aut(K(n,k)) = Sym([n])"
    THM3_7_LIFT = "Thm3_7Lift", "Kneser automorphisms lift to H(n,k)"
    EKR = "EKR", "Independence number of K(n,k)"
    JOHNSON_AUT = "JohnsonAut", "Order of Aut(J(n,k))"


CITATIONS = {
    ClaimId.PROP1_1: "H(n,k) is vertex-transitive",
    ClaimId.PROP1_2: "H(n,k) is symmetric (arc-transitive)",
    ClaimId.COR1_3: "the connectivity of H(n,k) is maximum, namely C(n-k,k)",
    ClaimId.THM1_5: "Aut(H(n,1)) is Sym([n]) x Z2",
    ClaimId.THM1_6: "Aut(H(2m+1,m)) is Sym([2m+1]) x Z2",
    ClaimId.ITEM1_QN_AUT: "|Aut(Q_n)| = 2^n n!",
    ClaimId.ITEM1_QN_STRUCTURE: "Aut(Q_n) = <Z2^n, Sym([n])>",
    ClaimId.ITEM1_BL_ISO: "Q_n is isomorphic to BL_n",
    ClaimId.LEMMA3_1: "an automorphism fixing every vertex of one part is the identity",
    ClaimId.LEMMA3_3: "f(V1) = V1 and f(V2) = V2, or f(V1) = V2 and f(V2) = V1",
    ClaimId.LEMMA3_5: "l > m > u >= 1 implies C(l,u) > C(m,u)",
    ClaimId.COMMON_NEIGHBORS: "u, v in V1 with |u | v| = k+h have C(n-k-h,k) common neighbours",
    ClaimId.BIPARTITE_DOUBLE: "v ~ w in H(n,k) iff v ~ w^c in K(n,k)",
    ClaimId.MIDDLE_CUBE: "H(2m+1,m) is Q_{2m+1} induced on layers m and m+1",
    ClaimId.THM3_6: "Aut(H(n,k)) is Sym([n]) x Z2 = <f_theta, alpha>",
    ClaimId.THM3_7: "Aut(K(n,k)) is Sym([n]) = {f_theta}",
    ClaimId.THM3_7_LIFT: "g in Aut(K(n,k)) lifts to f in Aut(H(n,k)) with f|V1 = g",
    ClaimId.EKR: "alpha(K(n,k)) = C(n-1,k-1)",
    ClaimId.JOHNSON_AUT: "Aut(J(n,k)) is Sym([n]), or Sym([n]) x Z2 when n = 2k",
}

CLAIM_ORDER = {claim: i for i, claim in enumerate(ClaimId)}

BINOMIAL_RANGE = 30


@dataclass(frozen=True)
class SuiteConfig:
    """Caps and knobs for one suite run; picklable so workers can receive it."""

    max_n: int = 7
    claims: frozenset | None = None
    budget: int = 10_000_000
    seed: int = 0
    samples: int = 1000
    lift_samples: int = 100
    main_theorem_max_n: int = 9
    hypercube_max_n: int = 6
    independence_max_vertices: int = 64
    workers: int = 1

    @classmethod
    def from_settings(cls, **overrides):
        values = {
            "max_n": conf.get_setting("DEFAULT_MAX_N"),
            "budget": conf.get_setting("NODE_BUDGET"),
            "seed": conf.get_setting("SEED"),
            "samples": conf.get_setting("RANDOM_SAMPLES"),
            "lift_samples": conf.get_setting("LIFT_SAMPLES"),
            "main_theorem_max_n": conf.get_setting("MAIN_THEOREM_MAX_N"),
            "hypercube_max_n": conf.get_setting("HYPERCUBE_MAX_N"),
            "independence_max_vertices": conf.get_setting("INDEPENDENCE_MAX_VERTICES"),
            "workers": conf.get_setting("WORKERS"),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass
class ClaimReport:
    claim_id: ClaimId
    instance: FamilySpec | str | None
    expected: object
    observed: object
    elapsed: timedelta = field(default_factory=timedelta)
    error: str = ""
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = not self.error and self.expected == self.observed

    @property
    def citation(self):
        return CITATIONS[self.claim_id]

    @property
    def instance_label(self):
        return "-" if self.instance is None else str(self.instance)

    def sort_key(self):
        if isinstance(self.instance, FamilySpec):
            key = (0, self.instance.sort_key(), "")
        else:
            key = (1, (), self.instance_label)
        return (CLAIM_ORDER[ClaimId(self.claim_id)], key)

    def to_record(self, *, timings=False):
        record = {
            "claim_id": str(self.claim_id),
            "instance": self.instance_label,
            "expected": _jsonable(self.expected),
            "observed": _jsonable(self.observed),
            "passed": self.passed,
            "citation": self.citation,
        }
        if self.error:
            record["error"] = self.error
        if timings:
            record["elapsed_us"] = _microseconds(self.elapsed)
        return record

    def render_text(self, *, timings=False):
        status = "PASS" if self.passed else ("ERROR" if self.error else "FAIL")
        line = (
            f"{status} {self.claim_id} {self.instance_label} "
            f"expected={_render_value(self.expected)} observed={_render_value(self.observed)}"
        )
        if self.error:
            line += f" error={self.error}"
        if timings:
            line += f" elapsed_us={_microseconds(self.elapsed)}"
        return line

    def render_json(self, *, timings=False):
        return json.dumps(self.to_record(timings=timings), sort_keys=True)


def _microseconds(delta):
    return delta // timedelta(microseconds=1)


def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _render_value(value):
    if isinstance(value, dict):
        return ",".join(f"{k}:{_render_value(v)}" for k, v in value.items())
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    return str(value)


# Shared computations.


def _graph(instance):
    if isinstance(instance, LabeledGraph):
        return instance
    return build(instance)


@lru_cache(maxsize=128)
def _aut_of_spec(spec, budget):
    return automorphism_group(build(spec), budget=budget)


def aut_of(instance, budget=None):
    """Aut of a family spec (memoised) or of an arbitrary graph."""
    budget = conf.resolve("NODE_BUDGET", budget)
    if isinstance(instance, FamilySpec):
        return _aut_of_spec(instance, budget)
    return automorphism_group(instance, budget=budget)


def _timed(claim_id, instance, compute):
    started = time.perf_counter_ns()
    expected, observed = compute()
    elapsed = timedelta(microseconds=(time.perf_counter_ns() - started) // 1000)
    return ClaimReport(claim_id, instance, expected, observed, elapsed=elapsed)


def _require_family(spec, *families):
    if not isinstance(spec, FamilySpec) or spec.family not in families:
        names = ", ".join(f.label for f in families)
        raise InvalidSpecError(f"{spec} is not one of: {names}.")
    spec.validate()


def _generates_same_group(g, left, right):
    """Two-sided membership: every generator of each group lies in the other."""
    return all(right.contains(p) for p in left.generators) and all(
        left.contains(p) for p in right.generators
    )


# Transitivity, connectivity.


def check_vertex_transitive(instance, *, budget=None):
    def compute():
        g = _graph(instance)
        group = aut_of(instance, budget).group
        return True, len(orbit(group.generators, 0)) == g.order

    return _timed(ClaimId.PROP1_1, instance, compute)


def arc_orbit(generators, arc):
    """Orbit of an ordered pair of vertices under the generators."""
    seen = {arc}
    queue = [arc]
    while queue:
        u, v = queue.pop()
        for s in generators:
            image = (s(u), s(v))
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return seen


def check_arc_transitive(instance, *, budget=None):
    def compute():
        g = _graph(instance)
        first = next(g.edges(), None)
        if first is None:
            return True, False
        group = aut_of(instance, budget).group
        return True, len(arc_orbit(group.generators, first)) == 2 * g.size

    return _timed(ClaimId.PROP1_2, instance, compute)


def check_connectivity(spec):
    _require_family(spec, Family.BIPARTITE_KNESER)
    return _timed(
        ClaimId.COR1_3,
        spec,
        lambda: (comb(spec.n - spec.k, spec.k), vertex_connectivity(build(spec))),
    )


# Bipartite Kneser automorphisms.


def main_theorem_observation(spec, *, budget=None):
    """Order and structure of Aut(H(n,k)) against ⟨f_θ generators, α⟩."""
    g = build(spec)
    aut = aut_of(spec, budget).group
    alpha = complement_map(g)
    f_gens = symmetric_generators(g)
    symmetric = schreier_sims(f_gens, degree=g.order, graph_id=g.name)
    generated = schreier_sims([*f_gens, alpha], degree=g.order, graph_id=g.name)
    return {
        "order": aut.order,
        "generated": _generates_same_group(g, aut, generated),
        "alpha_central_involution": is_central_involution(aut, alpha),
        "alpha_outside_symmetric": not symmetric.contains(alpha),
    }


def _main_theorem_expected(spec):
    return {
        "order": 2 * factorial(spec.n),
        "generated": True,
        "alpha_central_involution": True,
        "alpha_outside_symmetric": True,
    }


def check_main_theorem(spec, *, budget=None, max_n=None, claim_id=ClaimId.THM3_6):
    """|Aut(H(n,k))| = 2·n!, Aut = ⟨f_θ, α⟩ and α central with α ∉ ⟨f_θ⟩.

    The three facts together force Aut(H(n,k)) ≅ Sym([n]) × Z₂: a subgroup
    isomorphic to Sym([n]) of index 2 and a central involution outside it.
    """
    _require_family(spec, Family.BIPARTITE_KNESER)
    cap = conf.resolve("MAIN_THEOREM_MAX_N", max_n)
    if spec.n > cap:
        raise SizeCapExceededError(f"{spec} is above the main-theorem cap n <= {cap}.")
    return _timed(
        claim_id,
        spec,
        lambda: (_main_theorem_expected(spec), main_theorem_observation(spec, budget=budget)),
    )


def check_part_action(spec, *, samples=None, seed=None, budget=None):
    """Random elements of Aut(H(n,k)) preserve or swap the parts, homomorphically."""
    _require_family(spec, Family.BIPARTITE_KNESER)
    samples = conf.resolve("RANDOM_SAMPLES", samples)
    rng = random.Random(f"{conf.resolve('SEED', seed)}:{ClaimId.LEMMA3_3}:{spec}")

    def compute():
        g = build(spec)
        group = aut_of(spec, budget).group
        swaps = lambda f: classify_bipartite_action(g, f) == PartAction.SWAPPING
        homomorphic = True
        for _ in range(samples):
            a = group.random_element(rng)
            b = group.random_element(rng)
            if swaps(compose(a, b)) != (swaps(a) != swaps(b)):
                homomorphic = False
        return True, homomorphic

    return _timed(ClaimId.LEMMA3_3, spec, compute)


def check_neighborhood_injectivity(spec):
    _require_family(spec, Family.BIPARTITE_KNESER)

    def compute():
        g = build(spec)
        return True, neighborhood_injective_on_part(g, 1) and neighborhood_injective_on_part(g, 2)

    return _timed(ClaimId.LEMMA3_1, spec, compute)


def check_binomial_monotonicity(limit=BINOMIAL_RANGE):
    def compute():
        holds = all(
            comb(l, u) > comb(m, u)
            for l in range(1, limit + 1)
            for m in range(1, l)
            for u in range(1, m)
        )
        return True, holds

    return _timed(ClaimId.LEMMA3_5, f"l<={limit}", compute)


def common_neighbor_profile(spec):
    """Per h, the set of observed common-neighbour counts over pairs of V₁."""
    g = build(spec)
    part = g.part(1)
    profile = {}
    for i, u in enumerate(part):
        for v in part[i:]:
            h = (g.labels[u].bits | g.labels[v].bits).bit_count() - spec.k
            profile.setdefault(h, set()).add(len(common_neighbors(g, u, v)))
    return profile


def check_common_neighbors(spec):
    _require_family(spec, Family.BIPARTITE_KNESER)
    n, k = spec.n, spec.k

    def compute():
        profile = common_neighbor_profile(spec)
        matches = all(
            counts == {comb(n - k - h, k)} for h, counts in profile.items()
        )
        return (
            {"counts_match": True, "johnson_pairs_distinguished": True},
            {"counts_match": matches, "johnson_pairs_distinguished": counts_decrease(profile)},
        )

    return _timed(ClaimId.COMMON_NEIGHBORS, spec, compute)


def counts_decrease(profile):
    """Each h >= 1 has one observed count, strictly decreasing in h until it hits zero.

    The h = 1 count (Johnson-adjacent pairs) is then strictly above every other.
    """
    counts = [profile[h] for h in sorted(profile) if h >= 1]
    if not counts or any(len(c) != 1 for c in counts):
        return False
    values = [next(iter(c)) for c in counts]
    return all(a > b or a == b == 0 for a, b in zip(values, values[1:])) and all(
        v < values[0] for v in values[1:]
    )


def check_bipartite_double(spec):
    _require_family(spec, Family.BIPARTITE_KNESER)

    def compute():
        gH = build(spec)
        gK = build(FamilySpec(Family.KNESER, spec.n, spec.k))
        holds = all(
            gH.has_edge(v, w)
            == gK.has_edge(gK.index_of(gH.labels[v]), gK.index_of(gH.labels[w].complement()))
            for v in gH.part(1)
            for w in gH.part(2)
        )
        return True, holds

    return _timed(ClaimId.BIPARTITE_DOUBLE, spec, compute)


def check_middle_cube(spec):
    _require_family(spec, Family.BIPARTITE_KNESER)
    if spec.n != 2 * spec.k + 1:
        raise InvalidSpecError(f"{spec} is not a middle-levels graph H(2m+1, m).")

    def compute():
        gH = build(spec)
        cube = build(FamilySpec(Family.BOOLEAN_LATTICE, spec.n))
        layers = [v for v, label in enumerate(cube.labels) if label.size in (spec.k, spec.k + 1)]
        middle = induced_subgraph(cube, layers)
        same = middle.labels == gH.labels and list(middle.edges()) == list(gH.edges())
        return True, same

    return _timed(ClaimId.MIDDLE_CUBE, spec, compute)


# Kneser and Johnson graphs.


def check_kneser_theorem(spec, *, budget=None):
    """|Aut(K(n,k))| = n! and Aut(K(n,k)) = ⟨f_θ generators⟩."""
    _require_family(spec, Family.KNESER)
    if spec.n <= 4:
        raise InvalidSpecError(f"{spec}: the Kneser automorphism claim needs n > 4.")

    def compute():
        g = build(spec)
        aut = aut_of(spec, budget).group
        symmetric = schreier_sims(symmetric_generators(g), degree=g.order, graph_id=g.name)
        return (
            {"order": factorial(spec.n), "generated": True},
            {"order": aut.order, "generated": _generates_same_group(g, aut, symmetric)},
        )

    return _timed(ClaimId.THM3_7, spec, compute)


def lift_kneser_automorphism(gK, gH, g):
    """Extend an automorphism ``g`` of K(n,k) to H(n,k).

    On V₁ apply ``g`` through the shared labels; on V₂ apply α∘g∘α.  The
    result preserves V₁ and is an automorphism of H(n,k).
    """
    if g.graph_id != gK.name or not is_automorphism(gK, g):
        raise NotAnAutomorphismError(f"{g} is not an automorphism of {gK.name}.")
    images = []
    for label in gH.labels:
        if label.size == gK.labels[0].size:
            images.append(gH.index_of(gK.labels[g(gK.index_of(label))]))
        else:
            moved = gK.labels[g(gK.index_of(label.complement()))]
            images.append(gH.index_of(moved.complement()))
    return VertexPermutation(tuple(images), gH.name)


def restrict_to_first_part(gH, f, target):
    """The action of a part-preserving ``f`` on V₁, as a map on ``target``'s vertices."""
    if classify_bipartite_action(gH, f) != PartAction.PRESERVING:
        raise InvalidSpecError(f"{f} swaps the parts of {gH.name}; it has no restriction to V1.")
    images = [0] * target.order
    for t, label in enumerate(target.labels):
        images[t] = target.index_of(gH.labels[f(gH.index_of(label))])
    return VertexPermutation(tuple(images), target.name)


def check_restriction_is_johnson_automorphism(gH, f):
    """The restriction of a part-preserving automorphism of H(n,k) to V₁ is in Aut(J(n,k))."""
    label = gH.labels[0]
    gJ = build(FamilySpec(Family.JOHNSON, label.n, label.size))
    return is_automorphism(gJ, restrict_to_first_part(gH, f, gJ))


def check_lift_round_trip(spec, *, samples=None, seed=None, budget=None):
    _require_family(spec, Family.KNESER)
    samples = conf.resolve("LIFT_SAMPLES", samples)
    rng = random.Random(f"{conf.resolve('SEED', seed)}:{ClaimId.THM3_7_LIFT}:{spec}")

    def compute():
        gK = build(spec)
        gH = build(FamilySpec(Family.BIPARTITE_KNESER, spec.n, spec.k))
        group = aut_of(spec, budget).group
        holds = True
        for _ in range(samples):
            g = group.random_element(rng)
            f = lift_kneser_automorphism(gK, gH, g)
            holds &= is_automorphism(gH, f)
            holds &= restrict_to_first_part(gH, f, gK) == g
            holds &= check_restriction_is_johnson_automorphism(gH, f)
        return True, holds

    return _timed(ClaimId.THM3_7_LIFT, spec, compute)


def expected_johnson_order(n, k):
    return 2 * factorial(n) if n == 2 * k else factorial(n)


def check_johnson_aut(spec, *, budget=None):
    _require_family(spec, Family.JOHNSON)
    return _timed(
        ClaimId.JOHNSON_AUT,
        spec,
        lambda: (expected_johnson_order(spec.n, spec.k), aut_of(spec, budget).order),
    )


def check_ekr(spec, *, max_vertices=None):
    _require_family(spec, Family.KNESER)
    return _timed(
        ClaimId.EKR,
        spec,
        lambda: (
            comb(spec.n - 1, spec.k - 1),
            independence_number(build(spec), max_vertices=max_vertices),
        ),
    )


# Hypercube.


def _check_cube_cap(n, max_n):
    cap = conf.resolve("HYPERCUBE_MAX_N", max_n)
    if not 1 <= n <= cap:
        raise SizeCapExceededError(f"Q{n} is outside the hypercube range 1..{cap}.")


def check_hypercube_aut(n, *, budget=None, max_n=None):
    _check_cube_cap(n, max_n)
    spec = FamilySpec(Family.HYPERCUBE, n)
    return _timed(
        ClaimId.ITEM1_QN_AUT,
        spec,
        lambda: (2**n * factorial(n), aut_of(spec, budget).order),
    )


def check_hypercube_structure(n, *, budget=None, max_n=None):
    _check_cube_cap(n, max_n)
    spec = FamilySpec(Family.HYPERCUBE, n)

    def compute():
        g = build(spec)
        aut = aut_of(spec, budget).group
        gens = [*translation_generators(g), *symmetric_generators(g)]
        generated = schreier_sims(gens, degree=g.order, graph_id=g.name)
        return True, _generates_same_group(g, aut, generated)

    return _timed(ClaimId.ITEM1_QN_STRUCTURE, spec, compute)


def check_boolean_lattice_iso(n, *, max_n=None):
    _check_cube_cap(n, max_n)
    spec = FamilySpec(Family.BOOLEAN_LATTICE, n)
    return _timed(ClaimId.ITEM1_BL_ISO, spec, lambda: (True, boolean_lattice_iso_holds(n)))


# Suite planning and execution.


def _bipartite_kneser_specs(max_n, min_k=1):
    return [
        FamilySpec(Family.BIPARTITE_KNESER, n, k)
        for n in range(3, max_n + 1)
        for k in range(min_k, (n - 1) // 2 + 1)
    ]


def _kneser_specs(max_n, min_n=3):
    return [
        FamilySpec(Family.KNESER, n, k)
        for n in range(min_n, max_n + 1)
        for k in range(1, (n - 1) // 2 + 1)
    ]


def plan(config):
    """The (claim, instance) pairs a run performs, in report order."""
    if config.claims is not None and not config.claims:
        return []
    wanted = set(ClaimId) if config.claims is None else {ClaimId(c) for c in config.claims}
    max_n = config.max_n
    cube_n = min(max_n, config.hypercube_max_n)
    h_all = _bipartite_kneser_specs(max_n)
    tasks = {
        ClaimId.PROP1_1: h_all,
        ClaimId.PROP1_2: h_all,
        ClaimId.COR1_3: h_all,
        ClaimId.THM1_5: [s for s in h_all if s.k == 1],
        ClaimId.THM1_6: [s for s in h_all if s.n == 2 * s.k + 1],
        ClaimId.ITEM1_QN_AUT: list(range(1, cube_n + 1)),
        ClaimId.ITEM1_QN_STRUCTURE: list(range(1, cube_n + 1)),
        ClaimId.ITEM1_BL_ISO: list(range(1, cube_n + 1)),
        ClaimId.LEMMA3_1: h_all,
        ClaimId.LEMMA3_3: h_all,
        ClaimId.LEMMA3_5: [None] if max_n >= 1 else [],
        ClaimId.COMMON_NEIGHBORS: h_all,
        ClaimId.BIPARTITE_DOUBLE: h_all,
        ClaimId.MIDDLE_CUBE: [s for s in h_all if s.n == 2 * s.k + 1],
        ClaimId.THM3_6: _bipartite_kneser_specs(min(max_n, config.main_theorem_max_n), min_k=2),
        ClaimId.THM3_7: _kneser_specs(max_n, min_n=5),
        ClaimId.THM3_7_LIFT: _kneser_specs(max_n, min_n=5),
        ClaimId.EKR: [
            s for s in _kneser_specs(max_n)
            if comb(s.n, s.k) <= config.independence_max_vertices
        ],
        ClaimId.JOHNSON_AUT: [
            FamilySpec(Family.JOHNSON, n, k)
            for n in range(3, max_n + 1)
            for k in range(1, n // 2 + 1)
        ],
    }
    return [(claim, instance) for claim in ClaimId if claim in wanted for instance in tasks[claim]]


def run_check(claim_id, instance, config):
    """Run one planned check; resource and argument errors become failed reports."""
    claim_id = ClaimId(claim_id)
    logger.info("checking %s on %s", claim_id, instance)
    budget = config.budget
    try:
        if claim_id == ClaimId.PROP1_1:
            return check_vertex_transitive(instance, budget=budget)
        if claim_id == ClaimId.PROP1_2:
            return check_arc_transitive(instance, budget=budget)
        if claim_id == ClaimId.COR1_3:
            return check_connectivity(instance)
        if claim_id in (ClaimId.THM1_5, ClaimId.THM1_6, ClaimId.THM3_6):
            return check_main_theorem(
                instance, budget=budget, max_n=config.main_theorem_max_n, claim_id=claim_id
            )
        if claim_id == ClaimId.ITEM1_QN_AUT:
            return check_hypercube_aut(instance, budget=budget, max_n=config.hypercube_max_n)
        if claim_id == ClaimId.ITEM1_QN_STRUCTURE:
            return check_hypercube_structure(instance, budget=budget, max_n=config.hypercube_max_n)
        if claim_id == ClaimId.ITEM1_BL_ISO:
            return check_boolean_lattice_iso(instance, max_n=config.hypercube_max_n)
        if claim_id == ClaimId.LEMMA3_1:
            return check_neighborhood_injectivity(instance)
        if claim_id == ClaimId.LEMMA3_3:
            return check_part_action(instance, samples=config.samples, seed=config.seed, budget=budget)
        if claim_id == ClaimId.LEMMA3_5:
            return check_binomial_monotonicity()
        if claim_id == ClaimId.COMMON_NEIGHBORS:
            return check_common_neighbors(instance)
        if claim_id == ClaimId.BIPARTITE_DOUBLE:
            return check_bipartite_double(instance)
        if claim_id == ClaimId.MIDDLE_CUBE:
            return check_middle_cube(instance)
        if claim_id == ClaimId.THM3_7:
            return check_kneser_theorem(instance, budget=budget)
        if claim_id == ClaimId.THM3_7_LIFT:
            return check_lift_round_trip(
                instance, samples=config.lift_samples, seed=config.seed, budget=budget
            )
        if claim_id == ClaimId.EKR:
            return check_ekr(instance, max_vertices=config.independence_max_vertices)
        if claim_id == ClaimId.JOHNSON_AUT:
            return check_johnson_aut(instance, budget=budget)
    except BudgetExceededError as exc:
        logger.warning("%s on %s: %s", claim_id, instance, exc)
        return ClaimReport(claim_id, _as_instance(claim_id, instance), None, None, error=f"budget: {exc}")
    except SymmetryError as exc:
        return ClaimReport(claim_id, _as_instance(claim_id, instance), None, None, error=str(exc))
    raise InvalidSpecError(f"No check is registered for {claim_id}.")


def _as_instance(claim_id, instance):
    if claim_id in (ClaimId.ITEM1_QN_AUT, ClaimId.ITEM1_QN_STRUCTURE):
        return FamilySpec(Family.HYPERCUBE, instance)
    if claim_id == ClaimId.ITEM1_BL_ISO:
        return FamilySpec(Family.BOOLEAN_LATTICE, instance)
    return instance


def _run_task(task):
    claim_id, instance, config = task
    return run_check(claim_id, instance, config)


def run_all(config=None):
    """Run every planned check; reports come back sorted by (claim, instance)."""
    config = config or SuiteConfig.from_settings()
    tasks = [(claim, instance, config) for claim, instance in plan(config)]
    if config.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            reports = list(pool.map(_run_task, tasks))
    else:
        reports = [_run_task(task) for task in tasks]
    reports.sort(key=ClaimReport.sort_key)
    logger.info(
        "suite finished: %d reports, %d failed",
        len(reports),
        sum(not r.passed for r in reports),
    )
    return reports


def is_budget_error(report):
    return report.error.startswith("budget:")