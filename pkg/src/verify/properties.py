"""Structural statements about F_d(G) checked on concrete graphs.

Each check returns a PropertyOutcome; run_property wraps it into a CaseReport.
When a graph does not meet a statement's hypotheses the check passes vacuously
and says so in the notes.
"""
import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Callable, Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from src.complexes.complex import (
    SimplicialComplex, add_cone, alexander_dual, join_complex, link, skeleton,
)
from src.complexes.degree import UNBOUNDED, DegreeBound, finite
from src.complexes.forest import forest_complex, forest_faces
from src.config import settings
from src.graphs.families import generate, knxkm_graph, parse_family
from src.graphs.forests import induced_forest_check, star_free_bound
from src.graphs.graph import Graph, bits_of, edgeless, make_graph, members
from src.graphs.operations import delete_edge, disjoint_union, join_graphs
from src.graphs.structure import block_decomposition, girth, random_graph, vertices_on_cycles
from src.homology.compute import (
    reduced_cohomology_of_complex, reduced_homology, reduced_homology_of_complex, relative_homology,
)
from src.homology.profile import HomologyProfile, homological_connectivity
from src.verify.cases import FAIL, PASS, SKIPPED, CaseReport, Mismatch
from src.utils.errors import CapacityError, InputError

logger = logging.getLogger(__name__)

FLAGNESS_MAX_ORDER = 12
SMALL_ORDER_MAX = 6
PARTNER_DRAWS = 32


class PropertyId(str, Enum):
    SKELETON_AGREE = "skeleton-agree"
    PAIR_CONNECTIVITY = "pair-connectivity"
    F1_FLAGNESS = "f1-flagness"
    SMALL_ORDER_CLASS = "small-order-class"
    BRIDGE_INVARIANCE = "bridge-invariance"
    NO_CYCLE_VERTEX = "no-cycle-vertex"
    MIN_DEGREE_ONE = "min-degree-one"
    DEGREE2_SUSPENSION = "degree2-suspension"
    FOREST_COUNT = "forest-count"
    GIRTH_VANISHING = "girth-vanishing"
    DISJOINT_JOIN = "disjoint-join"
    CONE_LEMMA = "cone-lemma"
    JOIN_LEMMA_HOMOLOGY = "join-lemma-homology"
    ALEXANDER_DUALITY = "alexander-duality"
    CONN_DISJOINT = "conn-disjoint"
    FILTRATION_MONOTONE = "filtration-monotone"
    STABILIZATION = "stabilization"
    EULER_CONSISTENCY = "euler-consistency"
    DUAL_INVOLUTION = "dual-involution"
    K2KN_STABLE = "k2kn-stable"

    @classmethod
    def parse(cls, text: str) -> "PropertyId":
        value = text.strip().lower().replace("_", "-")
        for prop in cls:
            if prop.value == value:
                return prop
        raise InputError(f"Unknown property '{text}'. Known: {', '.join(p.value for p in cls)}")


@dataclass
class PropertyOutcome:
    passed: bool
    witness: Optional[str] = None
    mismatch: Optional[Mismatch] = None
    notes: List[str] = field(default_factory=list)
    vacuous: bool = False


def _ok(*notes: str) -> PropertyOutcome:
    return PropertyOutcome(True, notes=list(notes))


def _vacuous(reason: str) -> PropertyOutcome:
    return PropertyOutcome(True, notes=[f"vacuous: {reason}"], vacuous=True)


def _failed(witness: str, mismatch: Optional[Mismatch] = None) -> PropertyOutcome:
    return PropertyOutcome(False, witness=witness, mismatch=mismatch)


def _profile_mismatch(expected: HomologyProfile, got: HomologyProfile, witness: str) -> PropertyOutcome:
    q = expected.first_difference(got)
    if q is None:
        return _ok()
    return _failed(witness, Mismatch(q, str(expected.group(q)), str(got.group(q))))


def _facet_mismatch(a: SimplicialComplex, b: SimplicialComplex, what: str) -> PropertyOutcome:
    if a == b:
        return _ok()
    extra = sorted(set(a.facets) ^ set(b.facets))
    return _failed(f"{what}: facet {members(extra[0]) if extra else '?'} is not shared")


def _times(profile: HomologyProfile, copies: int) -> HomologyProfile:
    total = HomologyProfile()
    for _ in range(copies):
        total = total + profile
    return total


def partner_graph(seed: int, connected_independence: bool = False) -> Graph:
    """Second small random graph for the statements about unions and joins.

    With `connected_independence` the draw is repeated until the partner's complement is connected,
    i.e. its independence complex is; an edgeless partner is the fallback.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    order = int(rng.integers(1, 5))
    for _ in range(PARTNER_DRAWS):
        h = random_graph(int(rng.integers(2 ** 31)), order, 0.5)
        if not connected_independence or nx.is_connected(nx.complement(h.to_networkx())):
            return h
    return edgeless(order)


def _skeleton_agree(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    if d.is_unbounded:
        return _vacuous("d is unbounded")
    sizes = range(0, min(d.cap, g.n - 1) + 2)
    lower = forest_faces(g, d, sizes)
    upper = forest_faces(g, d.succ(), sizes)
    for size in sizes:
        if lower[size] != upper[size]:
            diff = sorted(set(lower[size]) ^ set(upper[size]))
            return _failed(f"dimension {size - 1}: {members(diff[0])}")
    return _ok()


def _pair_connectivity(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    if d.is_unbounded:
        return _vacuous("d is unbounded")
    relative = relative_homology(g, d, d.succ(), dims=(-1, d.cap))
    nonzero = relative.nonzero_dims()
    if nonzero:
        q = nonzero[0]
        return _failed(f"H_{q}(F_{d.succ()}, F_{d}) != 0", Mismatch(q, "0", str(relative.group(q))))
    return _ok()


def _f1_flagness(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    if g.n > FLAGNESS_MAX_ORDER:
        raise CapacityError(f"Flagness scan over 2^{g.n} subsets", limit=FLAGNESS_MAX_ORDER, observed=g.n)
    one = finite(1)
    triples = {bits_of(t) for t in combinations(range(g.n), 3) if induced_forest_check(g, bits_of(t), one)}
    for s in range(1 << g.n):
        if s.bit_count() < 4 or induced_forest_check(g, s, one):
            continue
        if all(bits_of(t) in triples for t in combinations(members(s), 3)):
            return _failed(f"{members(s)} has every 3-subset in F_1 but is not a face")
    return _ok()


def _top_homology_nonzero(h: Graph, d: DegreeBound, q: int) -> bool:
    return not reduced_homology(h, d, (q, q)).group(q).is_zero()


def _small_order_class(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    """All labeled graphs of order g.n = q + 2: top homology appears exactly for stars and cycles."""
    order = g.n
    q = order - 2
    if q < 1:
        raise InputError(f"Classification needs order >= 3, got {order}")
    if order > SMALL_ORDER_MAX:
        raise CapacityError(f"Exhaustive scan of labeled graphs of order {order}", limit=SMALL_ORDER_MAX,
                            observed=order)
    star, cycle = nx.star_graph(q + 1), nx.cycle_graph(order)
    pairs = list(combinations(range(order), 2))
    checked = 0
    for mask in range(1 << len(pairs)):
        h = make_graph(order, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        edges = h.edge_count()
        is_star = edges == q + 1 and nx.is_isomorphic(h.to_networkx(), star)
        is_cycle = edges == q + 2 and nx.is_isomorphic(h.to_networkx(), cycle)
        if _top_homology_nonzero(h, finite(q), q) != (is_star or is_cycle):
            return _failed(f"F_{q} of edges {h.edges()}")
        if _top_homology_nonzero(h, UNBOUNDED, q) != is_cycle:
            return _failed(f"F_inf of edges {h.edges()}")
        checked += 1
    return _ok(f"{checked} labeled graphs of order {order}")


def _bridge_invariance(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    bridges = block_decomposition(g).bridges
    if not bridges:
        return _vacuous("no bridges")
    full = forest_complex(g, UNBOUNDED)
    for bridge in bridges:
        outcome = _facet_mismatch(full, forest_complex(delete_edge(g, bridge), UNBOUNDED), f"bridge {bridge}")
        if not outcome.passed:
            return outcome
    return _ok(f"{len(bridges)} bridges")


def _no_cycle_vertex(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    if g.n == 0 or vertices_on_cycles(g) == g.full:
        return _vacuous("every vertex lies on a cycle")
    return _profile_mismatch(HomologyProfile(), reduced_homology(g, UNBOUNDED), "F_inf is not acyclic")


def _min_degree_one(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    if g.n == 0 or g.min_degree() > 1:
        return _vacuous("minimum degree above 1")
    return _profile_mismatch(HomologyProfile(), reduced_homology(g, UNBOUNDED), "F_inf is not acyclic")


def _degree2_suspension(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    pivots = [v for v in range(g.n) if g.degree(v) == 2]
    if not pivots:
        return _vacuous("no vertex of degree 2")
    v = pivots[0]
    full = forest_complex(g, UNBOUNDED)
    profile = reduced_homology_of_complex(full)
    for neighbor in members(g.adj[v]):
        suspended = reduced_homology_of_complex(link(full, 1 << neighbor)).shifted(1)
        outcome = _profile_mismatch(suspended, profile, f"vertex {v}, link of {neighbor}")
        if not outcome.passed:
            return outcome
    return _ok(f"degree-2 vertex {v}")


def _forest_count(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    profile = reduced_homology(g, d)
    counts = forest_faces(g, d, [q + 1 for q in profile.nonzero_dims()])
    for q in profile.nonzero_dims():
        if len(counts.get(q + 1, [])) < q + 2:
            return _failed(f"H_{q} != 0 with only {len(counts.get(q + 1, []))} forests of order {q + 1}")
    return _ok()


def _girth_vanishing(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    gi = girth(g)
    if gi == float("inf"):
        return _vacuous("acyclic graph")
    top = min(int(gi) - 3, g.n - 1)
    if top < -1:
        return _vacuous("girth too small")
    profile = reduced_homology(g, UNBOUNDED, (-1, top))
    return _profile_mismatch(HomologyProfile(), profile, f"girth {gi}")


def _disjoint_join(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    h = partner_graph(seed)
    union = forest_complex(disjoint_union(g, h), d)
    return _facet_mismatch(union, join_complex(forest_complex(g, d), forest_complex(h, d)), f"partner {h.edges()}")


def _independence_skeleton(g: Graph, d: DegreeBound) -> SimplicialComplex:
    independence = forest_complex(g, finite(0))
    return independence if d.is_unbounded else skeleton(independence, d.cap - 1)


def _cone_lemma(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    apexed = forest_complex(join_graphs(g, edgeless(1)), d)
    glued = add_cone(forest_complex(g, d), _independence_skeleton(g, d))
    outcome = _facet_mismatch(apexed, glued, "apex gluing")
    if not outcome.passed:
        return outcome
    return _profile_mismatch(reduced_homology_of_complex(glued), reduced_homology_of_complex(apexed), "apex gluing")


def _connected_independence(g: Graph) -> bool:
    profile = reduced_homology(g, finite(0), (-1, 0))
    return profile.group(-1).is_zero() and profile.group(0).is_zero()


def _join_lemma_homology(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    h = partner_graph(seed, connected_independence=d.cap not in (0, 1))
    n1, n2 = g.n, h.n
    if n1 == 0:
        return _vacuous("empty graph")
    got = reduced_homology(join_graphs(g, h), d)
    if d.cap == 0:
        expected = reduced_homology(g, d) + reduced_homology(h, d) + HomologyProfile.from_wedge({0: 1})
    elif d.cap == 1:
        expected = reduced_homology(g, d) + reduced_homology(h, d) + HomologyProfile.from_wedge({1: n1 * n2 - 1})
    else:
        if not (_connected_independence(g) and _connected_independence(h)):
            return _vacuous("an independence complex is disconnected")
        sk_g, sk_h = _independence_skeleton(g, d), _independence_skeleton(h, d)
        a = add_cone(forest_complex(g, d), sk_g)
        b = add_cone(forest_complex(h, d), sk_h)
        expected = (
            _times(reduced_homology_of_complex(sk_g).shifted(1), n2 - 1)
            + _times(reduced_homology_of_complex(sk_h).shifted(1), n1 - 1)
            + HomologyProfile.from_wedge({2: (n1 - 1) * (n2 - 1)})
            + reduced_homology_of_complex(a)
            + reduced_homology_of_complex(b)
        )
    return _profile_mismatch(expected, got, f"join with partner {h.edges()} on {n2} vertices")


def _alexander_duality(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    if g.n == 0:
        return _vacuous("empty graph")
    k = forest_complex(g, d)
    homology = reduced_homology_of_complex(k)
    cohomology = reduced_cohomology_of_complex(alexander_dual(k))
    n = g.n
    for i in range(-1, n):
        if homology.group(i) != cohomology.group(n - i - 3):
            return _failed(f"H_{i} vs dual H^{n - i - 3}",
                           Mismatch(i, str(cohomology.group(n - i - 3)), str(homology.group(i))))
    return _ok()


def _conn_disjoint(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    if g.n == 0:
        return _vacuous("empty graph")
    h = partner_graph(seed)
    bound = 2 + homological_connectivity(reduced_homology(g, d)) + homological_connectivity(reduced_homology(h, d))
    got = homological_connectivity(reduced_homology(disjoint_union(g, h), d))
    if got >= bound:
        return _ok(f"connectivity {got} >= {bound}")
    return _failed(f"connectivity {got} < {bound} with partner {h.edges()}")


def _filtration_monotone(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    lower = forest_complex(g, d)
    for upper_bound in (d.succ(), UNBOUNDED):
        upper = forest_complex(g, upper_bound)
        for facet in lower.facets:
            if not upper.is_face(facet):
                return _failed(f"{members(facet)} in F_{d} but not in F_{upper_bound}")
    return _ok()


def _stabilization(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    level = star_free_bound(g) - 1
    stable = forest_complex(g, UNBOUNDED)
    checks = [finite(level), finite(level + 1)]
    if not d.is_unbounded and d.cap >= level:
        checks.append(d)
    for bound in checks:
        outcome = _facet_mismatch(forest_complex(g, bound), stable, f"F_{bound} vs F_inf")
        if not outcome.passed:
            return outcome
    return _ok(f"stable from d={level}")


def _euler_consistency(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    from_faces = forest_complex(g, d).euler_characteristic()
    from_betti = reduced_homology(g, d).euler()
    if from_faces == from_betti:
        return _ok()
    return _failed(f"f-vector gives {from_faces}, Betti numbers give {from_betti}")


def _dual_involution(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    k = forest_complex(g, d)
    dual = alexander_dual(k)
    if dual.is_void:
        return _vacuous("F_d is the full simplex")
    return _facet_mismatch(alexander_dual(dual), k, "double dual")


def _k2kn_stable(g: Graph, d: DegreeBound, seed: int) -> PropertyOutcome:
    if g.n % 2 or g.n < 2 or not nx.is_isomorphic(g.to_networkx(), knxkm_graph(2, g.n // 2).to_networkx()):
        return _vacuous("graph is not K_2 x K_m")
    if d.is_unbounded or d.cap < 2:
        return _vacuous("needs finite d >= 2")
    relative = relative_homology(g, d, d.succ())
    return _profile_mismatch(HomologyProfile(), relative, f"(F_{d.succ()}, F_{d})")


Check = Callable[[Graph, DegreeBound, int], PropertyOutcome]

CHECKS: Dict[PropertyId, Check] = {
    PropertyId.SKELETON_AGREE: _skeleton_agree,
    PropertyId.PAIR_CONNECTIVITY: _pair_connectivity,
    PropertyId.F1_FLAGNESS: _f1_flagness,
    PropertyId.SMALL_ORDER_CLASS: _small_order_class,
    PropertyId.BRIDGE_INVARIANCE: _bridge_invariance,
    PropertyId.NO_CYCLE_VERTEX: _no_cycle_vertex,
    PropertyId.MIN_DEGREE_ONE: _min_degree_one,
    PropertyId.DEGREE2_SUSPENSION: _degree2_suspension,
    PropertyId.FOREST_COUNT: _forest_count,
    PropertyId.GIRTH_VANISHING: _girth_vanishing,
    PropertyId.DISJOINT_JOIN: _disjoint_join,
    PropertyId.CONE_LEMMA: _cone_lemma,
    PropertyId.JOIN_LEMMA_HOMOLOGY: _join_lemma_homology,
    PropertyId.ALEXANDER_DUALITY: _alexander_duality,
    PropertyId.CONN_DISJOINT: _conn_disjoint,
    PropertyId.FILTRATION_MONOTONE: _filtration_monotone,
    PropertyId.STABILIZATION: _stabilization,
    PropertyId.EULER_CONSISTENCY: _euler_consistency,
    PropertyId.DUAL_INVOLUTION: _dual_involution,
    PropertyId.K2KN_STABLE: _k2kn_stable,
}


def run_property(prop: PropertyId, g: Graph, d: DegreeBound, seed: int = 0, label: str = "graph") -> CaseReport:
    report_id = f"{prop.value}/{label}/d{d}"
    start = time.perf_counter()
    try:
        outcome = CHECKS[prop](g, d, seed)
    except CapacityError as e:
        logger.warning(f"{report_id} skipped: {e}")
        return CaseReport(report_id, SKIPPED, notes=[f"resource: {e}"], wall_time=time.perf_counter() - start)
    except InputError as e:
        logger.warning(f"{report_id} skipped: {e}")
        return CaseReport(report_id, SKIPPED, notes=[f"outside-range: {e}"], wall_time=time.perf_counter() - start)
    if outcome.vacuous:
        logger.warning(f"{report_id}: {outcome.notes[0]}")
    verdict = PASS if outcome.passed else FAIL
    if not outcome.passed:
        logger.info(f"{report_id} failed: {outcome.witness}")
    return CaseReport(report_id, verdict, expected=prop.value, mismatch=outcome.mismatch, witness=outcome.witness,
                      notes=outcome.notes, wall_time=time.perf_counter() - start)


def random_graph_sample(seed: int, count: Optional[int] = None, max_order: Optional[int] = None) -> List[Tuple[str, Graph]]:
    """Seeded random graphs labelled by their `random:seed,n,percent` family text."""
    count = settings.RANDOM_GRAPH_COUNT if count is None else count
    max_order = settings.RANDOM_GRAPH_MAX_ORDER if max_order is None else max_order
    rng = np.random.Generator(np.random.PCG64(seed))
    sample = []
    for i in range(count):
        order = int(rng.integers(1, max_order + 1))
        percent = int(rng.integers(20, 71))
        label = f"random:{seed + i},{order},{percent}"
        sample.append((label, generate(parse_family(label))))
    return sample


def named_graph_sample() -> List[Tuple[str, Graph]]:
    names = ["petersen", "bowtie", "cycle:6", "path:5", "complete:4", "bipartite:2,3", "doublestar:2,2",
             "cyclechord:2,2", "wheel:5", "ladder:3", "knxkm:2,3"]
    return [(name, generate(parse_family(name))) for name in names]
