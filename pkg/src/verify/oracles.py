import logging
import time

import networkx as nx

from src.complexes.degree import DegreeBound, finite
from src.config import settings
from src.graphs.families import rp2_graph, torsion_graph
from src.graphs.forests import induced_forest_check
from src.graphs.graph import Graph
from src.homology.compute import reduced_homology
from src.verify.catalog import TORSION_WINDOW
from src.verify.cases import FAIL, PASS, SKIPPED, CaseReport, TorsionExpected
from src.utils.errors import CapacityError, InputError

logger = logging.getLogger(__name__)


def brute_force_t_d(g: Graph, d: DegreeBound) -> int:
    """Largest induced d-forest by scanning all 2^n vertex subsets."""
    if g.n > settings.budget.brute_force_max_order:
        raise CapacityError(
            f"Brute force over 2^{g.n} subsets", limit=settings.budget.brute_force_max_order, observed=g.n
        )
    best = 0
    for s in range(1 << g.n):
        size = s.bit_count()
        if size > best and induced_forest_check(g, s, d):
            best = size
    return best


def brute_force_forest_check(g: Graph, s: int, d: DegreeBound) -> bool:
    """Independent reference for induced_forest_check built on networkx."""
    sub = g.to_networkx().subgraph([v for v in range(g.n) if s >> v & 1])
    if sub.number_of_nodes() and not nx.is_forest(sub):
        return False
    return all(d.allows(degree) for _, degree in sub.degree())


def torsion_witness(d: DegreeBound = finite(3)) -> CaseReport:
    """H_1..H_3 of F_d(P_4 * H) must carry a Z/2 summand for d >= 3."""
    if not d.at_least(3):
        raise InputError(f"The torsion witness needs d >= 3, got d={d}")
    report_id = f"torsion-witness/d{d}"
    start = time.perf_counter()
    expectation = TorsionExpected(factor=2, window=TORSION_WINDOW)
    try:
        g = torsion_graph()
        logger.info(f"Torsion witness: n={g.n}, m={g.edge_count()}, window {TORSION_WINDOW}")
        profile = reduced_homology(g, d, TORSION_WINDOW)
        independence = reduced_homology(rp2_graph(), finite(0))
    except CapacityError as e:
        logger.warning(f"{report_id} skipped: {e}")
        return CaseReport(report_id, SKIPPED, expected=expectation.describe(), notes=[f"resource: {e}"],
                          wall_time=time.perf_counter() - start)
    mismatch = expectation.check(profile)
    notes = [f"independence complex of the RP^2 graph: {independence.describe()}"]
    if independence.torsion(1) != (2,):
        notes.append("independence complex lost its Z/2 in dimension 1")
        verdict = FAIL
    else:
        verdict = PASS if mismatch is None else FAIL
    return CaseReport(report_id, verdict, expected=expectation.describe(), got=profile, mismatch=mismatch,
                      notes=notes, wall_time=time.perf_counter() - start)
