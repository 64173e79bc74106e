import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional

from src.complexes.complex import SimplicialComplex, empty_complex
from src.complexes.degree import DegreeBound
from src.config import settings
from src.graphs.forests import ForestSearch
from src.graphs.graph import Graph, VertexSet
from src.utils.errors import CapacityError

logger = logging.getLogger(__name__)


def forest_complex(g: Graph, d: DegreeBound, max_facets: Optional[int] = None) -> SimplicialComplex:
    """F_d(G): facets are the maximal vertex sets inducing a forest with degrees <= d."""
    if g.n == 0:
        return empty_complex(0)
    limit = settings.budget.max_facets if max_facets is None else max_facets
    search = ForestSearch(g, d)
    facets: List[VertexSet] = []

    def visit(face, size, comps, deg):
        if search.is_maximal(face, comps, deg):
            facets.append(face)
            if limit and len(facets) > limit:
                raise CapacityError(f"F_{d} has more than {limit} facets", limit=limit, observed=len(facets))

    search.walk(visit, g.n)
    logger.debug(f"F_{d}: {len(facets)} facets on {g.n} vertices")
    return SimplicialComplex(g.n, tuple(facets))


def _collect(g: Graph, d: DegreeBound, sizes: frozenset, first: Optional[int], limit: int) -> Dict[int, List[VertexSet]]:
    buckets: Dict[int, List[VertexSet]] = {size: [] for size in sizes}
    search = ForestSearch(g, d)

    def visit(face, size, comps, deg):
        bucket = buckets.get(size)
        if bucket is not None:
            bucket.append(face)
            if limit and len(bucket) > limit:
                raise CapacityError(
                    f"More than {limit} faces of dimension {size - 1} in F_{d}", limit=limit, observed=len(bucket)
                )

    positive = [s for s in sizes if s > 0]
    if positive:
        search.walk(visit, max(positive), first=first)
    return buckets


def _collect_from(args):
    return _collect(*args)


def forest_faces(g: Graph, d: DegreeBound, sizes: Iterable[int], jobs: int = 1) -> Dict[int, List[VertexSet]]:
    """Faces of F_d(G) with the requested sizes (size = dimension + 1), each list in lex order.

    Size 0 yields the empty face. With jobs > 1 the walk is split by smallest vertex
    across worker processes; concatenating per-vertex results keeps the order.
    """
    wanted = frozenset(s for s in sizes if 0 <= s <= g.n)
    limit = settings.budget.max_faces_per_dim
    if jobs > 1 and g.n > 1:
        tasks = [(g, d, wanted, v, limit) for v in range(g.n)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_collect_from, tasks))
        buckets = {size: [] for size in wanted}
        for part in parts:
            for size, faces in part.items():
                buckets[size].extend(faces)
                if limit and len(buckets[size]) > limit:
                    raise CapacityError(
                        f"More than {limit} faces of dimension {size - 1} in F_{d}",
                        limit=limit,
                        observed=len(buckets[size]),
                    )
    else:
        buckets = _collect(g, d, wanted, None, limit)
    if 0 in buckets:
        buckets[0] = [0]
    return buckets


def faces_of_dim(g: Graph, d: DegreeBound, q: int, jobs: int = 1) -> List[VertexSet]:
    """Every q-face of F_d(G) in lexicographic order; q = -1 gives the empty face."""
    if q < -1 or q + 1 > g.n:
        return []
    return forest_faces(g, d, [q + 1], jobs=jobs)[q + 1]


def t_d(g: Graph, d: DegreeBound) -> int:
    """Order of the largest induced forest of G with maximum degree <= d."""
    return ForestSearch(g, d).largest_size()
