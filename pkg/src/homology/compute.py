import logging
from typing import Dict, List, Optional, Tuple

from src.complexes.complex import SimplicialComplex
from src.complexes.degree import DegreeBound
from src.complexes.forest import forest_faces
from src.config import settings
from src.graphs.graph import Graph, VertexSet
from src.homology.boundary import BoundaryMatrix, build_boundary
from src.homology.profile import HomologyGroup, HomologyProfile
from src.homology.snf import SnfResult, rank_mod_p, smith_normal_form
from src.utils.errors import InputError

logger = logging.getLogger(__name__)

DimWindow = Tuple[int, int]

_ZERO_MAP = SnfResult(rank=0, invariant_factors=())


def parse_dims(text: str) -> DimWindow:
    """'lo..hi' (inclusive) or a single dimension."""
    lo, sep, hi = text.partition("..")
    try:
        window = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError as e:
        raise InputError(f"Dimension window must look like 'lo..hi', got {text!r}") from e
    if window[0] > window[1] or window[0] < -1:
        raise InputError(f"Empty or out-of-range dimension window {text!r}")
    return window


def _reduce(matrix: BoundaryMatrix) -> SnfResult:
    if matrix.n_rows == 0 or matrix.n_cols == 0:
        return _ZERO_MAP
    budget = settings.budget
    mod_rank = None
    if budget.prefilter_max_entries and matrix.n_rows * matrix.n_cols <= budget.prefilter_max_entries:
        mod_rank = rank_mod_p(matrix, budget.prefilter_prime)
    result = smith_normal_form(matrix)
    if mod_rank is not None and mod_rank > result.rank:
        raise RuntimeError(f"d_{matrix.q}: rank mod p ({mod_rank}) exceeds integral rank ({result.rank})")
    logger.debug(f"d_{matrix.q}: {matrix.n_rows}x{matrix.n_cols}, nnz={matrix.nnz}, rank={result.rank}, "
                 f"factors={list(result.invariant_factors)}")
    return result


def profile_from_faces(faces: Dict[int, List[VertexSet]], dims: DimWindow,
                       cohomology: bool = False) -> HomologyProfile:
    """Reduced (co)homology in dims lo..hi from the faces of dimensions lo-1..hi+1.

    faces[q] lists the q-faces (q = -1 holds the empty face for augmented complexes).
    Dimensions with no faces are left out of the profile.
    """
    lo, hi = dims
    snf: Dict[int, SnfResult] = {}

    def reduced(q: int) -> SnfResult:
        if q not in snf:
            rows, cols = faces.get(q - 1, []), faces.get(q, [])
            snf[q] = _reduce(build_boundary(rows, cols, q)) if rows and cols else _ZERO_MAP
        return snf[q]

    groups = {}
    for q in range(lo, hi + 1):
        chains = len(faces.get(q, []))
        if not chains:
            continue
        betti = chains - reduced(q).rank - reduced(q + 1).rank
        # H^q torsion is the cokernel torsion of delta^{q-1} = d_q^T, i.e. the factors of d_q
        torsion = reduced(q).invariant_factors if cohomology else reduced(q + 1).invariant_factors
        groups[q] = HomologyGroup(betti, torsion)
    return HomologyProfile(groups)


def _full_window(faces: Dict[int, List[VertexSet]]) -> DimWindow:
    top = max((q for q, fs in faces.items() if fs), default=-1)
    return -1, top


def _forest_chain_faces(g: Graph, d: DegreeBound, dims: Optional[DimWindow], jobs: int) -> Tuple[Dict[int, List[VertexSet]], DimWindow]:
    if dims is None:
        by_size = forest_faces(g, d, range(0, g.n + 1), jobs=jobs)
    else:
        lo, hi = dims
        by_size = forest_faces(g, d, range(max(lo, 0), hi + 3), jobs=jobs)
    faces = {size - 1: fs for size, fs in by_size.items()}
    return faces, (dims if dims is not None else _full_window(faces))


def reduced_homology(g: Graph, d: DegreeBound, dims: Optional[DimWindow] = None, jobs: int = 1) -> HomologyProfile:
    """Reduced integral homology of F_d(G), computed from faces without building facets."""
    faces, window = _forest_chain_faces(g, d, dims, jobs)
    logger.debug(f"F_{d} on n={g.n}: f-vector {[len(faces[q]) for q in sorted(faces)]}, window {window}")
    return profile_from_faces(faces, window)


def reduced_homology_of_complex(k: SimplicialComplex, dims: Optional[DimWindow] = None,
                                cohomology: bool = False) -> HomologyProfile:
    if k.is_void:
        return HomologyProfile()
    if dims is None:
        dims = (-1, k.dimension)
    lo, hi = dims
    faces = {q: k.faces(q) for q in range(lo - 1, hi + 2)}
    return profile_from_faces(faces, dims, cohomology=cohomology)


def reduced_cohomology_of_complex(k: SimplicialComplex, dims: Optional[DimWindow] = None) -> HomologyProfile:
    return reduced_homology_of_complex(k, dims, cohomology=True)


def relative_homology(g: Graph, d_small: DegreeBound, d_big: DegreeBound,
                      dims: Optional[DimWindow] = None) -> HomologyProfile:
    """H_*(F_big(G), F_small(G)) from the chains of big-faces that are not small-faces."""
    if d_big < d_small:
        raise InputError(f"Relative homology needs d_small <= d_big, got {d_small} > {d_big}")
    big, window = _forest_chain_faces(g, d_big, dims, 1)
    small, _ = _forest_chain_faces(g, d_small, dims, 1)
    relative = {}
    for q, faces in big.items():
        excluded = set(small.get(q, ()))
        relative[q] = [f for f in faces if f not in excluded]
    return profile_from_faces(relative, window)
