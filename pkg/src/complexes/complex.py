import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, Iterable, List, Optional, Tuple

from src.config import settings
from src.graphs.graph import VertexSet, bits_of, iter_members, lex_key, members
from src.utils.errors import CapacityError, InputError

logger = logging.getLogger(__name__)


def _superset_index(facets: Iterable[VertexSet], ground: int) -> List[int]:
    """Per vertex, a bitset over facet positions containing that vertex."""
    index = [0] * ground
    for pos, facet in enumerate(facets):
        for v in iter_members(facet):
            index[v] |= 1 << pos
    return index


def _contained_elsewhere(face: VertexSet, pos: Optional[int], index: List[int], count: int) -> bool:
    hits = (1 << count) - 1
    for v in iter_members(face):
        hits &= index[v]
        if not hits:
            return False
    if pos is not None:
        hits &= ~(1 << pos)
    return bool(hits)


@dataclass(frozen=True)
class SimplicialComplex:
    """Finite abstract simplicial complex on ground set 0..ground-1, stored by its facets.

    facets == () is the void complex (no faces at all); facets == (0,) is the empty
    complex {emptyset}. Facets are kept sorted lexicographically and form an antichain.
    """
    ground: int
    facets: Tuple[VertexSet, ...]

    def __post_init__(self):
        if self.ground < 0:
            raise InputError(f"Ground size must be non-negative, got {self.ground}")
        full = (1 << self.ground) - 1
        for facet in self.facets:
            if facet < 0 or facet & ~full:
                raise InputError(f"Facet {members(facet)} is not contained in 0..{self.ground - 1}")
        ordered = tuple(sorted(set(self.facets), key=lex_key))
        if len(ordered) != len(self.facets):
            raise InputError("Duplicate facets")
        object.__setattr__(self, "facets", ordered)
        index = _superset_index(ordered, self.ground)
        for pos, facet in enumerate(ordered):
            if facet == 0 and len(ordered) > 1:
                raise InputError("The empty face cannot be a facet next to other facets")
            if facet and _contained_elsewhere(facet, pos, index, len(ordered)):
                raise InputError(f"Facet {members(facet)} is contained in another facet")

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty(self) -> bool:
        return self.facets == (0,)

    @property
    def dimension(self) -> Optional[int]:
        """Largest face dimension; -1 for the empty complex, None for the void one."""
        if self.is_void:
            return None
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def vertices(self) -> VertexSet:
        used = 0
        for facet in self.facets:
            used |= facet
        return used

    def is_face(self, s: VertexSet) -> bool:
        return any(not s & ~facet for facet in self.facets)

    def faces(self, q: int, limit: Optional[int] = None) -> List[VertexSet]:
        """All q-dimensional faces in lexicographic order."""
        if self.is_void or q < -1:
            return []
        if q == -1:
            return [0]
        size = q + 1
        limit = settings.budget.max_faces_per_dim if limit is None else limit
        seen = set()
        for facet in self.facets:
            if facet.bit_count() < size:
                continue
            for combo in combinations(members(facet), size):
                seen.add(bits_of(combo))
            if limit and len(seen) > limit:
                raise CapacityError(f"More than {limit} faces in dimension {q}", limit=limit, observed=len(seen))
        return sorted(seen, key=lex_key)

    def faces_by_dim(self, lo: int, hi: int) -> Dict[int, List[VertexSet]]:
        return {q: self.faces(q) for q in range(lo, hi + 1)}

    def f_vector(self) -> List[int]:
        """(f_{-1}, f_0, ..., f_dim); empty list for the void complex."""
        top = self.dimension
        if top is None:
            return []
        return [len(self.faces(q)) for q in range(-1, top + 1)]

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic sum_q (-1)^q f_q, q from -1."""
        return sum((-1) ** ((i + 1) % 2) * count for i, count in enumerate(self.f_vector()))

    def to_json_dict(self) -> Dict[str, Any]:
        return {"ground": self.ground, "facets": [members(f) for f in self.facets]}

    @classmethod
    def from_json_dict(cls, data: Dict[str, Any]) -> "SimplicialComplex":
        try:
            ground = int(data["ground"])
            facets = tuple(bits_of(int(v) for v in facet) for facet in data["facets"])
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"Malformed complex JSON: {e}") from e
        return cls(ground, facets)


VOID = SimplicialComplex(0, ())


def void_complex(ground: int = 0) -> SimplicialComplex:
    return SimplicialComplex(ground, ())


def empty_complex(ground: int = 0) -> SimplicialComplex:
    return SimplicialComplex(ground, (0,))


def simplex(ground: int, vertices: VertexSet) -> SimplicialComplex:
    return SimplicialComplex(ground, (vertices,))


def sphere_boundary(k: int) -> SimplicialComplex:
    """Boundary of the k-simplex on 0..k, a (k-1)-sphere."""
    full = (1 << (k + 1)) - 1
    return SimplicialComplex(k + 1, tuple(full & ~(1 << v) for v in range(k + 1)))


def from_faces(ground: int, faces: Iterable[VertexSet]) -> SimplicialComplex:
    """Complex generated by arbitrary faces: keep the inclusion-maximal ones."""
    candidates = sorted(set(faces), key=lambda f: (-f.bit_count(), lex_key(f)))
    kept: List[VertexSet] = []
    index = [0] * ground
    for face in candidates:
        if kept and (face == 0 or _contained_elsewhere(face, None, index, len(kept))):
            continue
        for v in iter_members(face):
            index[v] |= 1 << len(kept)
        kept.append(face)
    return SimplicialComplex(ground, tuple(kept))


def skeleton(k: SimplicialComplex, q: int) -> SimplicialComplex:
    """All faces of dimension <= q."""
    if k.is_void:
        return k
    if q < -1:
        return void_complex(k.ground)
    size = q + 1
    faces = []
    for facet in k.facets:
        if facet.bit_count() <= size:
            faces.append(facet)
        else:
            faces.extend(bits_of(c) for c in combinations(members(facet), size))
    return from_faces(k.ground, faces)


def link(k: SimplicialComplex, s: VertexSet) -> SimplicialComplex:
    """lk(S) = {T : T & S = 0, T | S in K}; void when S is not a face."""
    if not k.is_face(s):
        return void_complex(k.ground)
    return from_faces(k.ground, [facet & ~s for facet in k.facets if not s & ~facet])


def star(k: SimplicialComplex, s: VertexSet) -> SimplicialComplex:
    if not k.is_face(s):
        return void_complex(k.ground)
    return SimplicialComplex(k.ground, tuple(f for f in k.facets if not s & ~f))


def deletion(k: SimplicialComplex, s: VertexSet) -> SimplicialComplex:
    """Faces avoiding S."""
    if k.is_void:
        return k
    return from_faces(k.ground, [facet & ~s for facet in k.facets])


def join_complex(k: SimplicialComplex, l: SimplicialComplex) -> SimplicialComplex:
    """K * L with L's ground shifted by K's ground size."""
    shift = k.ground
    facets = tuple(a | (b << shift) for a in k.facets for b in l.facets)
    return SimplicialComplex(k.ground + l.ground, facets)


def cone(k: SimplicialComplex) -> SimplicialComplex:
    """Cone with apex at the new vertex `ground`."""
    apex = 1 << k.ground
    return SimplicialComplex(k.ground + 1, tuple(f | apex for f in k.facets))


def suspension(k: SimplicialComplex) -> SimplicialComplex:
    """Join with two new points `ground` and `ground + 1`."""
    return join_complex(k, SimplicialComplex(2, (1, 2)))


def add_cone(k: SimplicialComplex, sub: SimplicialComplex) -> SimplicialComplex:
    """K union cone(sub), the apex being the new vertex `ground`."""
    if sub.ground != k.ground:
        raise InputError(f"Subcomplex lives on {sub.ground} vertices, complex on {k.ground}")
    for facet in sub.facets:
        if not k.is_face(facet):
            raise InputError(f"{members(facet)} is not a face of the ambient complex")
    apex = 1 << k.ground
    return from_faces(k.ground + 1, list(k.facets) + [f | apex for f in sub.facets])


def relabel(k: SimplicialComplex, ground: int) -> SimplicialComplex:
    """Same faces on a larger ground set."""
    if ground < k.ground:
        raise InputError(f"Cannot shrink ground from {k.ground} to {ground}")
    return SimplicialComplex(ground, k.facets)


def minimal_nonfaces(k: SimplicialComplex) -> List[VertexSet]:
    """Inclusion-minimal subsets of the ground set that are not faces, lexicographic order."""
    if k.ground > settings.budget.max_dual_ground:
        raise CapacityError(
            f"Ground set of {k.ground} vertices exceeds the duality limit",
            limit=settings.budget.max_dual_ground,
            observed=k.ground,
        )
    if k.is_void:
        return [0]
    all_faces = set()
    for q in range(-1, k.dimension + 1):
        all_faces.update(k.faces(q))

    # a minimal non-face S is F + v with F = S - max(S) a face
    result = []
    for face in all_faces:
        for v in range(face.bit_length(), k.ground):
            s = face | (1 << v)
            if s in all_faces:
                continue
            if all(s ^ (1 << u) in all_faces for u in iter_members(face)):
                result.append(s)
    return sorted(result, key=lex_key)


def alexander_dual(k: SimplicialComplex) -> SimplicialComplex:
    """K* = {V - S : S not in K}; its facets are complements of the minimal non-faces."""
    full = (1 << k.ground) - 1
    return SimplicialComplex(k.ground, tuple(full & ~s for s in minimal_nonfaces(k)))
