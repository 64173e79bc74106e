"""Named graph families and the `name:p1,p2,...` mini-language used by the CLI and suites."""
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, List, Sequence, Tuple

from src.graphs.graph import Graph, edgeless, make_graph
from src.graphs.operations import cartesian_product, categorical_product, complement, join_graphs
from src.graphs.structure import random_cactus, random_graph
from src.utils.errors import InputError

logger = logging.getLogger(__name__)

# Minimal 6-vertex triangulation of the real projective plane.
RP2_TRIANGLES: Tuple[Tuple[int, int, int], ...] = (
    (0, 1, 3), (0, 1, 5), (0, 2, 4), (0, 2, 5), (0, 3, 4),
    (1, 2, 3), (1, 2, 4), (1, 4, 5), (2, 3, 5), (3, 4, 5),
)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: Tuple[int, ...] = ()
    n: int = 0
    edges: Tuple[Tuple[int, int], ...] = field(default=(), repr=False)

    def __str__(self) -> str:
        if self.name == "explicit":
            return f"explicit[n={self.n},m={len(self.edges)}]"
        if not self.params:
            return self.name
        return f"{self.name}:{','.join(str(p) for p in self.params)}"


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return make_graph(n, combinations(range(n), 2))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    owner = [k for k, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return make_graph(n, [(u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]])


def double_star(r: int, s: int) -> Graph:
    """Adjacent centers u_0 = 0 and v_0 = r+1, with r and s leaves respectively."""
    v0 = r + 1
    edges = [(0, v0)]
    edges.extend((0, i) for i in range(1, r + 1))
    edges.extend((v0, v0 + j) for j in range(1, s + 1))
    return make_graph(r + s + 2, edges)


def cycle_with_chord(r: int, k: int) -> Graph:
    """C_{r+k+2} on v=0, w_1..w_r, u=r+1, w_{r+1}..w_{r+k}, plus the chord vu."""
    n = r + k + 2
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges.append((0, r + 1))
    return make_graph(n, edges)


def wheel_graph(n: int) -> Graph:
    """K_1 * C_n with the hub at vertex 0."""
    return join_graphs(edgeless(1), cycle_graph(n))


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return make_graph(10, edges)


def bowtie_graph() -> Graph:
    return make_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


def barycentric_graph(facets: Sequence[Sequence[int]]) -> Graph:
    """1-skeleton of the barycentric subdivision: faces ordered by (dimension, vertices), joined on strict inclusion."""
    faces = set()
    for facet in facets:
        facet = tuple(sorted(facet))
        for size in range(1, len(facet) + 1):
            faces.update(combinations(facet, size))
    ordered = sorted(faces, key=lambda f: (len(f), f))
    as_sets = [frozenset(f) for f in ordered]
    edges = [(i, j) for i, j in combinations(range(len(ordered)), 2) if as_sets[i] < as_sets[j]]
    return make_graph(len(ordered), edges)


def rp2_graph() -> Graph:
    """Complement of the barycentric 1-skeleton of RP^2; its independence complex is that subdivision."""
    return complement(barycentric_graph(RP2_TRIANGLES))


def ladder_graph(k: int) -> Graph:
    return cartesian_product(path_graph(2), path_graph(k))


def knxkm_graph(n: int, m: int) -> Graph:
    return categorical_product(complete_graph(n), complete_graph(m))


def k2k2kn_graph(n: int) -> Graph:
    return categorical_product(categorical_product(complete_graph(2), complete_graph(2)), complete_graph(n))


def torsion_graph() -> Graph:
    """P_4 * H, with H the RP^2 complement graph."""
    return join_graphs(path_graph(4), rp2_graph())


@dataclass(frozen=True)
class _Family:
    build: Callable[..., Graph]
    minimums: Tuple[int, ...]
    variadic: bool = False


FAMILIES: Dict[str, _Family] = {
    "path": _Family(path_graph, (1,)),
    "cycle": _Family(cycle_graph, (3,)),
    "complete": _Family(complete_graph, (1,)),
    "empty": _Family(edgeless, (0,)),
    "star": _Family(lambda r: complete_multipartite((1, r)), (1,)),
    "bipartite": _Family(lambda n, m: complete_multipartite((n, m)), (1, 1)),
    "multipartite": _Family(lambda *parts: complete_multipartite(parts), (1,), variadic=True),
    "doublestar": _Family(double_star, (1, 1)),
    "wheel": _Family(wheel_graph, (3,)),
    "cyclechord": _Family(cycle_with_chord, (1, 1)),
    "petersen": _Family(petersen_graph, ()),
    "bowtie": _Family(bowtie_graph, ()),
    "rp2": _Family(rp2_graph, ()),
    "torsion": _Family(torsion_graph, ()),
    "ladder": _Family(ladder_graph, (1,)),
    "knxkm": _Family(knxkm_graph, (1, 1)),
    "k2k2kn": _Family(k2k2kn_graph, (1,)),
    "cactus": _Family(lambda seed, b, length: random_cactus(seed, b, length), (0, 1, 3)),
    "cycle-cactus": _Family(lambda seed, b, length: random_cactus(seed, b, length, cycles_only=True), (0, 1, 3)),
    "random": _Family(lambda seed, n, percent: random_graph(seed, n, percent / 100.0), (0, 0, 0)),
}


def family_names() -> List[str]:
    return sorted(FAMILIES)


def parse_family(text: str) -> FamilySpec:
    """Parse `name` or `name:p1,p2,...` into a FamilySpec."""
    name, _, rest = text.strip().partition(":")
    name = name.strip().lower()
    if name not in FAMILIES:
        raise InputError(f"Unknown graph family '{name}'. Known: {', '.join(family_names())}")
    try:
        params = tuple(int(p) for p in rest.split(",")) if rest.strip() else ()
    except ValueError as e:
        raise InputError(f"Family parameters must be integers: {text!r}") from e
    return FamilySpec(name=name, params=params)


def explicit_family(g: Graph) -> FamilySpec:
    return FamilySpec(name="explicit", n=g.n, edges=tuple(g.edges()))


def generate(spec: FamilySpec) -> Graph:
    if spec.name == "explicit":
        return make_graph(spec.n, spec.edges)
    family = FAMILIES.get(spec.name)
    if family is None:
        raise InputError(f"Unknown graph family '{spec.name}'")
    expected = len(family.minimums)
    if family.variadic:
        if not spec.params:
            raise InputError(f"Family '{spec.name}' needs at least one parameter")
        floors = family.minimums * len(spec.params)
    else:
        if len(spec.params) != expected:
            raise InputError(f"Family '{spec.name}' takes {expected} parameter(s), got {len(spec.params)}")
        floors = family.minimums
    for value, floor in zip(spec.params, floors):
        if value < floor:
            raise InputError(f"Parameter {value} of '{spec}' is below the family minimum {floor}")
    if spec.name == "random" and spec.params[2] > 100:
        raise InputError(f"Edge percentage must be at most 100 in '{spec}'")
    graph = family.build(*spec.params)
    logger.debug(f"Generated {spec}: n={graph.n}, m={graph.edge_count()}")
    return graph


def generate_from_text(text: str) -> Graph:
    return generate(parse_family(text))
