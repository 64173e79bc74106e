import logging
import math
from collections import deque
from dataclasses import dataclass
from typing import List, Tuple, Union

import networkx as nx
import numpy as np

from src.graphs.graph import Graph, VertexSet, bits_of, iter_members, lex_key, make_graph
from src.utils.errors import InputError

logger = logging.getLogger(__name__)


def girth(g: Graph) -> Union[int, float]:
    """Length of a shortest cycle; math.inf for forests."""
    best: Union[int, float] = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in iter_members(g.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def vertices_on_cycles(g: Graph) -> VertexSet:
    """Vertices lying on at least one cycle (members of a block with three or more vertices)."""
    on_cycle = 0
    for component in nx.biconnected_components(g.to_networkx()):
        if len(component) >= 3:
            on_cycle |= bits_of(component)
    return on_cycle


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: Tuple[VertexSet, ...]
    cut_vertices: VertexSet
    bridges: Tuple[Tuple[int, int], ...]
    is_cactus: bool
    saturated_blocks: Tuple[VertexSet, ...]
    saturated_vertices: VertexSet

    @property
    def b(self) -> int:
        return len(self.blocks)

    @property
    def sb(self) -> int:
        return len(self.saturated_blocks)

    @property
    def sv(self) -> int:
        return self.saturated_vertices.bit_count()

    @property
    def all_cycles(self) -> bool:
        return not self.bridges


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks (maximal 2-connected pieces and bridges), cut vertices and the cactus counts.

    A block is saturated when every one of its vertices is a cut vertex; a vertex is
    saturated when it lies in two or more saturated blocks.
    """
    nxg = g.to_networkx()
    blocks = sorted((bits_of(c) for c in nx.biconnected_components(nxg)), key=lex_key)
    cut = bits_of(nx.articulation_points(nxg))
    bridges = tuple(sorted(tuple(iter_members(b)) for b in blocks if b.bit_count() == 2))

    is_cactus = True
    for block in blocks:
        size = block.bit_count()
        if size >= 3 and g.edges_within(block) != size:
            is_cactus = False
            break

    saturated = tuple(b for b in blocks if not b & ~cut)
    hits = {}
    for block in saturated:
        for v in iter_members(block):
            hits[v] = hits.get(v, 0) + 1
    saturated_vertices = bits_of(v for v, count in hits.items() if count >= 2)

    return BlockDecomposition(
        blocks=tuple(blocks),
        cut_vertices=cut,
        bridges=bridges,
        is_cactus=is_cactus,
        saturated_blocks=saturated,
        saturated_vertices=saturated_vertices,
    )


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_cactus(seed: int, block_count: int, max_cycle_len: int, cycles_only: bool = False) -> Graph:
    """Connected cactus grown by gluing blocks onto uniformly chosen existing vertices.

    Each block is a cycle of length 3..max_cycle_len, or (unless cycles_only) a single
    edge, drawn uniformly. Deterministic for a fixed seed.
    """
    if block_count < 1:
        raise InputError(f"Cactus needs at least one block, got {block_count}")
    if max_cycle_len < 3:
        raise InputError(f"Maximum cycle length must be at least 3, got {max_cycle_len}")
    rng = _rng(seed)
    smallest = 3 if cycles_only else 2
    n = 1
    edges: List[Tuple[int, int]] = []
    for _ in range(block_count):
        anchor = int(rng.integers(n))
        length = int(rng.integers(smallest, max_cycle_len + 1))
        ring = [anchor] + list(range(n, n + length - 1))
        n += length - 1
        if length == 2:
            edges.append((ring[0], ring[1]))
        else:
            edges.extend(zip(ring, ring[1:] + ring[:1]))
    g = make_graph(n, edges)

    decomposition = block_decomposition(g)
    if not decomposition.is_cactus or decomposition.b != block_count:
        raise RuntimeError(f"Cactus generator produced {decomposition.b} blocks for seed {seed}")
    logger.debug(f"Random cactus seed={seed}: n={n}, b={block_count}, sb={decomposition.sb}")
    return g


def random_graph(seed: int, n: int, p: float) -> Graph:
    """G(n, p) with pairs visited in lexicographic order."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise InputError(f"Random graph needs n >= 0 and 0 <= p <= 1, got n={n}, p={p}")
    rng = _rng(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return make_graph(n, edges)
