import logging
from typing import Sequence

from src.graphs.graph import Graph, VertexSet, iter_members, make_graph, members
from src.utils.errors import InputError

logger = logging.getLogger(__name__)


def join_graphs(g: Graph, h: Graph) -> Graph:
    """G * H: disjoint union plus every edge between V(G) and V(H). H is shifted by |V(G)|."""
    shift = g.n
    adj = [row | (h.full << shift) for row in g.adj]
    adj.extend((row << shift) | g.full for row in h.adj)
    return Graph(g.n + h.n, tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.adj + tuple(row << shift for row in h.adj))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G box H on pairs (i, j) encoded as i * |V(H)| + j."""
    width = h.n
    edges = []
    for i in range(g.n):
        for j, k in h.edges():
            edges.append((i * width + j, i * width + k))
    for i, k in g.edges():
        for j in range(width):
            edges.append((i * width + j, k * width + j))
    return make_graph(g.n * width, edges)


def categorical_product(g: Graph, h: Graph) -> Graph:
    """G x H: (i, j) ~ (k, l) iff ik in E(G) and jl in E(H)."""
    width = h.n
    edges = []
    for i, k in g.edges():
        for j, l in h.edges():
            edges.append((i * width + j, k * width + l))
            edges.append((i * width + l, k * width + j))
    return make_graph(g.n * width, edges)


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """G[S] relabelled to 0..|S|-1 in increasing order of the original labels."""
    if s & ~g.full:
        raise InputError(f"Vertex set {members(s)} is not contained in 0..{g.n - 1}")
    kept = members(s)
    position = {v: i for i, v in enumerate(kept)}
    adj = []
    for v in kept:
        row = 0
        for w in iter_members(g.adj[v] & s):
            row |= 1 << position[w]
        adj.append(row)
    return Graph(len(kept), tuple(adj))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise InputError(f"Vertex {v} out of range 0..{g.n - 1}")
    return induced_subgraph(g, g.full & ~(1 << v))


def delete_edge(g: Graph, edge: Sequence[int]) -> Graph:
    u, v = edge
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise InputError(f"({u}, {v}) is not an edge of the graph")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))
