import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx

from src.utils.errors import InputError

logger = logging.getLogger(__name__)

# A vertex set is a plain int used as a bitset: bit i set <=> vertex i present.
# Python ints are arbitrary precision, so the same code serves n <= 64 and beyond.
VertexSet = int
Edge = Tuple[int, int]


def bits_of(vertices: Iterable[int]) -> VertexSet:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


def iter_members(bits: VertexSet) -> Iterator[int]:
    """Vertices of a bitset in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def members(bits: VertexSet) -> List[int]:
    return list(iter_members(bits))


def lex_key(bits: VertexSet) -> Tuple[int, ...]:
    """Sort key putting vertex sets in lexicographic order of their sorted vertex tuples."""
    return tuple(iter_members(bits))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1; adj[i] is the open neighborhood N(i)."""
    n: int
    adj: Tuple[VertexSet, ...]

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"Vertex count must be non-negative, got {self.n}")
        if len(self.adj) != self.n:
            raise InputError(f"Adjacency has {len(self.adj)} rows for {self.n} vertices")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InputError(f"Row {v} references vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise InputError(f"Loop at vertex {v}")
            for w in iter_members(row):
                if not self.adj[w] >> v & 1:
                    raise InputError(f"Adjacency is not symmetric on edge ({v}, {w})")

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> List[Edge]:
        """Edges (u, v) with u < v in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_members(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree_sequence(self) -> List[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degree_sequence(), default=0)

    def min_degree(self) -> int:
        return min(self.degree_sequence(), default=0)

    def edges_within(self, s: VertexSet) -> int:
        return sum((self.adj[v] & s).bit_count() for v in iter_members(s)) // 2

    def components(self) -> List[VertexSet]:
        """Connected components as bitsets, ordered by smallest vertex."""
        seen = 0
        result = []
        for root in range(self.n):
            if seen >> root & 1:
                continue
            component = frontier = 1 << root
            while frontier:
                reach = 0
                for v in iter_members(frontier):
                    reach |= self.adj[v]
                frontier = reach & ~component
                component |= frontier
            seen |= component
            result.append(component)
        return result

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def to_json_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json_dict(cls, data: Dict[str, Any]) -> "Graph":
        try:
            n = int(data["n"])
            edges = [(int(u), int(v)) for u, v in data["edges"]]
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"Malformed graph JSON: {e}") from e
        return make_graph(n, edges)

    def to_edge_list_text(self) -> str:
        lines = [f"n {self.n}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list_text(cls, text: str) -> "Graph":
        n = None
        edges = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            try:
                if parts[0] == "n" and len(parts) == 2 and n is None:
                    n = int(parts[1])
                    continue
                if len(parts) != 2 or n is None:
                    raise ValueError("expected 'u v'")
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError as e:
                raise InputError(f"Edge list line {lineno} is malformed: {raw!r} ({e})") from e
        if n is None:
            raise InputError("Edge list is missing its 'n <count>' header")
        return make_graph(n, edges)


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph; duplicate edges collapse, loops and bad vertices are rejected."""
    if n < 0:
        raise InputError(f"Vertex count must be non-negative, got {n}")
    adj = [0] * n
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"Edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise InputError(f"Loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def edgeless(n: int) -> Graph:
    return Graph(n, (0,) * n)
