import logging
from typing import Callable, List, Optional, Sequence, Tuple

from networkx.utils import UnionFind

from src.complexes.degree import DegreeBound
from src.graphs.graph import Graph, VertexSet, iter_members, members
from src.graphs.operations import induced_subgraph
from src.utils.errors import InputError

logger = logging.getLogger(__name__)

# visit(face, size, components, degrees); degrees is shared scratch, read it before returning.
Visitor = Callable[[VertexSet, int, List[VertexSet], List[int]], None]


def induced_forest_check(g: Graph, s: VertexSet, d: DegreeBound) -> bool:
    """True iff G[S] is acyclic and every vertex of G[S] has degree at most d."""
    if s & ~g.full:
        raise InputError(f"Vertex set {members(s)} is not contained in 0..{g.n - 1}")
    trees = UnionFind()
    for v in iter_members(s):
        inside = g.adj[v] & s
        if not d.allows(inside.bit_count()):
            return False
        trees[v]
        for w in iter_members(inside >> (v + 1) << (v + 1)):
            if trees[v] == trees[w]:
                return False
            trees.union(v, w)
    return True


class ForestSearch:
    """Depth-first walk over the induced d-forests of a graph.

    Faces are grown one vertex at a time in increasing label order, carrying the
    component bitsets and internal degrees of the current forest so that each
    extension is checked against the new vertex's neighborhood only. Preorder with
    increasing labels visits faces in lexicographic order of their sorted tuples.
    """

    def __init__(self, g: Graph, d: DegreeBound):
        self.g = g
        self.d = d
        self.cap = d.cap

    def admit(self, v: int, s: VertexSet, comps: Sequence[VertexSet],
              deg: Sequence[int]) -> Optional[Tuple[VertexSet, List[int]]]:
        """Neighbors of v in S and indices of touched components, or None if S+v breaks the rules."""
        nbrs = self.g.adj[v] & s
        if not nbrs:
            return nbrs, []
        if self.cap is not None:
            if nbrs.bit_count() > self.cap:
                return None
            for w in iter_members(nbrs):
                if deg[w] >= self.cap:
                    return None
        touched = []
        for idx, comp in enumerate(comps):
            common = comp & nbrs
            if common:
                # two neighbors inside one tree close a cycle through v
                if common & (common - 1):
                    return None
                touched.append(idx)
        return nbrs, touched

    def is_maximal(self, s: VertexSet, comps: Sequence[VertexSet], deg: Sequence[int]) -> bool:
        for u in iter_members(self.g.full & ~s):
            if self.admit(u, s, comps, deg) is not None:
                return False
        return True

    def walk(self, visit: Visitor, max_size: int, first: Optional[int] = None) -> None:
        """Visit every nonempty face of size <= max_size; `first` pins the smallest vertex."""
        deg = [0] * self.g.n
        if first is None:
            self._extend(0, 0, [], deg, 0, max_size, visit)
        elif max_size >= 1:
            if not 0 <= first < self.g.n:
                raise InputError(f"Leading vertex {first} out of range 0..{self.g.n - 1}")
            self._descend(first, 0, [], deg, 0, max_size, visit, (0, []))

    def _extend(self, start, s, comps, deg, size, max_size, visit):
        for v in range(start, self.g.n):
            admitted = self.admit(v, s, comps, deg)
            if admitted is not None:
                self._descend(v, s, comps, deg, size, max_size, visit, admitted)

    def _descend(self, v, s, comps, deg, size, max_size, visit, admitted):
        nbrs, touched = admitted
        merged = 1 << v
        for idx in touched:
            merged |= comps[idx]
        new_comps = [comp for idx, comp in enumerate(comps) if idx not in touched]
        new_comps.append(merged)
        for w in iter_members(nbrs):
            deg[w] += 1
        deg[v] = nbrs.bit_count()
        face = s | (1 << v)
        visit(face, size + 1, new_comps, deg)
        if size + 1 < max_size:
            self._extend(v + 1, face, new_comps, deg, size + 1, max_size, visit)
        for w in iter_members(nbrs):
            deg[w] -= 1
        deg[v] = 0

    def largest_size(self) -> int:
        """Size of the largest induced d-forest (t_d(G))."""
        best = [0]

        def visit(face, size, comps, deg):
            if size > best[0]:
                best[0] = size

        self.walk(visit, self.g.n)
        return best[0]


def star_free_bound(g: Graph) -> int:
    """min{r : G has no induced K_{1,r}}, i.e. one more than the largest independent set inside a neighborhood."""
    widest = 0
    for v in range(g.n):
        if g.adj[v]:
            widest = max(widest, ForestSearch(induced_subgraph(g, g.adj[v]), DegreeBound(0)).largest_size())
    return widest + 1
