import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from src.complexes.degree import DegreeBound
from src.complexes.forest import forest_faces
from src.config import settings
from src.graphs.graph import Graph, VertexSet, iter_members
from src.utils.errors import CapacityError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundaryMatrix:
    """d_q : C_q -> C_{q-1} in sparse column form; columns[j] maps row index -> +-1."""
    q: int
    n_rows: int
    n_cols: int
    columns: Tuple[Dict[int, int], ...]

    @property
    def nnz(self) -> int:
        return sum(len(column) for column in self.columns)

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.n_rows, self.n_cols), dtype=np.int64)
        for c, column in enumerate(self.columns):
            for r, value in column.items():
                dense[r, c] = value
        return dense

    def triplets(self) -> List[Tuple[int, int, int]]:
        """(row, col, value) sorted by column then row."""
        return [(r, c, v) for c, column in enumerate(self.columns) for r, v in sorted(column.items())]


def build_boundary(row_faces: Sequence[VertexSet], col_faces: Sequence[VertexSet], q: int) -> BoundaryMatrix:
    """Signed boundary from q-faces to (q-1)-faces: dropping the i-th smallest vertex carries (-1)^i.

    Codimension-one faces missing from row_faces are dropped, which is exactly the
    relative (quotient) boundary when row_faces excludes a subcomplex.
    """
    position = {face: i for i, face in enumerate(row_faces)}
    limit = settings.budget.max_matrix_entries
    columns = []
    entries = 0
    for face in col_faces:
        column = {}
        for i, v in enumerate(iter_members(face)):
            row = position.get(face ^ (1 << v))
            if row is not None:
                column[row] = -1 if i % 2 else 1
        entries += len(column)
        columns.append(column)
        if limit and entries > limit:
            raise CapacityError(f"Boundary d_{q} exceeds {limit} nonzero entries", limit=limit, observed=entries)
    return BoundaryMatrix(q, len(row_faces), len(col_faces), tuple(columns))


def boundary_matrix(g: Graph, d: DegreeBound, q: int) -> BoundaryMatrix:
    """d_q of the augmented chain complex of F_d(G)."""
    faces = forest_faces(g, d, [q, q + 1])
    return build_boundary(faces.get(q, []), faces.get(q + 1, []), q)


def chain_boundaries(faces: Dict[int, List[VertexSet]]) -> List[BoundaryMatrix]:
    """Every d_q with both sides nonempty, from faces keyed by dimension (q = -1 is the empty face)."""
    return [build_boundary(faces[q - 1], faces[q], q)
            for q in sorted(faces) if faces.get(q) and faces.get(q - 1)]


def export_triplets(matrix: BoundaryMatrix) -> str:
    """Sparse text: a 'rows cols nnz' header, then one 'i j v' line per nonzero entry."""
    lines = [f"{matrix.n_rows} {matrix.n_cols} {matrix.nnz}"]
    lines.extend(f"{r} {c} {v}" for r, c, v in matrix.triplets())
    return "\n".join(lines) + "\n"
