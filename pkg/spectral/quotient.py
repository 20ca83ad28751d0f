from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple
import math

import numpy as np

from config import DEFAULT_TOL
from graph_core.graph_interface import Graph
from .power_iteration import SpectralEstimate, certified_power_iteration


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class QuotientMatrix:
    """Average neighbour counts ``b[i][j]`` between the cells of a partition."""

    entries: Tuple[Tuple[Fraction, ...], ...]
    cell_sizes: Tuple[int, ...]

    def __post_init__(self):
        s = len(self.cell_sizes)
        if len(self.entries) != s or any(len(row) != s for row in self.entries):
            raise PartitionError(f"Quotient entries must form a {s}x{s} matrix")
        for i in range(s):
            if self.entries[i][i] > self.cell_sizes[i] - 1:
                raise PartitionError(f"Diagonal entry {self.entries[i][i]} exceeds cell size {self.cell_sizes[i]} - 1")
            for j in range(s):
                if self.entries[i][j] < 0:
                    raise PartitionError(f"Negative quotient entry at ({i}, {j})")
                if self.entries[i][j] * self.cell_sizes[i] != self.entries[j][i] * self.cell_sizes[j]:
                    raise PartitionError(f"Cells {i} and {j} disagree on the number of edges between them")

    @property
    def size(self) -> int:
        return len(self.cell_sizes)

    def as_lists(self) -> List[List[Fraction]]:
        return [list(row) for row in self.entries]


def _cell_index(g: Graph, cells: Sequence[Iterable[int]]) -> List[int]:
    index = [-1] * g.n
    for i, cell in enumerate(cells):
        members = list(cell)
        if not members:
            raise PartitionError(f"Cell {i} is empty")
        for v in members:
            if not 0 <= v < g.n:
                raise PartitionError(f"Cell {i} contains vertex {v} outside 0..{g.n - 1}")
            if index[v] != -1:
                raise PartitionError(f"Vertex {v} appears in cells {index[v]} and {i}")
            index[v] = i
    missing = [v for v in range(g.n) if index[v] == -1]
    if missing:
        raise PartitionError(f"Vertices {missing} are not covered by any cell")
    return index


def _neighbour_counts(g: Graph, index: List[int], s: int) -> List[List[int]]:
    """Per-vertex count of neighbours in each cell."""
    counts = [[0] * s for _ in range(g.n)]
    for u, v in g.edges:
        counts[u][index[v]] += 1
        counts[v][index[u]] += 1
    return counts


def quotient_matrix(g: Graph, cells: Sequence[Iterable[int]]) -> QuotientMatrix:
    cells = [list(c) for c in cells]
    index = _cell_index(g, cells)
    s = len(cells)
    totals = [[0] * s for _ in range(s)]
    for v, row in enumerate(_neighbour_counts(g, index, s)):
        for j, c in enumerate(row):
            totals[index[v]][j] += c
    sizes = tuple(len(c) for c in cells)
    entries = tuple(tuple(Fraction(totals[i][j], sizes[i]) for j in range(s)) for i in range(s))
    return QuotientMatrix(entries=entries, cell_sizes=sizes)


def quotient_lambda1(q: QuotientMatrix, tol: float = DEFAULT_TOL) -> SpectralEstimate:
    """Largest eigenvalue of the quotient matrix.

    Closed forms for the 1x1 and the 2x2 anti-diagonal cases (residual 0);
    otherwise the certified iteration on ``D^1/2 B D^-1/2`` (D = diag of cell
    sizes), which is symmetric and shares the eigenvalues of B.
    """
    b = q.entries
    if q.size == 1:
        return SpectralEstimate(value=float(b[0][0]), residual=0.0, iterations=0)
    if q.size == 2 and b[0][0] == 0 and b[1][1] == 0:
        return SpectralEstimate(value=math.sqrt(b[0][1] * b[1][0]), residual=0.0, iterations=0)

    sizes = np.array(q.cell_sizes, dtype=float)
    edge_counts = np.array([[float(b[i][j] * q.cell_sizes[i]) for j in range(q.size)] for i in range(q.size)])
    sym = edge_counts / np.sqrt(np.outer(sizes, sizes))
    if not sym.any():
        return SpectralEstimate(value=0.0, residual=0.0, iterations=0)
    return certified_power_iteration(lambda x: sym @ x, q.size, tol)


def is_equitable(g: Graph, cells: Sequence[Iterable[int]]) -> bool:
    cells = [list(c) for c in cells]
    index = _cell_index(g, cells)
    counts = _neighbour_counts(g, index, len(cells))
    return all(counts[v] == counts[cell[0]] for cell in cells for v in cell)
