from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple
import logging

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
VertexSet = FrozenSet[int]


class GraphError(ValueError):
    """Raised when a graph or vertex set breaks simplicity or range rules."""


class VertexRangeError(GraphError):
    pass


class PreconditionError(GraphError):
    """The graph is well formed but outside an operation's hypotheses."""


class DisconnectedGraphError(PreconditionError):
    pass


class EdgelessGraphError(PreconditionError):
    pass


class Bipartition(BaseModel):
    model_config = ConfigDict(frozen=True)

    side_a: Tuple[int, ...]
    side_b: Tuple[int, ...]


class Graph:
    """Undirected simple graph on the dense vertex ids 0..n-1.

    Instances are immutable: edges are normalized to ``(min, max)`` pairs and
    adjacency is built once at construction.
    """

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise GraphError(f"Vertex count must be nonnegative, got {n}")
        self._n = n
        normalized = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"Loop at vertex {u}")
            edge = (u, v) if u < v else (v, u)
            if edge in normalized:
                raise GraphError(f"Duplicate edge {edge}")
            normalized.add(edge)
        self._edges: Tuple[Edge, ...] = tuple(sorted(normalized))
        self._edge_set: FrozenSet[Edge] = frozenset(normalized)

        adjacency: List[List[int]] = [[] for _ in range(n)]
        for u, v in self._edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        self._adjacency: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adjacency)
        self._edge_arrays: Optional[Tuple[np.ndarray, np.ndarray]] = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Edges sorted by (min endpoint, max endpoint)."""
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def neighbors(self, v: int) -> Tuple[int, ...]:
        self._check_vertex(v)
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edge_arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        """Endpoint arrays ``(us, vs)`` used by the matrix-free operators."""
        if self._edge_arrays is None:
            if self._edges:
                arr = np.array(self._edges, dtype=np.int64)
                self._edge_arrays = (arr[:, 0].copy(), arr[:, 1].copy())
            else:
                empty = np.zeros(0, dtype=np.int64)
                self._edge_arrays = (empty, empty)
        return self._edge_arrays

    def to_networkx(self) -> nx.Graph:
        """networkx view with nodes 0..n-1, isolated vertices included."""
        h = nx.Graph()
        h.add_nodes_from(range(self._n))
        h.add_edges_from(self._edges)
        return h

    @classmethod
    def from_networkx(cls, h: nx.Graph) -> "Graph":
        """Relabel the nodes of ``h`` to 0..n-1 in sorted order."""
        mapping = {v: i for i, v in enumerate(sorted(h.nodes()))}
        return cls(len(mapping), ((mapping[u], mapping[v]) for u, v in h.edges()))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise VertexRangeError(f"Vertex {v} is outside 0..{self._n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edge_set == other._edge_set

    def __hash__(self) -> int:
        return hash((self._n, self._edge_set))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={len(self._edges)})"


def check_vertex_set(g: Graph, s: Iterable[int]) -> VertexSet:
    """Validate a vertex subset of ``g`` and return it as a frozenset."""
    members = list(s)
    result = frozenset(members)
    if len(result) != len(members):
        raise GraphError(f"Vertex set {sorted(members)} contains duplicates")
    for v in result:
        g._check_vertex(v)
    return result


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def min_degree(g: Graph) -> int:
    """Minimum degree; 0 for the graph with no vertices."""
    if g.n == 0:
        return 0
    return min(len(a) for a in g._adjacency)


def average_degree(g: Graph) -> float:
    return 2 * g.edge_count / g.n if g.n else 0.0


def components(g: Graph) -> List[VertexSet]:
    """Connected components, ordered by their smallest vertex."""
    return sorted((frozenset(c) for c in nx.connected_components(g.to_networkx())), key=min)


def is_connected(g: Graph) -> bool:
    # networkx rejects the null graph
    return g.n <= 1 or nx.is_connected(g.to_networkx())


def isolated_count(g: Graph) -> int:
    return sum(1 for a in g._adjacency if not a)


def isolated_vertices(g: Graph) -> VertexSet:
    return frozenset(v for v in range(g.n) if not g._adjacency[v])


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """Subgraph induced on ``keep``, relabeled 0.. in increasing original order.

    Returns the new graph and the map from original ids to new ids.
    """
    kept = sorted(check_vertex_set(g, keep))
    relabel = {v: i for i, v in enumerate(kept)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel]
    return Graph(len(kept), edges), relabel


def delete_vertices(g: Graph, s: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """G - S with order-preserving relabeling of the surviving vertices."""
    removed = check_vertex_set(g, s)
    return induced_subgraph(g, (v for v in range(g.n) if v not in removed))


def is_subgraph(h: Graph, g: Graph) -> bool:
    """True when ``h`` is a spanning subgraph of ``g`` (same vertices, edge subset)."""
    return h.n == g.n and h._edge_set <= g._edge_set


def two_coloring(g: Graph) -> Optional[List[int]]:
    """Proper 2-coloring of every component (color 0 on each component's least
    vertex), or None when an odd cycle exists."""
    h = g.to_networkx()
    try:
        raw = nx.bipartite.color(h)
    except nx.NetworkXError:
        logger.debug("%r has an odd cycle", g)
        return None
    color = [0] * g.n
    for component in nx.connected_components(h):
        flip = raw[min(component)]
        for v in component:
            color[v] = raw[v] ^ flip
    return color


def bipartition_of(g: Graph) -> Optional[Bipartition]:
    """Unique bipartition of a connected graph; side_a holds vertex 0."""
    if not is_connected(g):
        raise DisconnectedGraphError(f"{g!r} is disconnected; its bipartition is not unique")
    color = two_coloring(g)
    if color is None:
        return None
    return Bipartition(
        side_a=tuple(v for v in range(g.n) if color[v] == 0),
        side_b=tuple(v for v in range(g.n) if color[v] == 1),
    )


def bipartite_double_cover(g: Graph) -> Graph:
    """Cover on 2n vertices: v -> v (copy 0) and n + v (copy 1).

    Each edge {u, v} becomes {u, n + v} and {v, n + u}.
    """
    n = g.n
    edges = []
    for u, v in g.edges:
        edges.append((u, n + v))
        edges.append((v, n + u))
    return Graph(2 * n, edges)
