from typing import List, Set
import logging

import numpy as np

from .graph_interface import Edge, Graph, GraphError

logger = logging.getLogger(__name__)

SEED_LIMIT = 2 ** 64


class GraphGenerationError(GraphError):
    pass


class RandomGraphBuilder:
    """Seeded builder for connected graphs with a minimum-degree floor.

    Each attempt grows a uniform random spanning tree with a random walk on the
    complete graph (Aldous-Broder), then adds uniformly random non-edges until
    every vertex has degree at least ``d``. An attempt that exhausts its draw
    budget is abandoned and the next attempt starts from scratch.
    """

    def __init__(self, seed: int, retry_attempts: int = 3, draw_factor: int = 50):
        if not 0 <= seed < SEED_LIMIT:
            raise GraphGenerationError(f"Seed must be a 64-bit unsigned integer, got {seed}")
        self.seed = seed
        self.retry_attempts = retry_attempts
        self.draw_factor = draw_factor
        self._rng = np.random.default_rng(seed)

    def build(self, n: int, d: int) -> Graph:
        if d < 0 or n < 1 or n < d + 1:
            raise GraphGenerationError(f"No simple graph on n={n} vertices has minimum degree d={d}")
        for attempt in range(self.retry_attempts):
            edges = self._attempt(n, d)
            if edges is not None:
                logger.debug("Built n=%d d=%d seed=%d on attempt %d", n, d, self.seed, attempt + 1)
                return Graph(n, edges)
            logger.warning("Draw budget exhausted for n=%d d=%d seed=%d (attempt %d)", n, d, self.seed, attempt + 1)
        raise GraphGenerationError(
            f"Failed to build n={n} d={d} seed={self.seed} after {self.retry_attempts} attempts"
        )

    def _other_vertex(self, n: int, u: int) -> int:
        v = int(self._rng.integers(n - 1))
        return v + 1 if v >= u else v

    def _attempt(self, n: int, d: int):
        edges: Set[Edge] = set()
        deg: List[int] = [0] * n

        def add(u: int, v: int) -> None:
            edges.add((u, v) if u < v else (v, u))
            deg[u] += 1
            deg[v] += 1

        current = int(self._rng.integers(n))
        visited = {current}
        while len(visited) < n:
            nxt = self._other_vertex(n, current)
            if nxt not in visited:
                visited.add(nxt)
                add(current, nxt)
            current = nxt

        deficient = sum(1 for x in deg if x < d)
        budget = self.draw_factor * n * n
        while deficient:
            if budget == 0:
                return None
            budget -= 1
            u = int(self._rng.integers(n))
            v = self._other_vertex(n, u)
            if ((u, v) if u < v else (v, u)) in edges:
                continue
            add(u, v)
            deficient -= (deg[u] == d) + (deg[v] == d)
        return edges


def random_connected_min_degree(n: int, d: int, seed: int) -> Graph:
    """Connected simple graph on n vertices with minimum degree >= d.

    Deterministic for a fixed ``(n, d, seed)``.
    """
    return RandomGraphBuilder(seed).build(n, d)
