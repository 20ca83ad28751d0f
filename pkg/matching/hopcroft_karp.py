from collections import deque
from typing import Deque, Dict, FrozenSet, Generic, Hashable, List, Tuple, TypeVar

from graph_core.graph_interface import Edge, Graph, two_coloring

THLeft = TypeVar('THLeft', bound=Hashable)
THRight = TypeVar('THRight', bound=Hashable)

FAKE_INFINITY = -1


class NotBipartiteError(ValueError):
    pass


class HopcroftKarp(Generic[THLeft, THRight]):
    """Hopcroft-Karp maximum matching on a bipartite graph given as a map
    from left vertices to their right neighbours.

    Augmenting paths are searched with an explicit stack and a per-phase
    current-arc pointer, so path length is not limited by the recursion limit.
    Iteration follows list order only, which keeps results reproducible.
    """

    def __init__(self, graph_left: Dict[THLeft, List[THRight]]):
        self._graph_left = graph_left
        self._left: List[THLeft] = list(graph_left.keys())
        self._pair_left: Dict[THLeft, THRight] = {}
        self._pair_right: Dict[THRight, THLeft] = {}
        self._dist_left: Dict[THLeft, int] = {}
        self._next_arc: Dict[THLeft, int] = {}
        self._reference_distance = FAKE_INFINITY

    def get_maximum_matching(self) -> Dict[THLeft, THRight]:
        return self.get_maximum_matching_num()[1]

    def get_maximum_matching_num(self) -> Tuple[int, Dict[THLeft, THRight]]:
        """Size of a maximum matching and the matching itself (left -> right)."""
        self._pair_left.clear()
        self._pair_right.clear()
        matchings = 0
        while self._bfs():
            self._next_arc = {left: 0 for left in self._left}
            for left in self._left:
                if left not in self._pair_left and self._augment(left):
                    matchings += 1
        return matchings, dict(self._pair_left)

    def _bfs(self) -> bool:
        queue: Deque[THLeft] = deque()
        for left in self._left:
            if left not in self._pair_left:
                self._dist_left[left] = 0
                queue.append(left)
            else:
                self._dist_left[left] = FAKE_INFINITY
        self._reference_distance = FAKE_INFINITY
        while queue:
            left = queue.popleft()
            if self._reference_distance != FAKE_INFINITY and self._dist_left[left] >= self._reference_distance:
                continue
            for right in self._graph_left[left]:
                if right not in self._pair_right:
                    if self._reference_distance == FAKE_INFINITY:
                        self._reference_distance = self._dist_left[left] + 1
                else:
                    other_left = self._pair_right[right]
                    if self._dist_left[other_left] == FAKE_INFINITY:
                        self._dist_left[other_left] = self._dist_left[left] + 1
                        queue.append(other_left)
        return self._reference_distance != FAKE_INFINITY

    def _augment(self, root: THLeft) -> bool:
        stack: List[THLeft] = [root]
        rights: List[THRight] = []
        while stack:
            left = stack[-1]
            adjacent = self._graph_left[left]
            descended = False
            while self._next_arc[left] < len(adjacent):
                right = adjacent[self._next_arc[left]]
                self._next_arc[left] += 1
                if right not in self._pair_right:
                    if self._reference_distance == self._dist_left[left] + 1:
                        rights.append(right)
                        for l, r in zip(stack, rights):
                            self._pair_left[l] = r
                            self._pair_right[r] = l
                        return True
                else:
                    other_left = self._pair_right[right]
                    if self._dist_left[other_left] == self._dist_left[left] + 1:
                        rights.append(right)
                        stack.append(other_left)
                        descended = True
                        break
            if not descended:
                self._dist_left[left] = FAKE_INFINITY
                stack.pop()
                if rights:
                    rights.pop()
        return False


def max_matching_bipartite(g: Graph) -> Tuple[int, FrozenSet[Edge]]:
    """Maximum matching of a bipartite graph (any number of components)."""
    color = two_coloring(g)
    if color is None:
        raise NotBipartiteError(f"{g!r} contains an odd cycle")
    graph_left = {u: list(g.neighbors(u)) for u in range(g.n) if color[u] == 0}
    size, pairs = HopcroftKarp(graph_left).get_maximum_matching_num()
    return size, frozenset((min(u, v), max(u, v)) for u, v in pairs.items())
