"""Exhaustive deficiency oracle for the fractional Berge-Tutte formula.

For a vertex set S, ``def*(S) = i(G - S) - |S|`` where ``i`` counts isolated
vertices. Subsets are bitmasks (bit v set when v is in S) and every subset is
evaluated at once with numpy: v is isolated in G - S exactly when v is outside
S and its whole neighbourhood lies inside S.
"""
from typing import Tuple
import logging

import numpy as np
from pydantic import BaseModel, ConfigDict

from config import BRUTE_FORCE_CAP
from graph_core.graph_interface import Graph
from .fractional import fractional_matching_number

logger = logging.getLogger(__name__)


class GraphTooLargeError(ValueError):
    pass


class DeficiencyWitness(BaseModel):
    model_config = ConfigDict(frozen=True)

    s: Tuple[int, ...]
    isolated: int
    deficiency: int


def _subset_tables(g: Graph, size_cap: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(isolated, sizes, reversed_masks)`` indexed by subset bitmask.

    ``reversed_masks`` puts vertex 0 in the highest bit, so among equal-size
    subsets the largest value is the lexicographically smallest sorted set.
    """
    n = g.n
    if n > size_cap:
        raise GraphTooLargeError(f"Exhaustive enumeration is capped at {size_cap} vertices, graph has {n}")
    masks = np.arange(1 << n, dtype=np.int64)
    isolated = np.zeros(1 << n, dtype=np.int64)
    sizes = np.zeros(1 << n, dtype=np.int64)
    reversed_masks = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        nbr = 0
        for w in g.neighbors(v):
            nbr |= 1 << w
        in_s = (masks >> v) & 1
        isolated += (in_s == 0) & ((masks & nbr) == nbr)
        sizes += in_s
        reversed_masks |= in_s << (n - 1 - v)
    return isolated, sizes, reversed_masks


def subset_deficiencies(g: Graph, size_cap: int = BRUTE_FORCE_CAP) -> np.ndarray:
    """def*(S) for every subset S, indexed by bitmask."""
    isolated, sizes, _ = _subset_tables(g, size_cap)
    return isolated - sizes


def max_deficiency_bruteforce(g: Graph, size_cap: int = BRUTE_FORCE_CAP) -> DeficiencyWitness:
    """Subset maximizing def*(S); ties go to smaller |S|, then the
    lexicographically smallest sorted S."""
    isolated, sizes, reversed_masks = _subset_tables(g, size_cap)
    deficiency = isolated - sizes
    candidates = np.flatnonzero(deficiency == deficiency.max())
    candidates = candidates[sizes[candidates] == sizes[candidates].min()]
    best = int(candidates[np.argmax(reversed_masks[candidates])])
    logger.debug("Max deficiency %d over %d subsets", int(deficiency[best]), 1 << g.n)
    return DeficiencyWitness(
        s=tuple(v for v in range(g.n) if best >> v & 1),
        isolated=int(isolated[best]),
        deficiency=int(deficiency[best]),
    )


def berge_tutte_crosscheck(g: Graph, size_cap: int = BRUTE_FORCE_CAP) -> bool:
    """Whether alpha*_f = (n - def*(G)) / 2, compared in half-units."""
    witness = max_deficiency_bruteforce(g, size_cap)
    _, cert = fractional_matching_number(g)
    return cert.total == g.n - witness.deficiency


def fractional_tutte_condition(g: Graph, size_cap: int = BRUTE_FORCE_CAP) -> bool:
    """Whether i(G - S) <= |S| for every S."""
    return bool(subset_deficiencies(g, size_cap).max() <= 0)
