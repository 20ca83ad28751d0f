"""Generators for the extremal bipartite family and its closed-form values.

A member has a bipartition (A, B) with every A-vertex of degree d, all
B-vertices of one common degree, and |A| = |B| + k.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional
import math

from config import MAX_VERTICES
from graph_core.graph_interface import Edge, Graph


class FamilyParameterError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyParams:
    """``d`` is the A-side degree and ``k`` the side-size gap; ring members also
    carry the per-block surplus ``m`` and block count ``c`` with k = m * c."""

    d: int
    k: int
    m: Optional[int] = None
    c: Optional[int] = None

    def __post_init__(self):
        if self.d < 1:
            raise FamilyParameterError(f"d must be positive, got {self.d}")
        if self.k < 0:
            raise FamilyParameterError(f"k must be nonnegative, got {self.k}")
        if (self.m is None) != (self.c is None):
            raise FamilyParameterError("Ring parameters m and c must be given together")
        if self.m is not None and (self.m < 1 or self.c < 1 or self.m * self.c != self.k):
            raise FamilyParameterError(f"Ring parameters need m, c >= 1 and m * c = k, got m={self.m} c={self.c} k={self.k}")

    @classmethod
    def ring(cls, d: int, m: int, c: int) -> "FamilyParams":
        return cls(d=d, k=m * c, m=m, c=c)


def gen_complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the a-side on vertices 0..a-1."""
    if a < 1 or b < 1:
        raise FamilyParameterError(f"Both sides must be nonempty, got a={a} b={b}")
    if a + b > MAX_VERTICES:
        raise FamilyParameterError(f"K_{{{a},{b}}} exceeds {MAX_VERTICES} vertices")
    return Graph(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def gen_ring_blocks(d: int, m: int, c: int) -> Graph:
    """Ring of ``c`` blocks K_{d,d+m}, each missing one edge, relinked in a cycle.

    Block i occupies ``(2d + m)`` consecutive vertices: X_i (size d) then Y_i
    (size d + m). The edge between the first vertices of X_i and Y_i is removed
    and the first vertex of Y_i is joined to the first vertex of X_{i+1 mod c}.
    The Y-vertices form the degree-d side and the X-vertices have degree d + m.
    """
    if m < 1 or c < 1:
        raise FamilyParameterError(f"Need m >= 1 and c >= 1, got m={m} c={c}")
    if d < 1 or (d < 2 and c >= 2):
        raise FamilyParameterError(f"Need d >= 2 for a ring of {c} blocks, got d={d}")
    block = 2 * d + m
    if block * c > MAX_VERTICES:
        raise FamilyParameterError(f"Ring with d={d} m={m} c={c} exceeds {MAX_VERTICES} vertices")

    edges: List[Edge] = []
    for i in range(c):
        x0, y0 = i * block, i * block + d
        for x in range(x0, x0 + d):
            for y in range(y0, y0 + d + m):
                if (x, y) != (x0, y0):
                    edges.append((x, y))
    for i in range(c):
        edges.append((i * block + d, ((i + 1) % c) * block))
    return Graph(block * c, edges)


def expected_fractional_matching(params: FamilyParams, n: int) -> Fraction:
    if n <= params.k or (n - params.k) % 2:
        raise FamilyParameterError(f"n - k must be positive and even, got n={n} k={params.k}")
    return Fraction(n - params.k, 2)


def lemma_threshold(d: float, n: int, k: float) -> float:
    """d * sqrt(1 + 2k / (n - k)) for real 0 <= k < n."""
    if not 0 <= k < n:
        raise FamilyParameterError(f"Need 0 <= k < n, got k={k} n={n}")
    return d * math.sqrt(1 + 2 * k / (n - k))


def expected_lambda1(params: FamilyParams, n: int) -> float:
    if n <= params.k:
        raise FamilyParameterError(f"Need n > k, got n={n} k={params.k}")
    return lemma_threshold(params.d, n, params.k)
