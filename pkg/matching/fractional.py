from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from graph_core.graph_interface import Edge, Graph, bipartite_double_cover
from .hopcroft_karp import max_matching_bipartite


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class HalfIntegralMatching:
    """Fractional matching with weights in {0, 1/2, 1}, held as half-units 0, 1, 2.

    ``weights`` has an entry for every edge of the graph it certifies.
    """

    weights: Dict[Edge, int]
    total: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.total, 2)

    def loads(self, n: int) -> List[int]:
        """Half-unit load at every vertex."""
        load = [0] * n
        for (u, v), w in self.weights.items():
            load[u] += w
            load[v] += w
        return load

    def rows(self) -> List[Tuple[int, int, int]]:
        """``(u, v, half_units)`` rows for the nonzero edges, sorted."""
        return [(u, v, w) for (u, v), w in sorted(self.weights.items()) if w]


def validate_certificate(g: Graph, cert: HalfIntegralMatching) -> None:
    if set(cert.weights) != set(g.edges):
        raise CertificateError("Certificate edges do not match the graph's edges")
    bad = {e: w for e, w in cert.weights.items() if w not in (0, 1, 2)}
    if bad:
        raise CertificateError(f"Weights outside {{0, 1/2, 1}}: {bad}")
    overloaded = [v for v, load in enumerate(cert.loads(g.n)) if load > 2]
    if overloaded:
        raise CertificateError(f"Vertices {overloaded} carry more than weight 1")
    if sum(cert.weights.values()) != cert.total:
        raise CertificateError(f"Declared total {cert.total} half-units differs from the weight sum")


def fractional_matching_number(g: Graph) -> Tuple[Fraction, HalfIntegralMatching]:
    """Exact fractional matching number with a half-integral certificate.

    Half the maximum matching of the bipartite double cover. Folding the cover
    matching back gives each edge one half-unit per matched copy.
    """
    n = g.n
    size, matched = max_matching_bipartite(bipartite_double_cover(g))
    weights = {e: 0 for e in g.edges}
    for u, w in matched:
        # cover edges join u (copy 0) to n + v (copy 1)
        a, b = u, w - n
        weights[(a, b) if a < b else (b, a)] += 1
    cert = HalfIntegralMatching(weights=weights, total=size)
    validate_certificate(g, cert)
    return cert.value, cert


def has_fractional_perfect_matching(g: Graph) -> bool:
    return fractional_matching_number(g)[1].total == g.n
