from typing import Callable, Iterable, Union
import logging

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from config import DEFAULT_TOL, MAX_ITERATIONS
from graph_core.graph_interface import Graph, components, induced_subgraph, is_subgraph

logger = logging.getLogger(__name__)

Operator = Callable[[np.ndarray], np.ndarray]


class ConvergenceError(RuntimeError):
    pass


class NotASubgraphError(ValueError):
    pass


class SpectralEstimate(BaseModel):
    """Estimate of the largest eigenvalue with a certified error bound.

    The true value lies in ``[value, value + residual]``.
    """
    model_config = ConfigDict(frozen=True)

    value: float
    residual: float = Field(ge=0)
    iterations: int = Field(ge=0)


def adjacency_operator(g: Graph) -> Operator:
    """Matrix-free ``x -> A x`` on the graph's edge arrays."""
    us, vs = g.edge_arrays()
    n = g.n

    def apply(x: np.ndarray) -> np.ndarray:
        return (np.bincount(us, weights=x[vs], minlength=n)
                + np.bincount(vs, weights=x[us], minlength=n))

    return apply


def certified_power_iteration(apply: Operator, size: int, tol: float = DEFAULT_TOL,
                              max_iterations: int = MAX_ITERATIONS) -> SpectralEstimate:
    """Largest eigenvalue of a symmetric nonnegative operator.

    Iterates on the shifted operator ``M + I`` from the all-ones vector. Each
    step brackets the top eigenvalue of ``M + I`` between the Rayleigh quotient
    and the largest entrywise ratio ``(M + I)x / x`` (Collatz-Wielandt); the
    iteration stops once the bracket is no wider than ``tol``.
    """
    if tol <= 0:
        raise ValueError(f"Tolerance must be positive, got {tol}")
    x = np.ones(size)
    for iteration in range(1, max_iterations + 1):
        y = apply(x) + x
        lower = float(x @ y) / float(x @ x)
        positive = x > 0
        upper = float(np.max(y[positive] / x[positive]))
        width = upper - lower
        if width <= tol:
            logger.debug("Converged after %d iterations (bracket %.3e)", iteration, width)
            return SpectralEstimate(value=lower - 1.0, residual=max(width, 0.0), iterations=iteration)
        x = y / np.max(y)
    raise ConvergenceError(
        f"Power iteration did not reach tolerance {tol} within {max_iterations} iterations"
    )


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL,
                    max_iterations: int = MAX_ITERATIONS) -> SpectralEstimate:
    """Largest adjacency eigenvalue, the maximum over connected components.

    Edgeless graphs return exactly 0 with residual 0.
    """
    if g.edge_count == 0:
        return SpectralEstimate(value=0.0, residual=0.0, iterations=0)

    parts = [c for c in components(g) if len(c) > 1]
    if len(parts) == 1 and len(parts[0]) == g.n:
        return certified_power_iteration(adjacency_operator(g), g.n, tol, max_iterations)

    estimates = []
    for part in parts:
        sub, _ = induced_subgraph(g, part)
        estimates.append(certified_power_iteration(adjacency_operator(sub), sub.n, tol, max_iterations))
    return SpectralEstimate(
        value=max(e.value for e in estimates),
        residual=max(e.residual for e in estimates),
        iterations=sum(e.iterations for e in estimates),
    )


def check_monotonicity(g: Graph, h: Union[Graph, Iterable[int]], tol: float = DEFAULT_TOL) -> bool:
    """Whether lambda_1(h) <= lambda_1(g) + 2 tol.

    ``h`` is either a spanning subgraph of ``g`` or a vertex set whose induced
    subgraph is compared.
    """
    if isinstance(h, Graph):
        if not is_subgraph(h, g):
            raise NotASubgraphError(f"{h!r} is not a spanning subgraph of {g!r}")
        sub = h
    else:
        sub, _ = induced_subgraph(g, h)
    return spectral_radius(sub, tol).value <= spectral_radius(g, tol).value + 2 * tol
