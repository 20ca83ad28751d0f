"""Checkers for the spectral lower bound on the fractional matching number.

For a connected graph with n vertices, minimum degree d and spectral radius
lambda:

* bound:      alpha*_f >= n d^2 / (lambda^2 + d^2)
* lemma:      lambda < d sqrt(1 + 2k/(n-k))  implies  alpha*_f > (n-k)/2
* equality:   holds exactly for the extremal bipartite family with
              k = n (lambda^2 - d^2) / (lambda^2 + d^2) a positive integer.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterable, Optional, Tuple
import logging
import math

import numpy as np

from config import BRUTE_FORCE_CAP, DEFAULT_TOL, EQUALITY_TOL, INTEGRALITY_TOL
from families.construction import lemma_threshold
from families.membership import membership_report
from graph_core.graph_interface import (
    DisconnectedGraphError,
    EdgelessGraphError,
    Graph,
    check_vertex_set,
    delete_vertices,
    induced_subgraph,
    is_connected,
    isolated_vertices,
    min_degree,
)
from matching.deficiency import berge_tutte_crosscheck
from matching.fractional import fractional_matching_number
from spectral.power_iteration import spectral_radius
from spectral.quotient import quotient_lambda1, quotient_matrix
from .reports import VerificationReport, VerifyReport

logger = logging.getLogger(__name__)

ReportHook = Callable[[VerificationReport], VerificationReport]


class EmptyWitnessError(ValueError):
    pass


class EqualityOutcome(str, Enum):
    HOLDS = "holds"
    NOT_EQUAL = "not equal"
    REGULAR_ANOMALY = "regular-case anomaly"
    FAILED = "failed"


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(f"{g!r} is disconnected")
    if g.edge_count == 0:
        raise EdgelessGraphError(f"{g!r} has no edges")


def bound_allowance(n: int, d: int, lam: float, residual: float, tol: float) -> float:
    """Tolerance on the bound, widened by the spectral residual times
    |d bound / d lambda| = 2 n lambda d^2 / (lambda^2 + d^2)^2."""
    return tol + 2 * n * lam * d * d / (lam * lam + d * d) ** 2 * residual


def bound_violated(report: VerificationReport, tol: float = DEFAULT_TOL) -> bool:
    """Recompute the bound from the report's own fields and compare."""
    lam, d, n = report.lambda1.value, report.d, report.n
    bound = n * d * d / (lam * lam + d * d)
    allowance = bound_allowance(n, d, lam, report.lambda1.residual, tol)
    return report.alpha_f_half_units / 2 < bound - allowance


def check_theorem_bound(g: Graph, tol: float = DEFAULT_TOL,
                        equality_tol: float = EQUALITY_TOL) -> VerificationReport:
    _require_connected(g)
    n, d = g.n, min_degree(g)
    estimate = spectral_radius(g, tol)
    lam = estimate.value
    _, cert = fractional_matching_number(g)

    denominator = lam * lam + d * d
    bound = n * d * d / denominator
    slack = cert.total / 2 - bound
    report = VerificationReport(
        n=n,
        d=d,
        lambda1=estimate,
        alpha_f_half_units=cert.total,
        bound=bound,
        slack=slack,
        k_star=n * (lam * lam - d * d) / denominator,
        equality_flag=slack <= equality_tol,
        membership=membership_report(g),
        regular_case=abs(lam - d) <= equality_tol,
        certificate=cert.rows(),
    )
    return report.model_copy(update={"violation": bound_violated(report, tol)})


def lemma_contrapositive_gap(report: VerificationReport) -> float:
    """lambda minus the lemma threshold at the tight k = n - 2 alpha*_f.

    A report claiming alpha*_f = 0 has no admissible k and gives -inf.
    """
    k = report.n - report.alpha_f_half_units
    if not 0 <= k < report.n:
        return -math.inf
    return report.lambda1.value - lemma_threshold(report.d, report.n, k)


def lemma_contrapositive_holds(report: VerificationReport, tol: float = DEFAULT_TOL) -> bool:
    return lemma_contrapositive_gap(report) + report.lambda1.residual >= -tol


def check_lemma_contrapositive(g: Graph, tol: float = DEFAULT_TOL) -> bool:
    """With k = n - 2 alpha*_f, alpha*_f <= (n-k)/2 holds with equality, so the
    lemma forces lambda >= d sqrt(1 + 2k/(n-k))."""
    return lemma_contrapositive_holds(check_theorem_bound(g, tol), tol)


def lemma_sweep_holds(report: VerificationReport, samples: int = 64, tol: float = DEFAULT_TOL) -> bool:
    n, d = report.n, report.d
    upper = report.lambda1.value + report.lambda1.residual
    for k in np.linspace(0.0, n, samples, endpoint=False):
        if upper < lemma_threshold(d, n, float(k)) - tol and not report.alpha_f_half_units > n - k - 1e-9:
            logger.warning("Lemma fails at k=%.6f: lambda=%.12f alpha=%d/2", k, upper, report.alpha_f_half_units)
            return False
    return True


def check_lemma_sweep(g: Graph, tol: float = DEFAULT_TOL, samples: int = 64) -> bool:
    """The lemma at a grid of real k in [0, n)."""
    return lemma_sweep_holds(check_theorem_bound(g, tol), samples, tol)


@dataclass(frozen=True)
class WitnessChain:
    """Values along lambda(G) >= lambda(H) >= a/sqrt(st) >= d sqrt(t/s)
    >= d sqrt(1 + 2k/(n-k)), where H keeps the edges between S and the
    vertices T isolated in G - S, a = |E(H)| and k = t - s."""

    s: Tuple[int, ...]
    t: Tuple[int, ...]
    a: int
    d: int
    n: int
    lambda_g: float
    lambda_h: float
    quotient_value: float
    degree_value: float
    continuation_value: Optional[float]
    links: Dict[str, bool] = field(default_factory=dict)
    gaps: Dict[str, float] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(self.links.values())


def witness_chain(g: Graph, s: Iterable[int], tol: float = DEFAULT_TOL) -> WitnessChain:
    removed = check_vertex_set(g, s)
    if not removed:
        raise EmptyWitnessError("The witness set S is empty")
    remainder, relabel = delete_vertices(g, removed)
    original = {new: old for old, new in relabel.items()}
    isolated = frozenset(original[v] for v in isolated_vertices(remainder))
    if not isolated:
        raise EmptyWitnessError(f"No vertex is isolated in G - S for S={sorted(removed)}")

    h = Graph(g.n, [(u, v) for u, v in g.edges if u in isolated or v in isolated])
    s_sorted, t_sorted = tuple(sorted(removed)), tuple(sorted(isolated))
    s_size, t_size, a, d, n = len(s_sorted), len(t_sorted), h.edge_count, min_degree(g), g.n

    est_g, est_h = spectral_radius(g, tol), spectral_radius(h, tol)
    between, index = induced_subgraph(h, removed | isolated)
    est_q = quotient_lambda1(quotient_matrix(
        between, [[index[v] for v in s_sorted], [index[v] for v in t_sorted]]), tol)
    quotient_value = est_q.value
    degree_value = d * math.sqrt(t_size / s_size)
    k = t_size - s_size
    continuation = lemma_threshold(d, n, k) if k >= 0 else None

    gaps = {
        "interlacing": est_g.value - est_h.value,
        "quotient": est_h.value - quotient_value,
        "degree": quotient_value - degree_value,
    }
    links = {
        "interlacing": est_h.value <= est_g.value + est_g.residual + tol,
        "quotient": est_h.value + est_h.residual + est_q.residual >= quotient_value - tol,
        "witness size": s_size >= d,
        "degree": a >= d * t_size,
        "counting": n >= s_size + t_size,
    }
    if continuation is not None:
        gaps["continuation"] = degree_value - continuation
        links["continuation"] = degree_value >= continuation - tol
    return WitnessChain(
        s=s_sorted, t=t_sorted, a=a, d=d, n=n,
        lambda_g=est_g.value, lambda_h=est_h.value,
        quotient_value=quotient_value, degree_value=degree_value,
        continuation_value=continuation, links=links, gaps=gaps,
    )


def witness_chain_check(g: Graph, s: Iterable[int], tol: float = DEFAULT_TOL) -> bool:
    return witness_chain(g, s, tol).holds


def equality_outcome_of(report: VerificationReport, integrality_tol: float = INTEGRALITY_TOL) -> EqualityOutcome:
    k_round = round(report.k_star)
    integral = abs(report.k_star - k_round) <= integrality_tol
    member = report.membership is not None and report.membership.is_member

    if member and report.membership.k_found >= 1:
        if not report.equality_flag or report.membership.d_found != report.d:
            return EqualityOutcome.FAILED
    if not report.equality_flag:
        return EqualityOutcome.NOT_EQUAL
    if not integral:
        return EqualityOutcome.FAILED
    if k_round >= 1:
        ok = member and report.membership.d_found == report.d and report.membership.k_found == k_round
        return EqualityOutcome.HOLDS if ok else EqualityOutcome.FAILED
    if member:
        return EqualityOutcome.HOLDS
    logger.warning("Equality at k=0 by a graph outside the family (n=%d, d=%d)", report.n, report.d)
    return EqualityOutcome.REGULAR_ANOMALY


def equality_outcome(g: Graph, tol: float = DEFAULT_TOL) -> EqualityOutcome:
    return equality_outcome_of(check_theorem_bound(g, tol))


def check_equality_characterization(g: Graph, tol: float = DEFAULT_TOL) -> bool:
    """Equality with integral k >= 1 forces membership with that (d, k), and
    members attain equality. Regular-case equalities by non-members are
    reported, not failed."""
    return equality_outcome(g, tol) is not EqualityOutcome.FAILED


def verify_graph(g: Graph, tol: float = DEFAULT_TOL, size_cap: int = BRUTE_FORCE_CAP,
                 equality_tol: float = EQUALITY_TOL,
                 report_hook: Optional[ReportHook] = None) -> VerifyReport:
    """Run every check on one graph. ``report_hook`` may replace the bound
    report before the checks read it."""
    report = check_theorem_bound(g, tol, equality_tol)
    if report_hook is not None:
        report = report_hook(report)
    bound_holds = not bound_violated(report, tol)
    lemma_ok = lemma_contrapositive_holds(report, tol)
    sweep_ok = lemma_sweep_holds(report, tol=tol)
    outcome = equality_outcome_of(report)
    crosscheck = berge_tutte_crosscheck(g, size_cap) if g.n <= size_cap else None

    anomalies = []
    if outcome is EqualityOutcome.REGULAR_ANOMALY:
        anomalies.append(f"equality at k=0 by a non-member (n={report.n}, d={report.d})")
    passed = (bound_holds and lemma_ok and sweep_ok
              and outcome is not EqualityOutcome.FAILED and crosscheck is not False)
    return VerifyReport(
        report=report.model_copy(update={"violation": not bound_holds}),
        bound_holds=bound_holds,
        lemma_contrapositive=lemma_ok,
        lemma_sweep=sweep_ok,
        equality_outcome=outcome.value,
        berge_tutte=crosscheck,
        anomalies=anomalies,
        passed=passed,
    )
