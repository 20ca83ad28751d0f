from typing import Dict, List, Tuple
import logging

import numpy as np
import pandas as pd

from config import BRUTE_FORCE_CAP, DEFAULT_TOL
from graph_core.edge_list import graph_digest, serialize_edge_list
from graph_core.graph_builder import random_connected_min_degree
from matching.deficiency import berge_tutte_crosscheck
from .reports import CampaignSummary, EqualityHit, VerificationReport
from .theorem_checks import check_theorem_bound, lemma_contrapositive_holds

logger = logging.getLogger(__name__)


class CampaignParameterError(ValueError):
    pass


def _draw_trials(n_max: int, d_range: Tuple[int, int], trials: int, seed: int) -> List[Tuple[int, int, int]]:
    """``(n, d, graph_seed)`` for every trial, all drawn from one seeded stream."""
    rng = np.random.default_rng(seed)
    d_min, d_max = d_range
    draws = []
    for _ in range(trials):
        d = int(rng.integers(d_min, d_max + 1))
        n = int(rng.integers(d + 1, n_max + 1))
        draws.append((n, d, int(rng.integers(0, 2 ** 63))))
    return draws


def fuzz_campaign(n_max: int, d_range: Tuple[int, int], trials: int, seed: int,
                  tol: float = DEFAULT_TOL, size_cap: int = BRUTE_FORCE_CAP) -> CampaignSummary:
    """Check the bound and the lemma on random connected graphs.

    Each trial draws (n, d) and a connected graph with minimum degree >= d; the
    fractional Berge-Tutte crosscheck also runs when n <= ``size_cap``. The
    summary is a pure function of the arguments.
    """
    d_min, d_max = d_range
    if trials < 1:
        raise CampaignParameterError(f"Need at least one trial, got {trials}")
    if d_min < 1 or d_max < d_min:
        raise CampaignParameterError(f"Invalid degree range {d_min}..{d_max}")
    if n_max < d_max + 1:
        raise CampaignParameterError(f"n_max={n_max} is too small for minimum degree {d_max}")
    if not 0 <= seed < 2 ** 64:
        raise CampaignParameterError(f"Seed must be a 64-bit unsigned integer, got {seed}")

    rows: List[Dict] = []
    reports: Dict[str, VerificationReport] = {}
    graphs: Dict[str, str] = {}
    for trial, (n, d, graph_seed) in enumerate(_draw_trials(n_max, d_range, trials, seed)):
        g = random_connected_min_degree(n, d, graph_seed)
        digest = graph_digest(g)
        report = check_theorem_bound(g, tol)
        crosscheck = berge_tutte_crosscheck(g, size_cap) if n <= size_cap else True
        rows.append({
            "trial": trial,
            "digest": digest,
            "n": n,
            "d": d,
            "slack": report.slack,
            "bound_violation": report.violation,
            "lemma_violation": not lemma_contrapositive_holds(report, tol),
            "crosscheck_failure": not crosscheck,
            "equality": report.equality_flag,
        })
        reports[digest] = report
        graphs[digest] = serialize_edge_list(g).decode("ascii")
        if (trial + 1) % 100 == 0:
            logger.info("Campaign seed=%d: %d/%d trials", seed, trial + 1, trials)

    df = pd.DataFrame(rows)
    failing = df["bound_violation"] | df["lemma_violation"] | df["crosscheck_failure"]
    worst = df.sort_values(["slack", "digest"], kind="mergesort").iloc[0]
    hits = df[df["equality"]].drop_duplicates("digest")
    bad = df[failing].drop_duplicates("digest")
    if len(bad):
        logger.error("Campaign seed=%d found %d violating trials", seed, int(failing.sum()))

    return CampaignSummary(
        trials=trials,
        violations=int(failing.sum()),
        bound_violations=int(df["bound_violation"].sum()),
        lemma_violations=int(df["lemma_violation"].sum()),
        crosscheck_failures=int(df["crosscheck_failure"].sum()),
        worst_slack=float(worst["slack"]),
        worst_digest=str(worst["digest"]),
        equality_hits=[EqualityHit(digest=h, report=reports[h]) for h in hits["digest"]],
        violating_graphs=[graphs[h] for h in bad["digest"]],
        seed=seed,
    )
