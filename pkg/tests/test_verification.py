import logging
import math

import pytest
from hypothesis import given

from families.construction import gen_complete_bipartite, gen_ring_blocks
from graph_core.graph_interface import DisconnectedGraphError, EdgelessGraphError, Graph
from graph_core.named_graphs import complete_graph, cycle_graph, path_graph, petersen_graph, star_graph
from matching.deficiency import max_deficiency_bruteforce
from strategies import connected_graphs
from verification.campaign import CampaignParameterError, fuzz_campaign
from verification.theorem_checks import (
    EmptyWitnessError,
    EqualityOutcome,
    bound_violated,
    check_equality_characterization,
    check_lemma_contrapositive,
    check_lemma_sweep,
    check_theorem_bound,
    equality_outcome,
    equality_outcome_of,
    lemma_contrapositive_gap,
    verify_graph,
    witness_chain,
    witness_chain_check,
)

RING_PARAMS = [(d, m, c) for d in range(2, 5) for m in range(1, 4) for c in range(1, 5)]


def test_bound_on_complete_bipartite():
    report = check_theorem_bound(gen_complete_bipartite(2, 3))
    assert report.bound == pytest.approx(2.0, abs=1e-8)
    assert report.alpha_f_half_units == 4
    assert report.equality_flag and not report.violation
    assert report.k_star == pytest.approx(1.0, abs=1e-8)
    assert (report.membership.d_found, report.membership.k_found) == (2, 1)


def test_bound_on_triangle_is_regular_equality():
    report = check_theorem_bound(complete_graph(3))
    assert report.bound == pytest.approx(1.5, abs=1e-8)
    assert report.alpha_f_half_units == 3
    assert report.equality_flag and report.regular_case
    assert not report.membership.is_member


def test_bound_on_three_vertex_path():
    report = check_theorem_bound(path_graph(3))
    assert report.d == 1
    assert report.lambda1.value == pytest.approx(math.sqrt(2), abs=1e-9)
    assert report.bound == pytest.approx(1.0, abs=1e-8)
    assert report.alpha_f == 1
    assert report.equality_flag
    assert (report.membership.d_found, report.membership.k_found) == (1, 1)


def test_report_json_uses_stable_names():
    dumped = check_theorem_bound(gen_complete_bipartite(2, 3)).model_dump(mode="json", by_alias=True)
    assert dumped["alpha_f"] == "4/2"
    assert dumped["equality"] is True
    assert set(dumped["lambda1"]) == {"value", "residual", "iterations"}


def test_bound_requires_connected_graph_with_edges():
    with pytest.raises(DisconnectedGraphError):
        check_theorem_bound(Graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(EdgelessGraphError):
        check_theorem_bound(Graph(1))


def test_bound_holds_on_corpus(connected_corpus):
    for g in connected_corpus:
        report = check_theorem_bound(g)
        assert not report.violation
        assert report.slack >= -1e-6


def test_bound_violated_recomputes_from_fields():
    report = check_theorem_bound(gen_complete_bipartite(2, 3))
    assert not bound_violated(report)
    assert bound_violated(report.model_copy(update={"alpha_f_half_units": 3}))


@pytest.mark.parametrize("g", [gen_complete_bipartite(2, 3), cycle_graph(6), star_graph(3)])
def test_lemma_contrapositive_is_tight_on_members(g):
    assert check_lemma_contrapositive(g)
    assert lemma_contrapositive_gap(check_theorem_bound(g)) == pytest.approx(0.0, abs=1e-8)


def test_lemma_on_corpus(connected_corpus):
    for g in connected_corpus:
        assert check_lemma_contrapositive(g)
        assert check_lemma_sweep(g, samples=16)


def test_witness_chain_on_complete_bipartite():
    chain = witness_chain(gen_complete_bipartite(2, 3), [0, 1])
    assert chain.t == (2, 3, 4) and chain.a == 6
    assert chain.holds
    for value in (chain.lambda_g, chain.lambda_h, chain.quotient_value, chain.degree_value, chain.continuation_value):
        assert value == pytest.approx(math.sqrt(6), abs=1e-8)


def test_witness_chain_on_star():
    chain = witness_chain(star_graph(3), [0])
    assert chain.t == (1, 2, 3) and chain.a == 3
    assert chain.quotient_value == pytest.approx(math.sqrt(3))
    assert chain.degree_value == pytest.approx(math.sqrt(3))
    assert witness_chain_check(star_graph(3), [0])


def test_witness_chain_needs_isolated_vertices():
    with pytest.raises(EmptyWitnessError):
        witness_chain(cycle_graph(4), [0])
    with pytest.raises(EmptyWitnessError):
        witness_chain(cycle_graph(4), [])


def test_witness_chain_on_corpus(connected_corpus):
    checked = 0
    for g in connected_corpus:
        witness = max_deficiency_bruteforce(g)
        if witness.deficiency > 0:
            assert witness_chain_check(g, witness.s)
            checked += 1
    assert checked > 0


@pytest.mark.parametrize("d,m,c", RING_PARAMS)
def test_witness_chain_is_tight_on_members(d, m, c):
    g = gen_ring_blocks(d, m, c)
    report = check_theorem_bound(g)
    chain = witness_chain(g, report.membership.bipartition.side_b)
    assert chain.holds
    assert all(abs(gap) <= 1e-8 for gap in chain.gaps.values())


@pytest.mark.parametrize("d,m,c", RING_PARAMS)
def test_members_attain_equality(d, m, c):
    g = gen_ring_blocks(d, m, c)
    report = check_theorem_bound(g)
    assert report.slack <= 1e-6
    assert (report.membership.d_found, report.membership.k_found) == (d, m * c)
    assert equality_outcome_of(report) is EqualityOutcome.HOLDS


@pytest.mark.parametrize("g,outcome", [
    (gen_complete_bipartite(2, 3), EqualityOutcome.HOLDS),
    (cycle_graph(6), EqualityOutcome.HOLDS),
    (path_graph(4), EqualityOutcome.NOT_EQUAL),
    (complete_graph(3), EqualityOutcome.REGULAR_ANOMALY),
    (cycle_graph(5), EqualityOutcome.REGULAR_ANOMALY),
    (petersen_graph(), EqualityOutcome.REGULAR_ANOMALY),
])
def test_equality_outcomes(g, outcome):
    assert equality_outcome(g) is outcome
    assert check_equality_characterization(g)


def test_regular_anomaly_is_logged(caplog):
    with caplog.at_level(logging.WARNING, logger="verification.theorem_checks"):
        equality_outcome(petersen_graph())
    assert "outside the family" in caplog.text


def test_equality_characterization_on_corpus(connected_corpus):
    for g in connected_corpus:
        report = check_theorem_bound(g)
        assert equality_outcome_of(report) is not EqualityOutcome.FAILED
        if report.slack <= 1e-8 and round(report.k_star) >= 1:
            assert report.membership.is_member


def test_corrupted_report_fails_equality():
    report = check_theorem_bound(gen_complete_bipartite(2, 3))
    assert equality_outcome_of(report.model_copy(update={"equality_flag": False})) is EqualityOutcome.FAILED


def test_verify_graph_on_member():
    result = verify_graph(gen_ring_blocks(2, 1, 3))
    assert result.passed
    assert result.bound_holds and result.lemma_contrapositive and result.lemma_sweep
    assert result.berge_tutte is True
    assert result.equality_outcome == "holds"
    assert result.anomalies == []


def test_verify_graph_reports_anomaly_without_failing():
    result = verify_graph(petersen_graph())
    assert result.passed
    assert result.equality_outcome == EqualityOutcome.REGULAR_ANOMALY.value
    assert len(result.anomalies) == 1


def test_verify_graph_skips_oracle_above_cap():
    result = verify_graph(cycle_graph(8), size_cap=6)
    assert result.berge_tutte is None
    assert result.passed


def test_verify_graph_hook_can_force_a_violation():
    def corrupt(report):
        return report.model_copy(update={"alpha_f_half_units": 1})

    result = verify_graph(gen_complete_bipartite(2, 3), report_hook=corrupt)
    assert not result.passed
    assert not result.bound_holds
    assert result.report.violation


def test_small_campaign_is_clean_and_deterministic():
    first = fuzz_campaign(12, (1, 3), 30, 3)
    second = fuzz_campaign(12, (1, 3), 30, 3)
    assert first == second
    assert first.trials == 30
    assert first.violations == 0 and first.violating_graphs == []
    assert first.worst_slack >= -1e-6
    assert len(first.worst_digest) == 16


def test_campaign_finds_equality_on_trees():
    # every connected graph on 2 or 3 vertices (K_2, P_3, K_3) attains the bound
    summary = fuzz_campaign(3, (1, 1), 5, 0)
    assert summary.equality_hits


@pytest.mark.parametrize("args", [
    (12, (1, 3), 0, 1),
    (12, (0, 3), 5, 1),
    (12, (3, 2), 5, 1),
    (3, (1, 3), 5, 1),
    (12, (1, 3), 5, -1),
])
def test_campaign_parameter_errors(args):
    with pytest.raises(CampaignParameterError):
        fuzz_campaign(*args)


@pytest.mark.slow
def test_acceptance_campaign():
    summary = fuzz_campaign(40, (1, 5), 1000, 42)
    assert summary.violations == 0
    assert summary.bound_violations == 0 and summary.lemma_violations == 0


@given(connected_graphs(max_n=18, max_d=4))
def test_bound_and_lemma_hold_on_random_graphs(g):
    report = check_theorem_bound(g)
    assert not report.violation
    assert report.slack >= -1e-6
    assert check_lemma_contrapositive(g)


@given(connected_graphs(max_n=18, max_d=4))
def test_bound_equals_half_of_n_minus_k_star(g):
    report = check_theorem_bound(g)
    assert report.bound == pytest.approx((report.n - report.k_star) / 2, abs=1e-12)


def test_report_certificate_matches_alpha():
    g = gen_ring_blocks(2, 1, 3)
    report = check_theorem_bound(g)
    assert sum(w for _, _, w in report.certificate) == report.alpha_f_half_units
    assert all(g.has_edge(u, v) and w in (1, 2) for u, v, w in report.certificate)
    dumped = report.model_dump(mode="json", by_alias=True)
    assert dumped["certificate"] == [list(row) for row in report.certificate]


def test_witness_size_link_on_members():
    chain = witness_chain(gen_complete_bipartite(2, 3), [0, 1])
    assert chain.links["witness size"]
    assert set(chain.links) == {"interlacing", "quotient", "witness size", "degree", "counting", "continuation"}


def test_witness_size_link_holds_for_corpus_witnesses(connected_corpus):
    for g in connected_corpus:
        witness = max_deficiency_bruteforce(g)
        if witness.deficiency > 0:
            chain = witness_chain(g, witness.s)
            assert chain.links["witness size"] and len(chain.s) >= chain.d
