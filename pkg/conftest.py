from typing import Dict, List
import os

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings

from families.construction import gen_complete_bipartite
from graph_core.graph_interface import Graph
from graph_core.named_graphs import complete_graph, cycle_graph, path_graph, petersen_graph, star_graph

settings.register_profile("default", max_examples=100, deadline=None)
settings.register_profile("fast", max_examples=20, deadline=None)
settings.register_profile(
    "ci", max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance-scale runs (campaigns, large corpora)")


def _atlas_corpus() -> List[Graph]:
    corpus = []
    for h in nx.graph_atlas_g():
        if h.number_of_edges() and nx.is_connected(h):
            corpus.append(Graph.from_networkx(h))
    return corpus


_CORPUS = _atlas_corpus()


@pytest.fixture(scope="session")
def connected_corpus() -> List[Graph]:
    """Every connected graph on at most 7 vertices with at least one edge."""
    return _CORPUS


@pytest.fixture(scope="session")
def named() -> Dict[str, Graph]:
    return {
        "K2": complete_graph(2),
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "K5": complete_graph(5),
        "P3": path_graph(3),
        "P4": path_graph(4),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "C6": cycle_graph(6),
        "K1_3": star_graph(3),
        "K2_3": gen_complete_bipartite(2, 3),
        "K3_3": gen_complete_bipartite(3, 3),
        "Petersen": petersen_graph(),
    }
