"""Small reference graphs with known spectra and matching numbers."""
from typing import Dict

import networkx as nx

from .graph_interface import Graph


def complete_graph(n: int) -> Graph:
    return Graph.from_networkx(nx.complete_graph(n))


def path_graph(n: int) -> Graph:
    return Graph.from_networkx(nx.path_graph(n))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"A simple cycle needs at least 3 vertices, got {n}")
    return Graph.from_networkx(nx.cycle_graph(n))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph.from_networkx(nx.star_graph(leaves))


def petersen_graph() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def define_reference_graphs() -> Dict[str, Graph]:
    """Named graphs used by the walkthrough and the tests."""
    from families.construction import gen_complete_bipartite

    return {
        "K_2": complete_graph(2),
        "K_3": complete_graph(3),
        "K_5": complete_graph(5),
        "P_3": path_graph(3),
        "C_5": cycle_graph(5),
        "C_6": cycle_graph(6),
        "K_1,3": star_graph(3),
        "K_2,3": gen_complete_bipartite(2, 3),
        "Petersen": petersen_graph(),
    }
