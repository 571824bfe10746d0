import networkx as nx
import pytest

from labelled_clique import build_graph, build_labelled, clique_cost, oracle_solve
from labelled_clique.oracle import _solve_by_extension, _solve_by_subsets

from conftest import random_instance


def unlabelled_max_clique(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return max((len(c) for c in nx.find_cliques(nxg)), default=0)


def test_fig1(fig1):
    assert oracle_solve(fig1, 3)[:2] == (4, 2)
    assert oracle_solve(fig1, 4)[:2] == (5, 4)


def test_k4_single_label():
    g = build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    lg = build_labelled(g, 1, dict.fromkeys(g.edges(), 0))
    assert oracle_solve(lg, 1) == (4, 1, [0, 1, 2, 3])


def test_edgeless_graph():
    lg = build_labelled(build_graph(5, []), 3, {})
    size, cost, witness = oracle_solve(lg, 2)
    assert (size, cost) == (1, 0)
    assert witness == [0]  # lexicographic tie-break


def test_witness_is_lexicographically_smallest():
    # two disjoint edges with the same label: {0,1} ties {2,3}
    g = build_graph(4, [(0, 1), (2, 3)])
    lg = build_labelled(g, 1, {(0, 1): 0, (2, 3): 0})
    assert oracle_solve(lg, 1) == (2, 1, [0, 1])


def test_witness_is_feasible(fig1):
    size, cost, witness = oracle_solve(fig1, 3)
    labels, recomputed = clique_cost(fig1, witness)
    assert recomputed == cost <= 3
    assert len(witness) == size


def test_size_monotone_in_budget():
    for seed in range(4):
        lg = random_instance(9, 0.6, 4, seed=seed)
        sizes = [oracle_solve(lg, b)[0] for b in range(1, 6)]
        assert all(sizes[i] <= sizes[i + 1] for i in range(len(sizes) - 1))


def test_full_budget_matches_unlabelled_clique():
    for seed in range(4):
        lg = random_instance(10, 0.5, 3, seed=40 + seed)
        size, _, _ = oracle_solve(lg, lg.num_labels)
        assert size == unlabelled_max_clique(lg.graph)


def test_enumeration_strategies_agree():
    for seed in range(5):
        lg = random_instance(9, 0.5, 3, seed=80 + seed)
        for budget in (1, 2, 3):
            assert _solve_by_subsets(lg, budget) == _solve_by_extension(lg, budget)


def test_guards():
    lg = random_instance(6, 0.5, 2, seed=1)
    with pytest.raises(ValueError):
        oracle_solve(lg, 0)
    big = build_labelled(build_graph(26, []), 1, {})
    with pytest.raises(ValueError, match="refuses"):
        oracle_solve(big, 1)


def test_empty_graph():
    lg = build_labelled(build_graph(0, []), 1, {})
    assert oracle_solve(lg, 1) == (0, 0, [])
