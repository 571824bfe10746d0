import pytest

from labelled_clique import build_graph, colour_order
from labelled_clique.graph import iter_bits

from conftest import random_graph


def brute_max_clique(g, cands_mask):
    """Largest clique size within a candidate bitset, by subset enumeration."""
    best = 0
    vertices = list(iter_bits(cands_mask))
    n = len(vertices)
    for mask in range(1 << n):
        chosen = [vertices[i] for i in range(n) if mask >> i & 1]
        if all(
            g.adjacent(u, v) for i, u in enumerate(chosen) for v in chosen[i + 1 :]
        ):
            best = max(best, len(chosen))
    return best


def test_fig2_golden(fig2):
    result = colour_order(fig2, (1 << fig2.n) - 1)
    assert [v + 1 for v in result.order] == [1, 3, 2, 4, 8, 5, 7, 6]
    assert result.bounds == [1, 1, 2, 2, 2, 3, 3, 4]


def test_empty_candidates(fig2):
    result = colour_order(fig2, 0)
    assert result.order == []
    assert result.bounds == []


def test_independent_vertices_share_one_colour():
    g = build_graph(6, [(0, 1)])
    result = colour_order(g, 0b111100)  # 2, 3, 4, 5 pairwise non-adjacent
    assert result.order == [2, 3, 4, 5]
    assert result.bounds == [1, 1, 1, 1]


def test_clique_needs_distinct_colours():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    result = colour_order(g, 0b111)
    assert result.order == [0, 1, 2]
    assert result.bounds == [1, 2, 3]


@pytest.mark.parametrize("seed", range(8))
def test_colouring_properties(seed):
    g = random_graph(11, 0.45, seed=seed)
    cands = ((seed * 2654435761) | 1) & ((1 << g.n) - 1)
    result = colour_order(g, cands)
    # order is exactly the candidate set
    assert sorted(result.order) == list(iter_bits(cands))
    bounds = result.bounds
    assert all(bounds[i] <= bounds[i + 1] for i in range(len(bounds) - 1))
    if bounds:
        assert bounds[0] >= 1
        assert bounds[-1] <= len(result.order)
    # each colour class is an independent set
    for colour in set(bounds):
        members = [v for v, c in zip(result.order, bounds) if c == colour]
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                assert not g.adjacent(u, v)
    # the final bound caps the maximum clique among the candidates
    assert not bounds or bounds[-1] >= brute_max_clique(g, cands)


def test_deterministic(fig2):
    cands = (1 << fig2.n) - 1
    first = colour_order(fig2, cands)
    second = colour_order(fig2, cands)
    assert first.order == second.order
    assert first.bounds == second.bounds
