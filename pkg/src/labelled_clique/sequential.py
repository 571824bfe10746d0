"""Sequential two-pass branch and bound for the maximum labelled clique.

Pass 1 maximises clique size, filtering label sets against the budget.
Pass 2 keeps the pass-1 incumbent, fixes its size, and minimises the number
of distinct labels by filtering against (incumbent cost - 1), which shrinks
as cheaper solutions are found.  The bound at each node comes from a fresh
greedy colouring of the candidate set, consumed right to left.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from time import perf_counter

from .colouring import colour_order_into
from .graph import LabelledGraph, permute_by_degree


def is_better(candidate: tuple[int, int], best: tuple[int, int]) -> bool:
    """Strict solution order: larger size wins, equal size won by lower cost."""
    size, cost = candidate
    best_size, best_cost = best
    return size > best_size or (size == best_size and cost < best_cost)


class Incumbent:
    """Best feasible clique found so far, in permuted vertex numbering."""

    __slots__ = ("clique", "labels", "size", "cost")

    def __init__(self, clique: list[int] | tuple[int, ...] = (), labels: int = 0):
        self.clique = list(clique)
        self.labels = labels
        self.size = len(self.clique)
        self.cost = labels.bit_count()

    def replace(self, clique: list[int], labels: int, size: int, cost: int) -> None:
        self.clique = list(clique)
        self.labels = labels
        self.size = size
        self.cost = cost

    def __repr__(self) -> str:
        return f"Incumbent(size={self.size}, cost={self.cost}, clique={self.clique})"


@dataclass
class SearchStats:
    """Recursion-call counters and wall time for one solve."""

    nodes_pass1: int = 0
    nodes_pass2: int = 0
    elapsed: float = 0.0
    workers: int = 1


@dataclass
class Solution:
    """A maximum feasible clique in original vertex numbering."""

    clique: list[int]
    size: int
    labels: int
    cost: int
    stats: SearchStats = field(default_factory=SearchStats)


class SearchTrace:
    """Test instrumentation: records first-pass branch prefixes at depth <= 2.

    ``disable_prune`` switches off the colour-bound prune so replay tests can
    compare explored prefixes without incumbent-timing differences.
    """

    __slots__ = ("disable_prune", "prefixes")

    def __init__(self, disable_prune: bool = False):
        self.disable_prune = disable_prune
        self.prefixes: list[tuple[int, ...]] = []

    def record(self, first_pass: bool, clique: list[int] | tuple[int, ...]) -> None:
        if first_pass and len(clique) <= 2:
            self.prefixes.append(tuple(clique))


def _expand(first_pass, clique, cands, labels, inc, adjacency, label_bits, budget,
            nodes, scratch, depth, prune=True, trace=None):
    """One branch-and-bound node: colour, then branch right to left.

    ``clique`` is used like a stack (append/pop), never a bitset, so the
    label union only ever scans the current clique.  ``inc`` is updated in
    place; it may be any object exposing size/cost reads and a
    ``replace(clique, labels, size, cost)`` that keeps only improvements.
    """
    nodes[0] += 1
    if depth == len(scratch):
        n = len(adjacency)
        scratch.append(([0] * n, [0] * n))
    order, bounds = scratch[depth]
    m = colour_order_into(adjacency, cands, order, bounds)
    csize = len(clique)
    for i in range(m - 1, -1, -1):
        if prune:
            reach = csize + bounds[i]
            inc_size = inc.size
            # bounds never decreases with i, so every remaining branch
            # would prune too: abandon the whole node.
            if reach < inc_size or (first_pass and reach == inc_size):
                return
        v = order[i]
        row = label_bits[v]
        grown = labels
        for w in clique:
            grown |= row[w]
        clique.append(v)
        if trace is not None:
            trace.record(first_pass, clique)
        cost = grown.bit_count()
        if cost <= (budget if first_pass else inc.cost - 1):
            size = csize + 1
            if size > inc.size or (size == inc.size and cost < inc.cost):
                inc.replace(clique, grown, size, cost)
            remaining = cands & adjacency[v]
            if remaining:
                _expand(first_pass, clique, remaining, grown, inc, adjacency,
                        label_bits, budget, nodes, scratch, depth + 1, prune, trace)
        clique.pop()
        cands &= ~(1 << v)


def expand(first_pass: bool, clique: list[int], cands: int, labels: int,
           inc: Incumbent, lg: LabelledGraph, budget: int, stats: SearchStats) -> None:
    """Run one branch-and-bound subtree over an already-permuted graph.

    Updates ``inc`` and the pass's node counter in ``stats`` in place.
    """
    nodes = [0]
    _expand(first_pass, clique, cands, labels, inc, lg.graph.adjacency,
            lg.label_bits, budget, nodes, [], 0)
    if first_pass:
        stats.nodes_pass1 += nodes[0]
    else:
        stats.nodes_pass2 += nodes[0]


def _pass_two_needed(inc: Incumbent) -> bool:
    # A clique of size >= 2 has cost >= 1 and singletons cost 0, so when the
    # incumbent cost is already <= 1 no cheaper equal-size clique can exist.
    return inc.cost > 1


def solve(lg: LabelledGraph, budget: int, _trace: SearchTrace | None = None) -> Solution:
    """Find a maximum feasible clique, cheapest among the maximum ones.

    The graph is permuted into non-increasing degree order, searched twice
    (size pass, then cost pass, keeping the incumbent in between), and the
    witness is mapped back to original numbering.
    """
    if budget < 1:
        raise ValueError(f"budget must be a positive integer, got {budget}")
    start = perf_counter()
    permuted, perm = permute_by_degree(lg)
    n = permuted.graph.n
    if sys.getrecursionlimit() < n + 200:
        sys.setrecursionlimit(n + 200)
    adjacency = permuted.graph.adjacency
    label_bits = permuted.label_bits
    every_vertex = (1 << n) - 1
    inc = Incumbent()
    scratch: list[tuple[list[int], list[int]]] = []
    prune = _trace is None or not _trace.disable_prune
    nodes1 = [0]
    _expand(True, [], every_vertex, 0, inc, adjacency, label_bits, budget,
            nodes1, scratch, 0, prune, _trace)
    nodes2 = [0]
    if _pass_two_needed(inc):
        _expand(False, [], every_vertex, 0, inc, adjacency, label_bits, budget,
                nodes2, scratch, 0, prune, _trace)
    elapsed = perf_counter() - start
    stats = SearchStats(nodes1[0], nodes2[0], elapsed, workers=1)
    witness = sorted(perm.to_original(inc.clique))
    return Solution(witness, inc.size, inc.labels, inc.cost, stats)
