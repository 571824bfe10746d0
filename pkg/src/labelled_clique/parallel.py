"""Parallel branch and bound: depth-1 subproblem queue with distance-2 stealing.

The search tree is split immediately below the root: one subproblem per
root branch, queued in sequential branch order.  When the queue runs dry an
idle worker resplits the unstarted branches of the in-flight depth-1
subproblem latest in sequential order, republishing them as depth-2
subproblems.  Workers share a single monotone incumbent encoded in one
64-bit key (high bits size, low bits complemented cost) so a candidate can
be compared and the witness installed in one indivisible step.

Left-to-right dependencies between subtrees are deliberately ignored, so
node counts vary from run to run; the final (size, cost) always matches the
sequential solver, both being optimal.
"""

from __future__ import annotations

import os
import sys
import threading
from collections import deque
from dataclasses import dataclass
from time import perf_counter

from .colouring import colour_order, colour_order_into
from .graph import LabelledGraph, permute_by_degree
from .sequential import SearchStats, SearchTrace, Solution, _expand, _pass_two_needed

_KEY_BITS = 32
_COST_MASK = (1 << _KEY_BITS) - 1


def incumbent_key(size: int, cost: int) -> int:
    """Encode (size, cost) as one unsigned key that sorts like the solution order.

    High 32 bits hold the size, low 32 bits the bitwise complement of the
    cost, so ``key(a) > key(b)`` exactly when ``a`` is the better solution.
    """
    if not 0 <= size <= _COST_MASK:
        raise ValueError(f"size out of range: {size}")
    if not 0 <= cost <= _COST_MASK:
        raise ValueError(f"cost out of range: {cost}")
    return (size << _KEY_BITS) | (_COST_MASK ^ cost)


class SharedIncumbent:
    """Monotone best-so-far shared by all workers.

    Improvements are filtered twice: callers pre-check against racily read
    ``size``/``cost`` (stale reads only cost pruning power, never
    correctness), and the locked update re-validates against the key so the
    key and witness always change together and only ever increase.
    """

    __slots__ = ("_lock", "key", "size", "cost", "clique", "labels")

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self.key = incumbent_key(0, 0)
        self.size = 0
        self.cost = 0
        self.clique: list[int] = []
        self.labels = 0

    def replace(self, clique: list[int], labels: int, size: int, cost: int) -> bool:
        """Install the candidate iff it beats the stored key; returns success."""
        key = incumbent_key(size, cost)
        with self._lock:
            if key > self.key:
                self.key = key
                self.size = size
                self.cost = cost
                self.clique = list(clique)
                self.labels = labels
                return True
            return False

    def try_improve(self, clique: list[int] | tuple[int, ...], labels: int) -> bool:
        return self.replace(list(clique), labels, len(clique), labels.bit_count())

    def snapshot(self) -> tuple[list[int], int, int, int]:
        """Consistent (clique, labels, size, cost) view."""
        with self._lock:
            return list(self.clique), self.labels, self.size, self.cost


@dataclass(frozen=True)
class Subproblem:
    """A search-tree prefix of one or two fixed vertices.

    ``cands`` already excludes non-neighbours of the last prefix vertex, and
    ``labels_before`` is the label set of the prefix without that vertex, so
    replaying the prefix from the root reproduces the sequential state.
    ``bound`` is the colour bound of this branch in its parent's colouring.
    """

    position: tuple[int, ...]
    prefix: tuple[int, ...]
    cands: int
    labels_before: int
    bound: int


def split_root(lg: LabelledGraph) -> list[Subproblem]:
    """One subproblem per root branch, in sequential branch order.

    The branch order (and therefore the queue order) is the same in both
    passes, so the split does not depend on which pass is running.
    """
    n = lg.graph.n
    cands = (1 << n) - 1
    result = colour_order(lg.graph, cands)
    subproblems = []
    position = 0
    for i in range(len(result.order) - 1, -1, -1):
        v = result.order[i]
        subproblems.append(
            Subproblem(
                position=(position,),
                prefix=(v,),
                cands=cands & lg.graph.adjacency[v],
                labels_before=0,
                bound=result.bounds[i],
            )
        )
        cands &= ~(1 << v)
        position += 1
    return subproblems


class _Cursor:
    """Unstarted branches of an in-flight depth-1 subproblem.

    ``next_i`` walks the colouring right to left; the owner claims one
    branch at a time and a thief may claim all the rest.  Mutated only
    under the pass lock.
    """

    __slots__ = ("position", "vertex", "labels", "order", "bounds", "cands", "next_i")

    def __init__(self, position, vertex, labels, order, bounds, cands, next_i):
        self.position = position
        self.vertex = vertex
        self.labels = labels
        self.order = order
        self.bounds = bounds
        self.cands = cands
        self.next_i = next_i


def steal_from(cursors: dict[tuple[int, ...], _Cursor], adjacency: list[int]) -> list[Subproblem]:
    """Claim every unstarted branch of the stealable cursor latest in
    sequential order, as depth-2 subproblems.  Caller holds the pass lock.

    Returns an empty list when nothing is stealable.  Claimed branches are
    removed from the cursor, so no branch can run twice, and every branch is
    either kept by the owner or returned here, so none is lost.
    """
    for position in sorted(cursors, reverse=True):
        cursor = cursors[position]
        if cursor.next_i < 0:
            continue
        stolen = []
        cands = cursor.cands
        sequence = 0
        for i in range(cursor.next_i, -1, -1):
            w = cursor.order[i]
            stolen.append(
                Subproblem(
                    position=position + (sequence,),
                    prefix=(cursor.vertex, w),
                    cands=cands & adjacency[w],
                    labels_before=cursor.labels,
                    bound=cursor.bounds[i],
                )
            )
            cands &= ~(1 << w)
            sequence += 1
        cursor.next_i = -1
        return stolen
    return []


class _PassState:
    """Queue, stealable cursors and termination accounting for one pass."""

    __slots__ = ("cond", "queue", "outstanding", "cursors", "abort", "errors",
                 "adjacency", "label_bits", "budget", "incumbent", "first_pass",
                 "prune", "trace", "node_totals")

    def __init__(self, permuted, budget, incumbent, first_pass, prune, trace):
        self.cond = threading.Condition()
        self.queue: deque[Subproblem] = deque()
        self.outstanding = 0
        self.cursors: dict[tuple[int, ...], _Cursor] = {}
        self.abort = False
        self.errors: list[BaseException] = []
        self.adjacency = permuted.graph.adjacency
        self.label_bits = permuted.label_bits
        self.budget = budget
        self.incumbent = incumbent
        self.first_pass = first_pass
        self.prune = prune
        self.trace = trace
        self.node_totals: list[int] = []


def _run_branch(state, ws_nodes, ws_scratch, cursor, i, cands_now):
    """Execute one claimed depth-1 branch exactly as the sequential loop body."""
    inc = state.incumbent
    first = state.first_pass
    if state.prune:
        reach = 1 + cursor.bounds[i]
        inc_size = inc.size
        if reach < inc_size or (first and reach == inc_size):
            return False
    w = cursor.order[i]
    grown = cursor.labels | state.label_bits[w][cursor.vertex]
    clique = [cursor.vertex, w]
    if state.trace is not None:
        state.trace.record(first, clique)
    cost = grown.bit_count()
    if cost <= (state.budget if first else inc.cost - 1):
        if len(clique) > inc.size or (len(clique) == inc.size and cost < inc.cost):
            inc.replace(clique, grown, len(clique), cost)
        remaining = cands_now & state.adjacency[w]
        if remaining:
            _expand(first, clique, remaining, grown, inc, state.adjacency,
                    state.label_bits, state.budget, ws_nodes, ws_scratch, 1,
                    state.prune, state.trace)
    return True


def _process(state: _PassState, sp: Subproblem, ws_nodes, ws_scratch) -> None:
    """Run one queued subproblem to completion (depth 1 or stolen depth 2)."""
    inc = state.incumbent
    first = state.first_pass
    parent_size = len(sp.prefix) - 1
    if state.prune:
        reach = parent_size + sp.bound
        inc_size = inc.size
        if reach < inc_size or (first and reach == inc_size):
            return
    last = sp.prefix[-1]
    row = state.label_bits[last]
    grown = sp.labels_before
    for w in sp.prefix[:-1]:
        grown |= row[w]
    clique = list(sp.prefix)
    if state.trace is not None:
        state.trace.record(first, clique)
    cost = grown.bit_count()
    if cost > (state.budget if first else inc.cost - 1):
        return
    if len(clique) > inc.size or (len(clique) == inc.size and cost < inc.cost):
        inc.replace(clique, grown, len(clique), cost)
    if not sp.cands:
        return
    if parent_size > 0:
        # Stolen depth-2 work: plain recursion, no further resplitting.
        _expand(first, clique, sp.cands, grown, inc, state.adjacency,
                state.label_bits, state.budget, ws_nodes, ws_scratch, 0,
                state.prune, state.trace)
        return
    # Depth-1 work: expand through a stealable branch cursor.
    ws_nodes[0] += 1
    if not ws_scratch:
        n = len(state.adjacency)
        ws_scratch.append(([0] * n, [0] * n))
    order, bounds = ws_scratch[0]
    m = colour_order_into(state.adjacency, sp.cands, order, bounds)
    cursor = _Cursor(sp.position, clique[0], grown, order, bounds, sp.cands, m - 1)
    with state.cond:
        state.cursors[sp.position] = cursor
        state.cond.notify_all()
    try:
        while True:
            with state.cond:
                i = cursor.next_i
                if i < 0:
                    break
                cursor.next_i = i - 1
                cands_now = cursor.cands
                cursor.cands = cands_now & ~(1 << cursor.order[i])
            if not _run_branch(state, ws_nodes, ws_scratch, cursor, i, cands_now):
                # The bound prunes every remaining branch too (bounds is
                # non-decreasing), so drain the cursor.
                with state.cond:
                    cursor.next_i = -1
                break
    finally:
        with state.cond:
            del state.cursors[sp.position]


def _worker(state: _PassState) -> None:
    nodes = [0]
    scratch: list[tuple[list[int], list[int]]] = []
    try:
        while True:
            with state.cond:
                while True:
                    if state.abort:
                        return
                    if state.queue:
                        item = state.queue.popleft()
                        break
                    stolen = steal_from(state.cursors, state.adjacency)
                    if stolen:
                        state.queue.extend(stolen)
                        state.outstanding += len(stolen)
                        state.cond.notify_all()
                        continue
                    if state.outstanding == 0:
                        return
                    state.cond.wait()
            _process(state, item, nodes, scratch)
            with state.cond:
                state.outstanding -= 1
                if state.outstanding == 0:
                    state.cond.notify_all()
    except BaseException as exc:  # propagate to the caller, never hang the pass
        with state.cond:
            state.errors.append(exc)
            state.abort = True
            state.cond.notify_all()
    finally:
        state.node_totals.append(nodes[0])


def _run_pass(permuted, budget, incumbent, first_pass, workers, prune, trace) -> int:
    state = _PassState(permuted, budget, incumbent, first_pass, prune, trace)
    subproblems = split_root(permuted)
    state.queue.extend(subproblems)
    state.outstanding = len(subproblems)
    threads = [threading.Thread(target=_worker, args=(state,)) for _ in range(workers)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    if state.errors:
        raise state.errors[0]
    # The root split's colouring mirrors the sequential root node.
    return 1 + sum(state.node_totals)


def solve_parallel(
    lg: LabelledGraph,
    budget: int,
    workers: int | None = None,
    _trace: SearchTrace | None = None,
) -> Solution:
    """Two-pass parallel search; (size, cost) always equals the sequential result.

    ``workers`` defaults to the hardware concurrency.  A full barrier sits
    between the passes because the cost pass filters against the final
    size-pass incumbent.
    """
    if budget < 1:
        raise ValueError(f"budget must be a positive integer, got {budget}")
    if workers is None:
        workers = os.cpu_count() or 1
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    start = perf_counter()
    permuted, perm = permute_by_degree(lg)
    n = permuted.graph.n
    if sys.getrecursionlimit() < n + 200:
        sys.setrecursionlimit(n + 200)
    incumbent = SharedIncumbent()
    prune = _trace is None or not _trace.disable_prune
    nodes1 = _run_pass(permuted, budget, incumbent, True, workers, prune, _trace)
    nodes2 = 0
    if _pass_two_needed(incumbent):
        nodes2 = _run_pass(permuted, budget, incumbent, False, workers, prune, _trace)
    clique, labels, size, cost = incumbent.snapshot()
    elapsed = perf_counter() - start
    stats = SearchStats(nodes1, nodes2, elapsed, workers=workers)
    witness = sorted(perm.to_original(clique))
    return Solution(witness, size, labels, cost, stats)
