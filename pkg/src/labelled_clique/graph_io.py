"""DIMACS ingestion, label files, and deterministic random label allocation.

Formats (all 1-based, ``c`` comment lines allowed):

* DIMACS clique: one ``p edge n m`` header then ``e u v`` lines.  The
  declared edge count is advisory; duplicates collapse with a warning on
  mismatch.
* Label file: ``l u v k`` assigns label ``k >= 1`` to edge (u, v); every
  edge needs exactly one line and the label count is the largest ``k``.

Random labels use a fixed splitmix64 stream over the canonical edge order
(ascending vertex pairs in original numbering), so a (graph, label count,
seed) triple produces the identical labelling in any implementation,
regardless of the order edges appeared in the input file.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .graph import Graph, LabelledGraph, build_graph, build_labelled

_MASK64 = (1 << 64) - 1
_SPLITMIX_GAMMA = 0x9E3779B97F4B7C15
_SPLITMIX_MUL1 = 0xBF58476D1CE4E5B9
_SPLITMIX_MUL2 = 0x94D049BB133111EB


class ParseError(ValueError):
    """Input text rejected; the message carries the 1-based line number."""


def splitmix_next(state: int) -> tuple[int, int]:
    """Advance a splitmix64 generator: returns (value, new state).

    The state is a plain 64-bit unsigned int; the whole sequence is a pure
    function of the seed.
    """
    state = (state + _SPLITMIX_GAMMA) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * _SPLITMIX_MUL1) & _MASK64
    z = ((z ^ (z >> 27)) * _SPLITMIX_MUL2) & _MASK64
    return z ^ (z >> 31), state


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS clique format into a :class:`Graph`.

    Duplicate edges are collapsed; a declared edge count that disagrees with
    the unique edge count emits a warning rather than an error.
    """
    n: int | None = None
    declared = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError(f"line {lineno}: expected 'p edge n m'")
            try:
                n = int(tokens[2])
                declared = int(tokens[3])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer size in problem line") from None
            if n < 0 or declared < 0:
                raise ParseError(f"line {lineno}: negative size in problem line")
        elif tokens[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before problem line")
            if len(tokens) != 3:
                raise ParseError(f"line {lineno}: expected 'e u v'")
            try:
                u = int(tokens[1])
                v = int(tokens[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer vertex") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"line {lineno}: vertex out of range 1..{n}")
            if u == v:
                raise ParseError(f"line {lineno}: loop edge at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"line {lineno}: unrecognised line {tokens[0]!r}")
    if n is None:
        raise ParseError("missing problem line")
    graph = build_graph(n, edges)
    unique = graph.edge_count()
    if unique != declared:
        warnings.warn(
            f"problem line declares {declared} edges but {unique} unique edges found",
            stacklevel=2,
        )
    return graph


def write_dimacs(g: Graph, comment: str | None = None) -> str:
    """Render a graph back to DIMACS text (round-trips with parse_dimacs)."""
    lines = []
    if comment:
        lines.extend(f"c {part}" for part in comment.splitlines())
    lines.append(f"p edge {g.n} {g.edge_count()}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_labels(text: str, g: Graph) -> LabelledGraph:
    """Parse ``l u v k`` lines into a labelling of ``g``.

    Every edge of ``g`` must receive exactly one label; the label count is
    the largest ``k`` seen.
    """
    assignments: dict[tuple[int, int], int] = {}
    max_label = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tokens = line.split()
        if tokens[0] != "l" or len(tokens) != 4:
            raise ParseError(f"line {lineno}: expected 'l u v k'")
        try:
            u, v, k = int(tokens[1]), int(tokens[2]), int(tokens[3])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer field") from None
        if not (1 <= u <= g.n and 1 <= v <= g.n):
            raise ParseError(f"line {lineno}: vertex out of range 1..{g.n}")
        if k < 1:
            raise ParseError(f"line {lineno}: label must be >= 1, got {k}")
        if not g.adjacent(u - 1, v - 1):
            raise ParseError(f"line {lineno}: no edge {u} {v} in the graph")
        key = (min(u, v) - 1, max(u, v) - 1)
        if key in assignments:
            raise ParseError(f"line {lineno}: edge {u} {v} labelled twice")
        assignments[key] = k - 1
        max_label = max(max_label, k)
    for u, v in g.edges():
        if (u, v) not in assignments:
            raise ParseError(f"edge {u + 1} {v + 1} has no label line")
    return build_labelled(g, max_label, assignments)


def write_labels(lg: LabelledGraph, comment: str | None = None) -> str:
    """Render a labelling to label-file text."""
    lines = []
    if comment:
        lines.extend(f"c {part}" for part in comment.splitlines())
    lines.extend(
        f"l {u + 1} {v + 1} {label + 1}" for (u, v), label in sorted(lg.edge_label_map().items())
    )
    return "\n".join(lines) + "\n"


def random_labels(g: Graph, num_labels: int, seed: int) -> LabelledGraph:
    """Allocate one random label per edge, reproducibly from the seed.

    Edges consume one splitmix64 value each in canonical order, so the
    labelling depends only on (graph, num_labels, seed).
    """
    if not 1 <= num_labels <= 64:
        raise ValueError(f"num_labels must be in [1, 64], got {num_labels}")
    state = seed & _MASK64
    assignments: dict[tuple[int, int], int] = {}
    for u, v in g.edges():
        value, state = splitmix_next(state)
        assignments[(u, v)] = value % num_labels
    return build_labelled(g, num_labels, assignments)


def resolve_budget(num_labels: int, budget: int | None = None, budget_pct: int | None = None) -> int:
    """Resolve an explicit budget or a percentage of the label count.

    Percentages (25, 50 or 75) round half away from zero with a floor of 1.
    """
    if (budget is None) == (budget_pct is None):
        raise ValueError("exactly one of budget and budget_pct is required")
    if budget is not None:
        if budget < 1:
            raise ValueError(f"budget must be >= 1, got {budget}")
        return budget
    if budget_pct not in (25, 50, 75):
        raise ValueError(f"budget percentage must be 25, 50 or 75, got {budget_pct}")
    return max(1, (budget_pct * num_labels + 50) // 100)


@dataclass
class InstanceSpec:
    """A solvable instance: graph path, one label source, one budget form."""

    graph_path: Path
    num_labels: int | None = None
    seed: int | None = None
    label_file: Path | None = None
    budget: int | None = None
    budget_pct: int | None = None

    def __post_init__(self) -> None:
        seeded = self.num_labels is not None
        if seeded == (self.label_file is not None):
            raise ValueError("exactly one label source: --labels/--seed or --label-file")
        if seeded and self.seed is None:
            self.seed = 0
        if (self.budget is None) == (self.budget_pct is None):
            raise ValueError("exactly one of budget and budget_pct is required")

    def load(self) -> tuple[LabelledGraph, int]:
        """Read the graph, attach labels, and resolve the budget."""
        graph = parse_dimacs(Path(self.graph_path).read_text())
        if self.label_file is not None:
            lg = parse_labels(Path(self.label_file).read_text(), graph)
        else:
            lg = random_labels(graph, self.num_labels, self.seed)
        return lg, resolve_budget(lg.num_labels, self.budget, self.budget_pct)


def fixture_path(name: str) -> Path:
    """Path of a bundled example file (fig1.clq, fig1.lab, fig2.clq)."""
    return Path(str(resources.files("labelled_clique") / "data" / name))
