"""Greedy sequential colouring: branching order plus a non-decreasing bound.

Colour classes are built lowest-vertex-first: repeatedly take the lowest
set bit of the still-colourable set, give it the current colour, and knock
out its neighbours with one and-with-complement.  The ``bounds`` entry for
a vertex records how many colours were in use when it was coloured, so the
first ``i`` vertices of ``order`` are always colourable with ``bounds[i-1]``
colours, which caps any clique among them at that size.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


@dataclass
class ColourResult:
    """Vertices in colouring order with the per-prefix colour count."""

    order: list[int]
    bounds: list[int]


def colour_order_into(
    adjacency: list[int], cands: int, order: list[int], bounds: list[int]
) -> int:
    """Greedy-colour the ``cands`` bitset into caller-provided buffers.

    Returns the number of vertices written.  Buffers must hold at least
    ``cands.bit_count()`` entries; the solver reuses one pair per recursion
    depth to keep the hot path allocation-free.
    """
    m = 0
    colour = 0
    uncoloured = cands
    while uncoloured:
        colour += 1
        colourable = uncoloured
        while colourable:
            bit = colourable & -colourable
            v = bit.bit_length() - 1
            order[m] = v
            bounds[m] = colour
            m += 1
            uncoloured ^= bit
            colourable = (colourable ^ bit) & ~adjacency[v]
    return m


def colour_order(g: Graph, cands: int) -> ColourResult:
    """Colour the vertices in the ``cands`` bitset of ``g``."""
    size = cands.bit_count()
    order = [0] * size
    bounds = [0] * size
    colour_order_into(g.adjacency, cands, order, bounds)
    return ColourResult(order, bounds)
