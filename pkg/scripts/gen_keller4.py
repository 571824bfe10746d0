#!/usr/bin/env python3
"""Write keller4.clq: 171 vertices, 9435 edges.

The DIMACS keller4 instance is the subgraph of the 4-dimensional Keller
graph induced on the neighbourhood of one vertex.  Keller graph: vertices
are 4-tuples over {0,1,2,3}; two tuples are adjacent iff some coordinate
differs by exactly 2 (mod 4) and they differ in at least two coordinates.
This reproduces the instance up to vertex numbering, which is all the
solver's degree-ordering preprocessing depends on.

Usage: python scripts/gen_keller4.py [out.clq]
"""

import sys
from itertools import product


def keller4_edges():
    def adjacent(u, v):
        if u == v:
            return False
        diff_two = any((a - b) % 4 == 2 for a, b in zip(u, v))
        return diff_two and sum(1 for a, b in zip(u, v) if a != b) >= 2

    origin = (0, 0, 0, 0)
    vertices = [t for t in product(range(4), repeat=4) if adjacent(origin, t)]
    n = len(vertices)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if adjacent(vertices[i], vertices[j])
    ]
    return n, edges


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "keller4.clq"
    n, edges = keller4_edges()
    with open(out, "w") as fh:
        fh.write("c keller4: neighbourhood subgraph of the 4-dimensional Keller graph\n")
        fh.write(f"p edge {n} {len(edges)}\n")
        for u, v in edges:
            fh.write(f"e {u + 1} {v + 1}\n")
    print(f"wrote {out}: n={n} m={len(edges)}")


if __name__ == "__main__":
    main()
