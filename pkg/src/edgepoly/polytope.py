"""The edge polytope of a graph, handled combinatorially.

Each graph edge (i, j) maps to the 0/1 lattice point with ones exactly at
coordinates i and j.  Whether the segment between two such points is an edge
of the polytope reduces to a pairwise graph test ("cycle compatibility"),
and the polytope's affine dimension is an exact integer rank.
"""

from __future__ import annotations

from typing import Optional

from .graph import Edge, SimpleGraph
from .linalg import integer_rank

LatticePoint = tuple[int, ...]


def rho(e: Edge, d: int) -> LatticePoint:
    """Indicator vector of the edge's two endpoints in dimension d."""
    u, v = e
    if not (1 <= u <= d and 1 <= v <= d):
        raise ValueError(f"edge ({u},{v}) out of range 1..{d}")
    if u == v:
        raise ValueError("loop edge has no lattice point")
    point = [0] * d
    point[u - 1] = 1
    point[v - 1] = 1
    return tuple(point)


def _require_edges(G: SimpleGraph, e: Edge, f: Edge) -> None:
    if e not in G.edges or f not in G.edges:
        raise ValueError(f"{e} and {f} must both be edges of G")
    if e == f:
        raise ValueError("need two distinct edges")


def cycle_compatible(G: SimpleGraph, e: Edge, f: Edge) -> bool:
    """True iff e and f are vertex-disjoint and the four endpoints carry a
    4-cycle in the induced subgraph.

    Given that e and f are present, a 4-cycle on the four endpoints exists
    exactly when one of the two complementary perfect matchings is fully
    present, which makes this an O(1) adjacency test.  This pairwise test is
    the hot path of both the decomposition search and the brute-force oracle.
    """
    _require_edges(G, e, f)
    i, j = e
    k, l = f
    if i in (k, l) or j in (k, l):
        return False
    return (G.has_edge(j, k) and G.has_edge(l, i)) or (
        G.has_edge(j, l) and G.has_edge(k, i)
    )


def is_polytope_edge(G: SimpleGraph, e: Edge, f: Edge) -> bool:
    """Whether the segment between the two lattice points is an edge of the
    polytope: exactly the non-cycle-compatible pairs."""
    return not cycle_compatible(G, e, f)


def polytope_edges(G: SimpleGraph) -> list[tuple[Edge, Edge]]:
    """All unordered pairs {e, f} spanning polytope edges, in sorted order."""
    edges = G.edge_list()
    return [
        (e, f)
        for idx, e in enumerate(edges)
        for f in edges[idx + 1 :]
        if is_polytope_edge(G, e, f)
    ]


def polytope_dimension(G: SimpleGraph) -> int:
    """Affine dimension of the edge polytope: exact integer rank of the
    difference vectors against the first edge point."""
    edges = G.edge_list()
    if not edges:
        raise ValueError("graph has no edges; the polytope is empty")
    points = [rho(e, G.d) for e in edges]
    base = points[0]
    diffs = [[p[i] - base[i] for i in range(G.d)] for p in points[1:]]
    if not diffs:
        return 0
    return integer_rank(diffs)


def compatibility_table(G: SimpleGraph) -> dict[tuple[Edge, Edge], bool]:
    """Pairwise cycle-compatibility for all ordered edge pairs; immutable
    once built, safe to share across threads."""
    edges = G.edge_list()
    table: dict[tuple[Edge, Edge], bool] = {}
    for idx, e in enumerate(edges):
        for f in edges[idx + 1 :]:
            c = cycle_compatible(G, e, f)
            table[(e, f)] = c
            table[(f, e)] = c
    return table


def has_four_cycle(G: SimpleGraph) -> Optional[tuple[Edge, Edge]]:
    """A cycle-compatible edge pair if one exists (equivalently, G contains
    a 4-cycle), else None."""
    edges = G.edge_list()
    for idx, e in enumerate(edges):
        for f in edges[idx + 1 :]:
            if cycle_compatible(G, e, f):
                return (e, f)
    return None
