"""Separating-hyperplane decompositions of edge polytopes.

A candidate hyperplane is a weight vector assigning -1, 0, or +1 to every
vertex; an edge's sign is the sign of its endpoint weights' sum.  A weight
vector is accepted when it produces at least one positive and one negative
edge and every (positive, negative) edge pair is cycle-compatible; accepted
vectors induce a decomposition of the polytope into the pieces spanned by
the nonnegative and the nonpositive edges.

Two independent routes decide decomposability: a seeded backtracking search
with a failed-pair memo (`is_decomposable`), and brute-force enumeration of
all normalized weight vectors (`enumerate_decompositions`), which is the
ground-truth oracle and is vectorized with numpy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import CapExceededError
from .graph import Edge, PartSpec, SimpleGraph, bipartition, canonical_edge, is_connected
from .polytope import cycle_compatible, has_four_cycle

Weights = tuple[int, ...]

#: Brute-force enumeration visits ~3^d/2 weight vectors; refuse above this.
DEFAULT_ENUM_CAP = 14


def sign(x: int) -> int:
    return (x > 0) - (x < 0)


def edge_sign(w: Sequence[int], e: Edge) -> int:
    """Sign of the sum of the two endpoint weights, allowing 0."""
    u, v = e
    if not (1 <= u <= len(w) and 1 <= v <= len(w)):
        raise ValueError(f"edge ({u},{v}) out of range for {len(w)} weights")
    return sign(w[u - 1] + w[v - 1])


def weight_type(w: Sequence[int]) -> str:
    """"I" when no weight is zero, "II" otherwise."""
    return "II" if 0 in w else "I"


def is_normalized(w: Sequence[int]) -> bool:
    """First nonzero weight is +1 (quotients the global sign flip)."""
    for x in w:
        if x != 0:
            return x > 0
    return False


def normalize_sign(w: Sequence[int]) -> Weights:
    return tuple(w) if is_normalized(w) else tuple(-x for x in w)


@dataclass(frozen=True)
class SignAssignment:
    """Edge signs induced by an accepted weight vector, with tallies."""

    signs: dict[Edge, int]
    positive: tuple[Edge, ...]
    negative: tuple[Edge, ...]
    zero: tuple[Edge, ...]


@dataclass(frozen=True)
class WeightRejection:
    """Why a weight vector fails, with a witness pair for compatibility."""

    reason: str  # "no-positive-edge" | "no-negative-edge" | "incompatible-pair"
    witness: Optional[tuple[Edge, Edge]] = None  # (positive edge, negative edge)


def sign_assignment(G: SimpleGraph, w: Sequence[int]) -> SignAssignment:
    signs = {e: edge_sign(w, e) for e in G.edge_list()}
    pos = tuple(e for e, s in signs.items() if s > 0)
    neg = tuple(e for e, s in signs.items() if s < 0)
    zero = tuple(e for e, s in signs.items() if s == 0)
    return SignAssignment(signs, pos, neg, zero)


def validate_weights(G: SimpleGraph, w: Sequence[int]) -> SignAssignment | WeightRejection:
    """Accept iff there is a positive edge, a negative edge, and every
    (positive, negative) pair is cycle-compatible."""
    if len(w) != G.d:
        raise ValueError(f"expected {G.d} weights, got {len(w)}")
    if any(x not in (-1, 0, 1) for x in w):
        raise ValueError("weights must lie in {-1, 0, 1}")
    if not is_connected(G):
        raise ValueError("weight validation requires a connected graph")
    sa = sign_assignment(G, w)
    if not sa.positive:
        return WeightRejection("no-positive-edge")
    if not sa.negative:
        return WeightRejection("no-negative-edge")
    for e in sa.positive:
        for f in sa.negative:
            if not cycle_compatible(G, e, f):
                return WeightRejection("incompatible-pair", (e, f))
    return sa


@dataclass(frozen=True, order=True)
class Decomposition:
    """Unordered pair of edge sets covering E(G) and overlapping exactly on
    the zero edges; the lexicographically smaller set is stored first, so
    equal decompositions compare equal regardless of sign orientation."""

    d: int
    e_plus: tuple[Edge, ...]
    e_minus: tuple[Edge, ...]

    @staticmethod
    def from_edge_sets(d: int, plus: Iterable[Edge], minus: Iterable[Edge]) -> "Decomposition":
        a, b = tuple(sorted(set(plus))), tuple(sorted(set(minus)))
        if b < a:
            a, b = b, a
        return Decomposition(d, a, b)

    def zero_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(set(self.e_plus) & set(self.e_minus)))

    def plus_graph(self) -> SimpleGraph:
        return SimpleGraph(self.d, self.e_plus)

    def minus_graph(self) -> SimpleGraph:
        return SimpleGraph(self.d, self.e_minus)


@dataclass(frozen=True)
class DecompositionWitness:
    weights: Weights
    decomposition: Decomposition
    type_tag: str  # "I" | "II"


def _decomposition_from_assignment(G: SimpleGraph, sa: SignAssignment) -> Decomposition:
    plus = (e for e in G.edge_list() if sa.signs[e] >= 0)
    minus = (e for e in G.edge_list() if sa.signs[e] <= 0)
    return Decomposition.from_edge_sets(G.d, plus, minus)


def canonical_decomposition(G: SimpleGraph, w: Sequence[int]) -> Decomposition:
    """Decomposition induced by an accepted weight vector: the nonnegative
    edges versus the nonpositive edges, canonically ordered."""
    sa = validate_weights(G, w)
    if isinstance(sa, WeightRejection):
        raise ValueError(f"weights rejected: {sa.reason} {sa.witness or ''}")
    return _decomposition_from_assignment(G, sa)


# ---------------------------------------------------------------------------
# seeded backtracking search


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Search:
    """Backtracking search for an accepted weight vector of one type.

    Seeds run over ordered pairs (negative edge, positive edge) of
    vertex-disjoint cycle-compatible edges; the frontier only ever assigns a
    vertex adjacent to already-weighted vertices.  Every newly nonzero edge
    is checked against all opposite-sign edges, both for cycle compatibility
    and against the memo F of seed pairs whose subtree was exhausted.
    """

    def __init__(self, G: SimpleGraph, type2: bool):
        self.G = G
        self.type2 = type2
        self.edges = G.edge_list()
        self.eidx = {e: i for i, e in enumerate(self.edges)}
        n = len(self.edges)
        self.incompat = [0] * n
        self.disjoint = [0] * n
        for i, e in enumerate(self.edges):
            for j in range(i + 1, n):
                f = self.edges[j]
                if not cycle_compatible(G, e, f):
                    self.incompat[i] |= 1 << j
                    self.incompat[j] |= 1 << i
                if not (set(e) & set(f)):
                    self.disjoint[i] |= 1 << j
                    self.disjoint[j] |= 1 << i
        self.weights: list[Optional[int]] = [None] * (G.d + 1)
        self.assigned = 0
        self.pos_mask = 0
        self.neg_mask = 0
        self.failed: set[tuple[int, int]] = set()

    # -- incremental assignment ------------------------------------------

    def _assign(self, v: int, x: int) -> Optional[list[tuple[int, int]]]:
        """Set weight x on v, updating forced edge signs; returns the list of
        (edge id, sign) it added, or None after rolling back on conflict."""
        self.weights[v] = x
        self.assigned += 1
        added: list[tuple[int, int]] = []
        for u in self.G.adj[v]:
            wu = self.weights[u]
            if wu is None:
                continue
            s = sign(x + wu)
            if s == 0:
                continue
            eid = self.eidx[canonical_edge(u, v)]
            opposite = self.neg_mask if s > 0 else self.pos_mask
            if self.incompat[eid] & opposite:
                self._rollback(v, added)
                return None
            if self.failed:
                pairs = (
                    ((f, eid) for f in _iter_bits(opposite))
                    if s > 0
                    else ((eid, f) for f in _iter_bits(opposite))
                )
                if any(p in self.failed for p in pairs):
                    self._rollback(v, added)
                    return None
            if s > 0:
                self.pos_mask |= 1 << eid
            else:
                self.neg_mask |= 1 << eid
            added.append((eid, s))
        return added

    def _rollback(self, v: int, added: list[tuple[int, int]]) -> None:
        for eid, s in added:
            if s > 0:
                self.pos_mask &= ~(1 << eid)
            else:
                self.neg_mask &= ~(1 << eid)
        self.weights[v] = None
        self.assigned -= 1

    # -- frontier ----------------------------------------------------------

    def _frontier_vertex(self) -> Optional[int]:
        want_nonzero = self.type2
        for v in self.G.vertices():
            if self.weights[v] is not None:
                continue
            for u in self.G.adj[v]:
                wu = self.weights[u]
                if wu is not None and (not want_nonzero or wu != 0):
                    return v
        return None

    def _extend(self) -> bool:
        if self.assigned == self.G.d:
            return True
        v = self._frontier_vertex()
        if v is None:
            if not self.type2:
                return False  # connected graph: cannot happen before full assignment
            # no unset vertex borders a +-1 vertex: zero-fill completes it
            for u in self.G.vertices():
                if self.weights[u] is None:
                    added = self._assign(u, 0)
                    assert added is not None and not added
            return True
        if self.type2:
            choices = [0]
            if all(self.weights[u] != 1 for u in self.G.adj[v]):
                choices.append(1)
            if all(self.weights[u] != -1 for u in self.G.adj[v]):
                choices.append(-1)
        else:
            choices = [1, -1]
        for x in choices:
            added = self._assign(v, x)
            if added is not None:
                if self._extend():
                    return True
                self._rollback(v, added)
        return False

    # -- seeds ---------------------------------------------------------------

    def _try_seed(self, assignments: list[tuple[int, int]]) -> Optional[Weights]:
        applied: list[tuple[int, list[tuple[int, int]]]] = []
        ok = True
        for v, x in assignments:
            added = self._assign(v, x)
            if added is None:
                ok = False
                break
            applied.append((v, added))
        if ok and self._extend():
            return tuple(self.weights[1:])  # success path leaves weights set
        for v, added in reversed(applied):
            self._rollback(v, added)
        return None

    def run(self) -> Optional[Weights]:
        n = len(self.edges)
        seed_signatures = (
            [((-1, 0), (1, 0)), ((-1, 0), (0, 1)), ((0, -1), (1, 0)), ((0, -1), (0, 1))]
            if self.type2
            else [((-1, -1), (1, 1))]
        )
        for i_neg in range(n):
            for i_pos in range(n):
                if i_pos == i_neg:
                    continue
                if not (self.disjoint[i_neg] >> i_pos) & 1:
                    continue
                if (self.incompat[i_neg] >> i_pos) & 1:
                    continue
                if (i_neg, i_pos) in self.failed:
                    continue
                a, b = self.edges[i_neg]
                c, e = self.edges[i_pos]
                for (wa, wb), (wc, we) in seed_signatures:
                    result = self._try_seed([(a, wa), (b, wb), (c, wc), (e, we)])
                    if result is not None:
                        return result
                self.failed.add((i_neg, i_pos))
        return None


def is_decomposable(G: SimpleGraph, mode: str = "any") -> Optional[DecompositionWitness]:
    """Search for an accepted weight vector of the requested type; None when
    no decomposition of that type exists.

    Degenerate inputs short-circuit: fewer than 4 vertices or no 4-cycle
    means indecomposable before any search runs.
    """
    if mode not in ("any", "type1", "type2"):
        raise ValueError(f"bad mode {mode!r}")
    if not is_connected(G):
        raise ValueError("decomposability requires a connected graph")
    if G.d < 4 or has_four_cycle(G) is None:
        return None
    searches = {"any": (False, True), "type1": (False,), "type2": (True,)}[mode]
    for type2 in searches:
        w = _Search(G, type2).run()
        if w is not None:
            tag = weight_type(w)
            assert (tag == "II") == type2
            return DecompositionWitness(w, canonical_decomposition(G, w), tag)
    return None


# ---------------------------------------------------------------------------
# brute-force enumeration (the oracle)


def _check_enum_cap(G: SimpleGraph, max_vertices: Optional[int]) -> None:
    cap = DEFAULT_ENUM_CAP if max_vertices is None else max_vertices
    if G.d > cap:
        raise CapExceededError(
            f"weight enumeration capped at {cap} vertices (graph has {G.d}); "
            "pass a larger max_vertices to override"
        )


def _normalized_weight_blocks(d: int, chunk: int = 1 << 17):
    """Chunks of all weight vectors whose first nonzero entry is +1, as int8
    arrays, in a fixed order (leading-zero count ascending, then suffix
    digits counting up with -1 < 0 < +1)."""
    for lead in range(d):
        total = 3 ** (d - lead - 1)
        start = 0
        while start < total:
            stop = min(start + chunk, total)
            idx = np.arange(start, stop, dtype=np.int64)
            block = np.zeros((stop - start, d), dtype=np.int8)
            block[:, lead] = 1
            rem = idx
            for pos in range(d - 1, lead, -1):
                block[:, pos] = (rem % 3).astype(np.int8) - 1
                rem = rem // 3
            yield block
            start = stop


def enumerate_accepted_weight_vectors(
    G: SimpleGraph, max_vertices: Optional[int] = None
) -> list[Weights]:
    """All normalized accepted weight vectors, brute force over ~3^d/2
    candidates; the acceptance test is vectorized but identical to
    validate_weights."""
    if not is_connected(G):
        raise ValueError("weight enumeration requires a connected graph")
    _check_enum_cap(G, max_vertices)
    edges = G.edge_list()
    n = len(edges)
    if n == 0:
        return []
    assert n < 256  # matmul accumulates counts in uint8
    u_idx = np.array([e[0] - 1 for e in edges])
    v_idx = np.array([e[1] - 1 for e in edges])
    not_compat = np.zeros((n, n), dtype=np.uint8)
    for i in range(n):
        for j in range(i + 1, n):
            if not cycle_compatible(G, edges[i], edges[j]):
                not_compat[i, j] = 1
                not_compat[j, i] = 1
    accepted: list[Weights] = []
    for block in _normalized_weight_blocks(G.d):
        signs = np.sign(block[:, u_idx] + block[:, v_idx])
        pos = signs > 0
        neg = signs < 0
        ok = pos.any(axis=1) & neg.any(axis=1)
        if not ok.any():
            continue
        pos, neg = pos[ok], neg[ok]
        clash = pos.astype(np.uint8) @ not_compat
        good = ~((clash > 0) & neg).any(axis=1)
        for row in block[ok][good]:
            accepted.append(tuple(int(x) for x in row))
    return accepted


def enumerate_decompositions(
    G: SimpleGraph, max_vertices: Optional[int] = None
) -> list[Decomposition]:
    """Ground-truth set of decompositions: every normalized accepted weight
    vector mapped to its decomposition, deduplicated, sorted."""
    found: set[Decomposition] = set()
    for w in enumerate_accepted_weight_vectors(G, max_vertices=max_vertices):
        found.add(_decomposition_from_assignment(G, sign_assignment(G, w)))
    return sorted(found)


# ---------------------------------------------------------------------------
# complete multipartite counting


@dataclass(frozen=True)
class MultipartiteCount:
    """Closed-form decomposition count for a complete multipartite graph.

    The formula is returned exactly as printed, 2^(d-1) - sum(2^|Vi| - 1) - 1;
    it can go negative for degenerate shapes (warning flag set), and at k = 2
    it is known to sit one below the enumeration oracle, which is treated as
    ground truth by the verification harness.
    """

    value: int
    warning: bool


def count_multipartite_decompositions(parts: Sequence[int] | PartSpec) -> MultipartiteCount:
    spec = parts if isinstance(parts, PartSpec) else PartSpec(tuple(parts))
    value = 2 ** (spec.d - 1) - sum(2**p - 1 for p in spec.parts) - 1
    return MultipartiteCount(value=value, warning=value < 0)


# ---------------------------------------------------------------------------
# type II -> type I lifting on bipartite graphs


def lift_type2_to_type1(G: SimpleGraph, w: Sequence[int]) -> Weights:
    """On a connected bipartite graph, turn an accepted type II vector into an
    accepted type I vector with the identical decomposition.

    The +1 vertices all sit in one side of the bipartition and the -1
    vertices in the other; zeros on the minus side become +1 and zeros on
    the plus side become -1, which flips no edge sign.
    """
    sides = bipartition(G)
    if sides is None:
        raise ValueError("lift requires a bipartite graph")
    sa = validate_weights(G, w)
    if isinstance(sa, WeightRejection):
        raise ValueError(f"weights rejected: {sa.reason}")
    if weight_type(w) != "II":
        raise ValueError("lift expects a type II (some zero weight) vector")
    plus = {v for v in G.vertices() if w[v - 1] == 1}
    minus = {v for v in G.vertices() if w[v - 1] == -1}
    left, right = sides
    if plus <= left and minus <= right:
        plus_side = left
    elif plus <= right and minus <= left:
        plus_side = right
    else:
        raise RuntimeError("accepted type II weights straddle the bipartition")
    lifted = tuple(
        w[v - 1] if w[v - 1] != 0 else (-1 if v in plus_side else 1)
        for v in G.vertices()
    )
    lifted_sa = validate_weights(G, lifted)
    if isinstance(lifted_sa, WeightRejection) or _decomposition_from_assignment(
        G, lifted_sa
    ) != _decomposition_from_assignment(G, sa):
        raise RuntimeError("lift failed to preserve the decomposition")
    return lifted
