"""Combinatorial checkers for the two polytope properties tracked under
decomposition: normality and quadratic generation of the toric ideal.

Normality is decided by the odd cycle condition: every two vertex-disjoint
odd cycles must be joined by a bridge.  Quadratic generation is decided by
two conditions: every even cycle of length >= 6 carries an even chord or an
odd-triple (three chords of which at least two cross), and any two odd
cycles are 2-connected by bridges.  Both checkers return re-checkable
violation certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .graph import (
    Cycle,
    SimpleGraph,
    bridges_between,
    chords_cross,
    cycle_chords,
    cycle_has_chord,
    cycle_in_graph,
    enumerate_simple_cycles,
    is_connected,
)


@dataclass(frozen=True)
class NormalityReport:
    normal: bool
    violation: Optional[tuple[Cycle, Cycle]] = None  # chordless, disjoint, bridgeless


@dataclass(frozen=True)
class QuadraticViolation:
    kind: str  # "even-cycle" | "odd-pair-one-node" | "odd-pair-disjoint"
    cycle_a: Cycle
    cycle_b: Optional[Cycle] = None
    shared_vertex: Optional[int] = None


@dataclass(frozen=True)
class QuadraticReport:
    quadratic: bool
    violation: Optional[QuadraticViolation] = None


def _vertex_mask(c: Cycle) -> int:
    m = 0
    for v in c.vertices:
        m |= 1 << v
    return m


def _first_bridgeless_disjoint_pair(
    G: SimpleGraph, pool: Sequence[Cycle]
) -> Optional[tuple[Cycle, Cycle]]:
    masks = [_vertex_mask(c) for c in pool]
    for i in range(len(pool)):
        for j in range(i + 1, len(pool)):
            if masks[i] & masks[j]:
                continue
            if not bridges_between(G, pool[i], pool[j]):
                return (pool[i], pool[j])
    return None


def odd_cycle_condition(
    G: SimpleGraph,
    *,
    exhaustive: bool = False,
    max_vertices: Optional[int] = None,
    cycles: Optional[Sequence[Cycle]] = None,
) -> NormalityReport:
    """Normality check: fails iff two vertex-disjoint odd cycles have no
    bridge between them.

    Checking chordless odd cycles suffices: a chord of an odd cycle cuts off
    a shorter odd cycle on a vertex subset, which inherits disjointness and
    bridgelessness, so a minimal violating pair is chordless.  The exhaustive
    mode re-decides the condition over all simple odd cycles and exists as a
    cross-validation oracle for that reduction.

    `cycles` may carry a precomputed enumerate_simple_cycles(G) result.
    """
    if not is_connected(G):
        raise ValueError("the odd cycle condition is defined for connected graphs")
    if cycles is None:
        odd = enumerate_simple_cycles(G, parity="odd", max_vertices=max_vertices)
    else:
        odd = sorted((c for c in cycles if c.is_odd), key=lambda c: c.vertices)
    chordless = [c for c in odd if not cycle_has_chord(G, c)]
    violation = _first_bridgeless_disjoint_pair(G, chordless)
    if exhaustive:
        any_violation = _first_bridgeless_disjoint_pair(G, odd)
        if (any_violation is None) != (violation is None):
            raise RuntimeError(
                "chordless reduction disagreed with the exhaustive odd-cycle scan"
            )
    return NormalityReport(normal=violation is None, violation=violation)


def even_cycle_ok(G: SimpleGraph, C: Cycle, *, odd_chords_only: bool = False) -> bool:
    """Condition on one long even cycle: an even chord exists, or some three
    distinct chords include a crossing pair (an odd-triple).

    With `odd_chords_only` the triple is restricted to odd chords.  The two
    readings coincide: whenever any even chord exists the first branch has
    already answered, and otherwise every chord is odd.
    """
    if C.length % 2 != 0:
        raise ValueError("chord conditions apply to even cycles only")
    if C.length < 6:
        raise ValueError("only long cycles (length >= 6) are checked")
    if not cycle_in_graph(G, C):
        raise ValueError("C is not a cycle of G")
    chords = cycle_chords(G, C)
    if any(ch.parity == "even" for ch in chords):
        return True
    pool = [ch for ch in chords if ch.parity == "odd"] if odd_chords_only else chords
    if len(pool) < 3:
        return False
    return any(chords_cross(C, a, b) for a, b in combinations(pool, 2))


def odd_pair_ok(G: SimpleGraph, C1: Cycle, C2: Cycle) -> bool:
    """Bridge requirement on a pair of distinct odd cycles: sharing two or
    more vertices asks nothing; sharing exactly one vertex needs a bridge
    avoiding it; disjoint cycles need two distinct bridges."""
    if C1 == C2:
        raise ValueError("need two distinct odd cycles")
    for c in (C1, C2):
        if not c.is_odd:
            raise ValueError("both cycles must be odd")
        if not cycle_in_graph(G, c):
            raise ValueError("cycle is not a cycle of G")
    shared = C1.vertex_set() & C2.vertex_set()
    if len(shared) >= 2:
        return True
    if len(shared) == 1:
        (v,) = shared
        return bool(bridges_between(G, C1, C2, forbidden=v))
    return len(bridges_between(G, C1, C2)) >= 2


def quadratic_condition(
    G: SimpleGraph,
    *,
    odd_chords_only: bool = False,
    max_vertices: Optional[int] = None,
    cycles: Optional[Sequence[Cycle]] = None,
) -> QuadraticReport:
    """Quadratic-generation check over every long even cycle and every pair
    of distinct odd cycles; returns the first failing certificate in
    canonical order (long even cycles first, then odd pairs).

    The odd-pair predicate depends only on the two vertex sets, and pairs
    sharing two or more vertices always pass, so distinct cycles on the same
    vertex set never matter: it suffices to scan one representative cycle
    per vertex set and only the pairs overlapping in at most one vertex.
    """
    if not is_connected(G):
        raise ValueError("the quadratic condition is defined for connected graphs")
    if cycles is None:
        cycles = enumerate_simple_cycles(G, max_vertices=max_vertices)
    cycles = sorted(cycles, key=lambda c: c.vertices)
    for c in cycles:
        if c.is_even and c.length >= 6:
            if not even_cycle_ok(G, c, odd_chords_only=odd_chords_only):
                return QuadraticReport(False, QuadraticViolation("even-cycle", c))
    reps: dict[int, Cycle] = {}
    for c in cycles:
        if c.is_odd:
            reps.setdefault(_vertex_mask(c), c)
    items = sorted(reps.items(), key=lambda kv: kv[1].vertices)
    for i in range(len(items)):
        mask_a, cyc_a = items[i]
        for j in range(i + 1, len(items)):
            mask_b, cyc_b = items[j]
            inter = mask_a & mask_b
            shared_count = inter.bit_count()
            if shared_count >= 2:
                continue
            if shared_count == 1:
                v = inter.bit_length() - 1
                if not bridges_between(G, cyc_a, cyc_b, forbidden=v):
                    return QuadraticReport(
                        False,
                        QuadraticViolation("odd-pair-one-node", cyc_a, cyc_b, v),
                    )
            else:
                if len(bridges_between(G, cyc_a, cyc_b)) < 2:
                    return QuadraticReport(
                        False, QuadraticViolation("odd-pair-disjoint", cyc_a, cyc_b)
                    )
    return QuadraticReport(True)


def recheck_violation(G: SimpleGraph, violation: QuadraticViolation) -> bool:
    """Replay the predicate behind a certificate; True means the violation
    reproduces (the predicate fails)."""
    if violation.kind == "even-cycle":
        return not even_cycle_ok(G, violation.cycle_a)
    assert violation.cycle_b is not None
    return not odd_pair_ok(G, violation.cycle_a, violation.cycle_b)
