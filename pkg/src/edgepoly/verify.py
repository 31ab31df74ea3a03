"""Verification harness: runs every structural claim the library relies on
against single graphs and generated corpora, collecting violations instead
of aborting.

Checked per graph: search/enumeration agreement, the 4-cycle necessity for
decomposability, connectivity/spanning/equal-dimension of decomposition
pieces, the normality equivalence between a graph and its pieces, the
forward quadratic implication (both pieces quadratic forces the whole), the
sign-parity property on even cycles with exactly one positive and one
negative edge, injectivity of normalized all-nonzero weight vectors, the
type II to type I lift on bipartite graphs, and the closed-form count for
complete multipartite graphs.  The harness reports; it never patches.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .criteria import odd_cycle_condition, quadratic_condition
from .decompose import (
    Decomposition,
    canonical_decomposition,
    count_multipartite_decompositions,
    edge_sign,
    enumerate_accepted_weight_vectors,
    is_decomposable,
    lift_type2_to_type1,
    weight_type,
)
from .graph import (
    Cycle,
    PartSpec,
    SimpleGraph,
    bipartition,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    enumerate_simple_cycles,
    is_connected,
    path_graph,
    random_connected,
)
from .polytope import has_four_cycle, polytope_dimension

SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# corpus construction


@dataclass(frozen=True)
class CorpusGraph:
    name: str
    graph: SimpleGraph
    parts: Optional[tuple[int, ...]] = None  # set for complete multipartite entries


@dataclass(frozen=True)
class CorpusSpec:
    """Reproducible corpus: identical spec yields the identical graph list."""

    seed: int = 7
    random_count: int = 120
    min_vertices: int = 4
    max_vertices: int = 9
    edge_probabilities: tuple[float, ...] = (0.3, 0.5, 0.7)
    multipartite_max_vertices: int = 7
    include_named: bool = True


def _partitions(n: int, max_part: Optional[int] = None):
    if n == 0:
        yield ()
        return
    cap = n if max_part is None else min(n, max_part)
    for first in range(cap, 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def all_multipartite_specs(max_d: int, min_k: int = 2) -> list[PartSpec]:
    """Every vertex partition with at least min_k parts, up to max_d vertices."""
    out = []
    for d in range(2, max_d + 1):
        for parts in _partitions(d):
            if len(parts) >= min_k:
                out.append(PartSpec(parts))
    return out


def two_triangles_with_bridge() -> SimpleGraph:
    return SimpleGraph(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (3, 4)])


def two_triangles_with_path() -> SimpleGraph:
    return SimpleGraph(
        7, [(1, 2), (1, 3), (2, 3), (5, 6), (5, 7), (6, 7), (3, 4), (4, 5)]
    )


def square_with_two_ears() -> SimpleGraph:
    """A 4-cycle with two pendant triangles: has a 4-cycle yet admits no
    decomposition, because forcing either opposite edge pair nonzero
    propagates zeros into a contradiction."""
    return SimpleGraph(
        6, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (2, 5), (2, 6), (3, 6)]
    )


def named_graphs() -> list[CorpusGraph]:
    out = [
        CorpusGraph("path-3", path_graph(3)),
        CorpusGraph("path-5", path_graph(5)),
        CorpusGraph("cycle-4", cycle_graph(4), parts=(2, 2)),
        CorpusGraph("cycle-5", cycle_graph(5)),
        CorpusGraph("cycle-6", cycle_graph(6)),
        CorpusGraph("cycle-7", cycle_graph(7)),
        CorpusGraph("complete-4", complete_graph(4), parts=(1, 1, 1, 1)),
        CorpusGraph("complete-5", complete_graph(5), parts=(1, 1, 1, 1, 1)),
        CorpusGraph("complete-6", complete_graph(6), parts=(1, 1, 1, 1, 1, 1)),
        CorpusGraph("two-triangles-bridge", two_triangles_with_bridge()),
        CorpusGraph("two-triangles-path", two_triangles_with_path()),
        CorpusGraph("square-two-ears", square_with_two_ears()),
    ]
    return out


def build_corpus(spec: CorpusSpec) -> list[CorpusGraph]:
    out: list[CorpusGraph] = []
    if spec.include_named:
        out.extend(named_graphs())
    for ps in all_multipartite_specs(spec.multipartite_max_vertices):
        name = "multipartite-" + "-".join(str(p) for p in ps.parts)
        out.append(CorpusGraph(name, complete_multipartite(ps), parts=ps.parts))
    span = spec.max_vertices - spec.min_vertices + 1
    for i in range(spec.random_count):
        d = spec.min_vertices + (i % span)
        p = spec.edge_probabilities[(i // span) % len(spec.edge_probabilities)]
        g = random_connected(d, p, seed=spec.seed * 100003 + i)
        out.append(CorpusGraph(f"random-{i:04d}-d{d}-p{p}", g))
    return out


# ---------------------------------------------------------------------------
# per-graph verification


@dataclass
class DecompositionCheck:
    e_plus: tuple
    e_minus: tuple
    pieces_connected_spanning: bool
    equal_dimension: bool
    normal_plus: bool
    normal_minus: bool
    quadratic_plus: bool
    quadratic_minus: bool


@dataclass
class TheoremReport:
    name: str
    d: int
    edge_count: int
    has_four_cycle: bool
    decomposable: bool
    witness_type: Optional[str]
    decomposition_count: int
    normal: bool
    quadratic: bool
    accepted_vectors: int
    type2_lifts_checked: int
    parity_checks: int
    formula_value: Optional[int]
    formula_delta: Optional[int]
    quadratic_combos: dict[str, int] = field(default_factory=dict)
    checks: list[DecompositionCheck] = field(default_factory=list)
    violated_claims: list[str] = field(default_factory=list)


def _cycles_within(cycles: Sequence[Cycle], edge_set: frozenset) -> list[Cycle]:
    return [c for c in cycles if all(e in edge_set for e in c.edges())]


def _combo_key(quad_g: bool, quad_plus: bool, quad_minus: bool) -> str:
    word = {True: "quadratic", False: "nonquadratic"}
    pieces = sorted([word[quad_plus], word[quad_minus]])
    return f"G:{word[quad_g]}|pieces:{pieces[0]},{pieces[1]}"


def verify_theorems(
    G: SimpleGraph,
    *,
    name: str = "graph",
    parts: Optional[Sequence[int]] = None,
    max_enum_vertices: Optional[int] = None,
    max_cycle_vertices: Optional[int] = None,
) -> TheoremReport:
    """Run every per-graph claim; violations are collected, never raised."""
    if not is_connected(G):
        raise ValueError("verification requires a connected graph")
    violated: list[str] = []

    def claim(key: str, ok: bool) -> None:
        if not ok and key not in violated:
            violated.append(key)

    accepted = enumerate_accepted_weight_vectors(G, max_vertices=max_enum_vertices)
    vec_decomp = [(w, canonical_decomposition(G, w)) for w in accepted]
    decomps = sorted({dec for _, dec in vec_decomp})
    witness = is_decomposable(G, "any")

    claim("search-oracle-agreement", (witness is not None) == bool(decomps))
    has4 = has_four_cycle(G) is not None
    claim("four-cycle-necessary", not decomps or has4)

    cycles = enumerate_simple_cycles(G, max_vertices=max_cycle_vertices)
    normal_g = odd_cycle_condition(G, cycles=cycles).normal
    quad_g = quadratic_condition(G, cycles=cycles).quadratic
    dim_g = polytope_dimension(G) if G.edges else None

    checks: list[DecompositionCheck] = []
    combos: dict[str, int] = {}
    for dec in decomps:
        plus, minus = dec.plus_graph(), dec.minus_graph()
        connected_spanning = is_connected(plus) and is_connected(minus)
        claim("pieces-connected-spanning", connected_spanning)
        equal_dim = (
            polytope_dimension(plus) == dim_g and polytope_dimension(minus) == dim_g
        )
        claim("pieces-equal-dimension", equal_dim)
        plus_cycles = _cycles_within(cycles, plus.edges)
        minus_cycles = _cycles_within(cycles, minus.edges)
        normal_plus = odd_cycle_condition(plus, cycles=plus_cycles).normal
        normal_minus = odd_cycle_condition(minus, cycles=minus_cycles).normal
        claim("normality-equivalence", normal_g == (normal_plus and normal_minus))
        quad_plus = quadratic_condition(plus, cycles=plus_cycles).quadratic
        quad_minus = quadratic_condition(minus, cycles=minus_cycles).quadratic
        claim("quadratic-forward", not (quad_plus and quad_minus and not quad_g))
        key = _combo_key(quad_g, quad_plus, quad_minus)
        combos[key] = combos.get(key, 0) + 1
        checks.append(
            DecompositionCheck(
                dec.e_plus,
                dec.e_minus,
                connected_spanning,
                equal_dim,
                normal_plus,
                normal_minus,
                quad_plus,
                quad_minus,
            )
        )

    # Sign parity on even cycles carrying exactly one positive and one
    # negative edge: their positions along the cycle agree mod 2.
    even_cycle_edges = [c.edges() for c in cycles if c.is_even]
    parity_checks = 0
    for w, _ in vec_decomp:
        signs = {e: edge_sign(w, e) for e in G.edge_list()}
        for ced in even_cycle_edges:
            pos_at = neg_at = None
            bad = False
            for idx, e in enumerate(ced):
                s = signs[e]
                if s > 0:
                    if pos_at is not None:
                        bad = True
                        break
                    pos_at = idx
                elif s < 0:
                    if neg_at is not None:
                        bad = True
                        break
                    neg_at = idx
            if bad or pos_at is None or neg_at is None:
                continue
            parity_checks += 1
            claim("even-cycle-sign-parity", (pos_at - neg_at) % 2 == 0)

    seen: dict[Decomposition, tuple] = {}
    for w, dec in vec_decomp:
        if weight_type(w) == "I":
            if dec in seen and seen[dec] != w:
                claim("type1-injectivity", False)
            seen.setdefault(dec, w)

    type2_checked = 0
    if bipartition(G) is not None:
        for w, dec in vec_decomp:
            if weight_type(w) == "II":
                type2_checked += 1
                try:
                    lifted = lift_type2_to_type1(G, w)
                except RuntimeError:
                    claim("type2-lift-preserves", False)
                    continue
                claim(
                    "type2-lift-preserves",
                    weight_type(lifted) == "I"
                    and canonical_decomposition(G, lifted) == dec,
                )

    formula_value = formula_delta = None
    if parts is not None:
        count = count_multipartite_decompositions(parts)
        formula_value = count.value
        formula_delta = len(decomps) - count.value
        if len(tuple(parts)) >= 3:
            claim("multipartite-count", formula_delta == 0)

    return TheoremReport(
        name=name,
        d=G.d,
        edge_count=G.edge_count,
        has_four_cycle=has4,
        decomposable=witness is not None,
        witness_type=witness.type_tag if witness else None,
        decomposition_count=len(decomps),
        normal=normal_g,
        quadratic=quad_g,
        accepted_vectors=len(accepted),
        type2_lifts_checked=type2_checked,
        parity_checks=parity_checks,
        formula_value=formula_value,
        formula_delta=formula_delta,
        quadratic_combos=combos,
        checks=checks,
        violated_claims=violated,
    )


# ---------------------------------------------------------------------------
# corpus run + JSON-ready reporting


@dataclass
class CorpusResult:
    spec: CorpusSpec
    reports: list[TheoremReport]

    @property
    def violations(self) -> list[tuple[str, str]]:
        return [
            (r.name, c) for r in self.reports for c in r.violated_claims
        ]


def corpus_verify(spec: CorpusSpec) -> CorpusResult:
    reports = [
        verify_theorems(item.graph, name=item.name, parts=item.parts)
        for item in build_corpus(spec)
    ]
    return CorpusResult(spec, reports)


def theorem_report_to_dict(report: TheoremReport, include_checks: bool = False) -> dict:
    out = {
        "name": report.name,
        "d": report.d,
        "edge_count": report.edge_count,
        "has_four_cycle": report.has_four_cycle,
        "decomposable": report.decomposable,
        "witness_type": report.witness_type,
        "decomposition_count": report.decomposition_count,
        "normal": report.normal,
        "quadratic": report.quadratic,
        "accepted_vectors": report.accepted_vectors,
        "type2_lifts_checked": report.type2_lifts_checked,
        "parity_checks": report.parity_checks,
        "formula_value": report.formula_value,
        "formula_delta": report.formula_delta,
        "quadratic_combos": dict(sorted(report.quadratic_combos.items())),
        "violated_claims": list(report.violated_claims),
    }
    if include_checks:
        out["decompositions"] = [
            {
                "e_plus": [list(e) for e in c.e_plus],
                "e_minus": [list(e) for e in c.e_minus],
                "pieces_connected_spanning": c.pieces_connected_spanning,
                "equal_dimension": c.equal_dimension,
                "normal_plus": c.normal_plus,
                "normal_minus": c.normal_minus,
                "quadratic_plus": c.quadratic_plus,
                "quadratic_minus": c.quadratic_minus,
            }
            for c in report.checks
        ]
    return out


def corpus_result_to_dict(result: CorpusResult) -> dict:
    combos: dict[str, int] = {}
    deltas_k2: dict[str, int] = {}
    for r in result.reports:
        for k, v in r.quadratic_combos.items():
            combos[k] = combos.get(k, 0) + v
        if r.formula_delta is not None:
            deltas_k2[r.name] = r.formula_delta
    return {
        "schema_version": SCHEMA_VERSION,
        "spec": {
            "seed": result.spec.seed,
            "random_count": result.spec.random_count,
            "min_vertices": result.spec.min_vertices,
            "max_vertices": result.spec.max_vertices,
            "edge_probabilities": list(result.spec.edge_probabilities),
            "multipartite_max_vertices": result.spec.multipartite_max_vertices,
            "include_named": result.spec.include_named,
        },
        "summary": {
            "graphs": len(result.reports),
            "decomposable": sum(1 for r in result.reports if r.decomposable),
            "total_decompositions": sum(
                r.decomposition_count for r in result.reports
            ),
            "violations": [
                {"graph": g, "claim": c} for g, c in result.violations
            ],
            "violation_count": len(result.violations),
            "quadratic_combos": dict(sorted(combos.items())),
            "formula_deltas": dict(sorted(deltas_k2.items())),
        },
        "graphs": [theorem_report_to_dict(r) for r in result.reports],
    }
