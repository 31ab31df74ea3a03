"""Simple graphs on vertices 1..d and the cycle/chord/bridge combinatorics.

Everything downstream (polytope geometry, hyperplane decompositions, the
normality and quadratic checkers) consumes the primitives defined here:
a canonical edge representation, deterministic simple-cycle enumeration,
chord parity on even cycles, chord crossings, and bridges between cycles.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .errors import CapExceededError, ParseError

Edge = tuple[int, int]

#: Cycle enumeration refuses graphs above this many vertices unless the caller
#: raises the cap explicitly; simple-cycle counts grow super-exponentially.
DEFAULT_CYCLE_CAP = 16


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class SimpleGraph:
    """Undirected simple graph on the vertex set {1, ..., d}.

    Edges are stored canonically as pairs (u, v) with u < v.  Instances are
    immutable after construction and hashable, so they can key caches.
    Connectivity is deliberately not an invariant; operations that need it
    check it themselves.
    """

    __slots__ = ("d", "edges", "adj", "_edge_list", "_hash")

    def __init__(self, d: int, edges: Iterable[Edge] = ()):
        if d < 1:
            raise ValueError(f"vertex count must be positive, got {d}")
        canon: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge ({u},{v}) not allowed")
            if not (1 <= u <= d and 1 <= v <= d):
                raise ValueError(f"edge ({u},{v}) out of vertex range 1..{d}")
            canon.add(canonical_edge(u, v))
        self.d = d
        self.edges = frozenset(canon)
        adj: dict[int, set[int]] = {v: set() for v in range(1, d + 1)}
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
        self.adj = {v: frozenset(nb) for v, nb in adj.items()}
        self._edge_list = tuple(sorted(canon))
        self._hash = hash((d, self.edges))

    def edge_list(self) -> tuple[Edge, ...]:
        """Edges in sorted canonical order."""
        return self._edge_list

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.d + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def with_edges(self, edges: Iterable[Edge]) -> "SimpleGraph":
        """Subgraph on the same vertex set with the given edges."""
        return SimpleGraph(self.d, edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.d == other.d and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SimpleGraph(d={self.d}, edges={sorted(self.edges)})"


# ---------------------------------------------------------------------------
# parsing / rendering


_HEADER_RE = re.compile(r"^d\s*=\s*(\d+)$")


def parse_graph(text: str, fmt: str = "edge-list") -> SimpleGraph:
    """Parse a graph from text.

    ``edge-list`` is one "u v" pair per line, `#` starts a comment, and an
    optional first line "d=<n>" declares the vertex count (needed only when
    trailing vertices are isolated).  ``json`` expects an object with keys
    "d" and "edges" as produced by the CLI's ``gen --json``.
    """
    if fmt == "json":
        return _parse_json_graph(text)
    if fmt != "edge-list":
        raise ValueError(f"unknown graph format {fmt!r}")
    declared_d: Optional[int] = None
    pairs: list[Edge] = []
    seen: set[Edge] = set()
    saw_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        header = _HEADER_RE.match(line)
        if header:
            if saw_content:
                raise ParseError(f"line {lineno}: header must precede edges")
            declared_d = int(header.group(1))
            if declared_d < 1:
                raise ParseError(f"line {lineno}: vertex count must be positive")
            saw_content = True
            continue
        saw_content = True
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex label in {line!r}") from None
        if u < 1 or v < 1:
            raise ParseError(f"line {lineno}: vertex labels must be positive")
        if u == v:
            raise ParseError(f"line {lineno}: loop edge ({u},{v})")
        e = canonical_edge(u, v)
        if e in seen:
            raise ParseError(f"line {lineno}: duplicate edge ({u},{v})")
        seen.add(e)
        pairs.append(e)
    if not saw_content:
        raise ParseError("empty input: no header or edges found")
    max_seen = max((v for e in pairs for v in e), default=0)
    if declared_d is not None:
        if max_seen > declared_d:
            raise ParseError(f"header d={declared_d} smaller than largest vertex {max_seen}")
        d = declared_d
    else:
        if max_seen == 0:
            raise ParseError("no edges and no d=<n> header")
        d = max_seen
    return SimpleGraph(d, pairs)


def _parse_json_graph(text: str) -> SimpleGraph:
    import json

    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON graph: {exc}") from None
    if not isinstance(obj, dict) or "d" not in obj or "edges" not in obj:
        raise ParseError("JSON graph must be an object with keys 'd' and 'edges'")
    try:
        return SimpleGraph(int(obj["d"]), [tuple(e) for e in obj["edges"]])
    except (TypeError, ValueError) as exc:
        raise ParseError(f"invalid JSON graph: {exc}") from None


def render_edge_list(G: SimpleGraph) -> str:
    """Edge-list text that parse_graph round-trips, header included."""
    lines = [f"d={G.d}"]
    lines.extend(f"{u} {v}" for u, v in G.edge_list())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# generators


@dataclass(frozen=True)
class PartSpec:
    """Part sizes of a complete multipartite vertex partition."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("need at least two parts")
        if any(p < 1 for p in self.parts):
            raise ValueError("part sizes must be positive")

    @property
    def d(self) -> int:
        return sum(self.parts)


def complete_graph(d: int) -> SimpleGraph:
    if d < 1:
        raise ValueError("complete graph needs d >= 1")
    return SimpleGraph(d, combinations(range(1, d + 1), 2))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("cycle graph needs n >= 3")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return SimpleGraph(n, edges)


def path_graph(n: int) -> SimpleGraph:
    if n < 1:
        raise ValueError("path graph needs n >= 1")
    return SimpleGraph(n, [(i, i + 1) for i in range(1, n)])


def complete_multipartite(parts: Sequence[int] | PartSpec) -> SimpleGraph:
    """Complete multipartite graph; part i occupies a consecutive label block."""
    spec = parts if isinstance(parts, PartSpec) else PartSpec(tuple(parts))
    blocks: list[range] = []
    start = 1
    for size in spec.parts:
        blocks.append(range(start, start + size))
        start += size
    edges = [
        (u, v)
        for i, bi in enumerate(blocks)
        for bj in blocks[i + 1 :]
        for u in bi
        for v in bj
    ]
    return SimpleGraph(spec.d, edges)


def random_connected(d: int, p: float, seed: int, max_tries: int = 10000) -> SimpleGraph:
    """Erdos-Renyi G(d, p) resampled until connected; deterministic per seed."""
    if d < 1:
        raise ValueError("need d >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    pairs = list(combinations(range(1, d + 1), 2))
    for _ in range(max_tries):
        G = SimpleGraph(d, [e for e in pairs if rng.random() < p])
        if is_connected(G):
            return G
    raise ValueError(f"no connected sample after {max_tries} tries (d={d}, p={p})")


def generate_graph(kind: str, params: Sequence, seed: int | None = None) -> SimpleGraph:
    """Dispatch for the CLI's ``gen`` subcommand."""
    if kind == "complete":
        (d,) = params
        return complete_graph(int(d))
    if kind == "cycle":
        (n,) = params
        return cycle_graph(int(n))
    if kind == "path":
        (n,) = params
        return path_graph(int(n))
    if kind == "multipartite":
        return complete_multipartite([int(x) for x in params])
    if kind == "random":
        d, p = params
        return random_connected(int(d), float(p), 0 if seed is None else seed)
    raise ValueError(f"unknown generator kind {kind!r}")


# ---------------------------------------------------------------------------
# connectivity / bipartition


def is_connected(G: SimpleGraph) -> bool:
    """True iff a single component spans all d vertices (d = 1 counts)."""
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for u in G.adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == G.d


def bipartition(G: SimpleGraph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """The unique 2-coloring (L, R) with 1 in L, or None if an odd cycle exists.

    Requires a connected graph; uniqueness up to swapping sides comes from
    connectivity, and putting vertex 1 in L fixes the swap.
    """
    if not is_connected(G):
        raise ValueError("bipartition requires a connected graph")
    color = {1: 0}
    stack = [1]
    while stack:
        v = stack.pop()
        for u in G.adj[v]:
            if u not in color:
                color[u] = 1 - color[v]
                stack.append(u)
            elif color[u] == color[v]:
                return None
    left = frozenset(v for v, c in color.items() if c == 0)
    right = frozenset(v for v, c in color.items() if c == 1)
    return left, right


# ---------------------------------------------------------------------------
# cycles


def canonical_cycle_vertices(vertices: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect so the smallest vertex comes first and its smaller
    neighbor second; the unique representative of the 2k symmetries."""
    seq = tuple(vertices)
    k = len(seq)
    i = seq.index(min(seq))
    forward = seq[i:] + seq[:i]
    backward = (forward[0],) + tuple(reversed(forward[1:]))
    return forward if forward[1] < forward[-1] else backward


@dataclass(frozen=True)
class Cycle:
    """A simple cycle held in canonical vertex order."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(self.vertices)
        if len(seq) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(seq)) != len(seq):
            raise ValueError("cycle vertices must be distinct")
        object.__setattr__(self, "vertices", canonical_cycle_vertices(seq))

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def is_odd(self) -> bool:
        return len(self.vertices) % 2 == 1

    @property
    def is_even(self) -> bool:
        return len(self.vertices) % 2 == 0

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        return tuple(
            canonical_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))
        )

    def positions(self) -> dict[int, int]:
        """vertex -> 0-based position along the canonical order."""
        return {v: i for i, v in enumerate(self.vertices)}


def cycle_in_graph(G: SimpleGraph, C: Cycle) -> bool:
    vs = C.vertices
    return all(v in G.adj for v in vs) and all(
        G.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))
    )


def _check_cycle_cap(G: SimpleGraph, max_vertices: Optional[int]) -> None:
    cap = DEFAULT_CYCLE_CAP if max_vertices is None else max_vertices
    if G.d > cap:
        raise CapExceededError(
            f"cycle enumeration capped at {cap} vertices (graph has {G.d}); "
            "pass a larger max_vertices to override"
        )


def enumerate_simple_cycles(
    G: SimpleGraph,
    min_len: int = 3,
    parity: str = "any",
    max_vertices: Optional[int] = None,
) -> list[Cycle]:
    """All simple cycles of G, canonical, each exactly once, in lexicographic
    order of their canonical vertex tuples.

    DFS anchored at each vertex s in turn, visiting only vertices > s, so a
    cycle is discovered exactly at its minimal vertex; emitting only paths
    with second vertex < last vertex keeps one direction of the two.
    """
    if parity not in ("any", "odd", "even"):
        raise ValueError(f"bad parity filter {parity!r}")
    _check_cycle_cap(G, max_vertices)
    found: list[tuple[int, ...]] = []
    adj_sorted = {v: sorted(G.adj[v]) for v in G.vertices()}
    for s in G.vertices():
        path = [s]
        on_path = {s}

        def dfs(v: int) -> None:
            for u in adj_sorted[v]:
                if u == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        found.append(tuple(path))
                elif u > s and u not in on_path:
                    path.append(u)
                    on_path.add(u)
                    dfs(u)
                    path.pop()
                    on_path.remove(u)

        dfs(s)
    cycles = [Cycle(seq) for seq in sorted(found)]
    if min_len > 3:
        cycles = [c for c in cycles if c.length >= min_len]
    if parity == "odd":
        cycles = [c for c in cycles if c.is_odd]
    elif parity == "even":
        cycles = [c for c in cycles if c.is_even]
    return cycles


def cycle_has_chord(G: SimpleGraph, C: Cycle) -> bool:
    vs = C.vertices
    k = len(vs)
    for i in range(k):
        for j in range(i + 1, k):
            if j - i == 1 or (i == 0 and j == k - 1):
                continue
            if G.has_edge(vs[i], vs[j]):
                return True
    return False


def enumerate_induced_odd_cycles(
    G: SimpleGraph, max_vertices: Optional[int] = None
) -> list[Cycle]:
    """All chordless odd cycles, canonical, each once."""
    return [
        c
        for c in enumerate_simple_cycles(G, parity="odd", max_vertices=max_vertices)
        if not cycle_has_chord(G, c)
    ]


# ---------------------------------------------------------------------------
# chords


@dataclass(frozen=True)
class Chord:
    """A chord of a host cycle; parity is defined only on even cycles."""

    endpoints: Edge
    parity: Optional[str]  # "even" | "odd" | None


def chord_parity_from_positions(cycle_length: int, i: int, j: int) -> str:
    """Parity classification of a chord between positions i and j (0-based)
    on an even cycle: the chord splits the cycle into two subcycles whose
    common parity names the chord, so an odd position difference means the
    subcycles are even and vice versa."""
    if cycle_length % 2 != 0:
        raise ValueError("chord parity is only defined on even cycles")
    diff = abs(i - j) % cycle_length
    if diff in (0, 1, cycle_length - 1):
        raise ValueError("positions must be distinct and non-consecutive")
    return "even" if diff % 2 == 1 else "odd"


def cycle_chords(G: SimpleGraph, C: Cycle) -> list[Chord]:
    """All chords of C in G, with parity when C is even."""
    if not cycle_in_graph(G, C):
        raise ValueError("C is not a cycle of G")
    vs = C.vertices
    k = len(vs)
    chords: list[Chord] = []
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if G.has_edge(vs[i], vs[j]):
                parity = chord_parity_from_positions(k, i, j) if k % 2 == 0 else None
                chords.append(Chord(canonical_edge(vs[i], vs[j]), parity))
    chords.sort(key=lambda c: c.endpoints)
    return chords


def chords_cross(C: Cycle, c1: Chord, c2: Chord) -> bool:
    """True iff the chords' four endpoints are distinct and interleave
    around C; chords sharing an endpoint never cross."""
    pos = C.positions()
    try:
        a1, b1 = sorted(pos[v] for v in c1.endpoints)
        a2, b2 = sorted(pos[v] for v in c2.endpoints)
    except KeyError as exc:
        raise ValueError(f"chord endpoint {exc} not on cycle") from None
    if {c1.endpoints[0], c1.endpoints[1]} & {c2.endpoints[0], c2.endpoints[1]}:
        return False
    inside = (a1 < a2 < b1) + (a1 < b2 < b1)
    return inside == 1


# ---------------------------------------------------------------------------
# bridges


def bridges_between(
    G: SimpleGraph,
    C1: Cycle,
    C2: Cycle,
    forbidden: Optional[int] = None,
) -> list[Edge]:
    """Edges with one endpoint on C1 and the other on C2, skipping any edge
    incident to `forbidden`.  An edge inside one cycle's vertex set counts
    only if it also touches the other's."""
    v1 = C1.vertex_set()
    v2 = C2.vertex_set()
    out = []
    for u, v in G.edge_list():
        if forbidden is not None and forbidden in (u, v):
            continue
        if (u in v1 and v in v2) or (v in v1 and u in v2):
            out.append((u, v))
    return out


def iter_all_edges(d: int) -> Iterator[Edge]:
    return combinations(range(1, d + 1), 2)
