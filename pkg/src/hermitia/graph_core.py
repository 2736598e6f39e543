"""Labeled gain graphs over the fourth roots of unity, with file I/O.

A :class:`QuartGainGraph` carries one gain in {1, i, -1, -i} per edge.  The
gain is stored once, for the orientation u -> v with u < v; reading the
opposite orientation conjugates it.  Mixed graphs are exactly the members
with no -1 gain: gain 1 is an undirected edge, gain i an arc u -> v, gain -i
an arc v -> u.

Graphs are immutable values after construction, so any number of concurrent
readers is safe.  All structural queries (components, cut vertices, pendant
vertices) are judged on the underlying simple graph.

The on-disk format is ``.qgg``: line-oriented ASCII, '#" comments, a header
line ``n <count>`` followed by edge lines ``U a b`` (gain 1), ``A a b`` (arc
a -> b) or ``G a b <gain>``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .numeric import (
    UNIT_I,
    UNIT_MINUS_I,
    UNIT_MINUS_ONE,
    UNIT_ONE,
    Unit,
    unit_conj,
    unit_from_token,
    unit_token,
)

# A vertex set is a strictly increasing tuple of vertex ids.
VertexSet = tuple[int, ...]

Edge = tuple[int, int, Unit]


class GraphFormatError(ValueError):
    """Raised for malformed .qgg text or invalid edge data."""


class QuartGainGraph:
    """Immutable gain graph on vertices 0..n-1.

    ``edges`` is a sorted tuple of (u, v, gain) records with u < v and the
    gain given for the orientation u -> v.  Construction normalizes edge
    orientation, rejects self-loops and duplicate pairs, and precomputes the
    adjacency structure.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, Unit]] = ()):
        if n < 0:
            raise GraphFormatError(f"vertex count must be nonnegative, got {n}")
        normalized: dict[tuple[int, int], Unit] = {}
        for u, v, gain in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex id out of range in edge ({u}, {v})")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if gain not in (0, 1, 2, 3):
                raise GraphFormatError(f"invalid gain code {gain!r}")
            if u > v:
                u, v, gain = v, u, unit_conj(gain)
            if (u, v) in normalized:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            normalized[(u, v)] = gain
        self.n = n
        self.edges = tuple(sorted((u, v, g) for (u, v), g in normalized.items()))
        adj: list[dict[int, Unit]] = [dict() for _ in range(n)]
        for u, v, g in self.edges:
            adj[u][v] = g
            adj[v][u] = unit_conj(g)
        self._adj = tuple(adj)

    # -- basic queries ------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def gain(self, u: int, v: int) -> Unit:
        """Gain of the edge oriented u -> v; raises if not adjacent."""
        try:
            return self._adj[u][v]
        except KeyError:
            raise ValueError(f"no edge between {u} and {v}") from None

    def neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(sorted(self._adj[u]))

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    @property
    def is_mixed(self) -> bool:
        """True when no edge carries gain -1."""
        return all(g != UNIT_MINUS_ONE for _, _, g in self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuartGainGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"QuartGainGraph(n={self.n}, edges={self.edges!r})"


# -- .qgg parsing and serialization ------------------------------------------


def parse_graph(text: str) -> QuartGainGraph:
    """Parse .qgg text into a graph.

    Reports the offending line number for syntax errors, duplicate edges,
    self-loops, out-of-range vertex ids and unknown gain tokens.
    """
    n: int | None = None
    edges: list[Edge] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n" or not tokens[1].isdigit():
                raise GraphFormatError(f"line {lineno}: expected header 'n <count>'")
            n = int(tokens[1])
            continue
        kind = tokens[0]
        if kind in ("U", "A"):
            if len(tokens) != 3:
                raise GraphFormatError(f"line {lineno}: expected '{kind} a b'")
            a, b = _vertex(tokens[1], lineno), _vertex(tokens[2], lineno)
            if kind == "U":
                gain = UNIT_ONE
            else:
                # Arc a -> b: gain i for the stored a < b orientation.
                gain = UNIT_I
        elif kind == "G":
            if len(tokens) != 4:
                raise GraphFormatError(f"line {lineno}: expected 'G a b <gain>'")
            a, b = _vertex(tokens[1], lineno), _vertex(tokens[2], lineno)
            try:
                gain = unit_from_token(tokens[3])
            except ValueError:
                raise GraphFormatError(
                    f"line {lineno}: unknown gain token {tokens[3]!r}"
                ) from None
        else:
            raise GraphFormatError(f"line {lineno}: unknown record type {kind!r}")
        if a == b:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {a}")
        if not (a < n and b < n):
            raise GraphFormatError(f"line {lineno}: vertex id >= n")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append((a, b, gain))
    if n is None:
        raise GraphFormatError("missing 'n <count>' header line")
    return QuartGainGraph(n, edges)


def _vertex(token: str, lineno: int) -> int:
    if not token.isdigit():
        raise GraphFormatError(f"line {lineno}: bad vertex id {token!r}")
    return int(token)


def serialize_graph(graph: QuartGainGraph) -> str:
    """Canonical .qgg text; ``parse_graph`` of the result round-trips."""
    lines = [f"n {graph.n}"]
    for u, v, g in graph.edges:
        if g == UNIT_ONE:
            lines.append(f"U {u} {v}")
        elif g == UNIT_I:
            lines.append(f"A {u} {v}")
        elif g == UNIT_MINUS_I:
            lines.append(f"A {v} {u}")
        else:
            lines.append(f"G {u} {v} {unit_token(g)}")
    return "\n".join(lines) + "\n"


def compact_str(graph: QuartGainGraph) -> str:
    """One-line rendering of the canonical .qgg form, for reports."""
    return serialize_graph(graph).strip().replace("\n", "; ")


# -- derived graphs -----------------------------------------------------------


def underlying(graph: QuartGainGraph) -> QuartGainGraph:
    """The same edge set with every gain replaced by 1."""
    return QuartGainGraph(graph.n, [(u, v, UNIT_ONE) for u, v, _ in graph.edges])


def induced_subgraph(graph: QuartGainGraph, vertices: Sequence[int]) -> QuartGainGraph:
    """Induced subgraph relabeled 0..|S|-1 in order; gains preserved."""
    vs = sorted(set(vertices))
    for v in vs:
        if not (0 <= v < graph.n):
            raise ValueError(f"vertex id {v} out of range")
    index = {v: i for i, v in enumerate(vs)}
    edges = [
        (index[u], index[v], g)
        for u, v, g in graph.edges
        if u in index and v in index
    ]
    return QuartGainGraph(len(vs), edges)


def delete_vertex(graph: QuartGainGraph, v: int) -> QuartGainGraph:
    if not (0 <= v < graph.n):
        raise ValueError(f"vertex id {v} out of range")
    return induced_subgraph(graph, [u for u in range(graph.n) if u != v])


def relabel(graph: QuartGainGraph, perm: Sequence[int]) -> QuartGainGraph:
    """Relabel vertices; ``perm[old]`` is the new id of ``old``."""
    if sorted(perm) != list(range(graph.n)):
        raise ValueError("perm is not a permutation of the vertex ids")
    return QuartGainGraph(graph.n, [(perm[u], perm[v], g) for u, v, g in graph.edges])


def disjoint_union(a: QuartGainGraph, b: QuartGainGraph) -> QuartGainGraph:
    edges = list(a.edges) + [(u + a.n, v + a.n, g) for u, v, g in b.edges]
    return QuartGainGraph(a.n + b.n, edges)


def coalesce(g1: QuartGainGraph, v1: int, g2: QuartGainGraph, v2: int) -> QuartGainGraph:
    """Identify vertex v1 of g1 with vertex v2 of g2.

    The result keeps g1's labels; g2's remaining vertices are appended in
    increasing order starting at g1.n.  The merged vertex carries the union
    of both incidence lists and there are no other edges between the sides.
    """
    if not (0 <= v1 < g1.n):
        raise ValueError(f"vertex id {v1} out of range")
    if not (0 <= v2 < g2.n):
        raise ValueError(f"vertex id {v2} out of range")
    mapping: dict[int, int] = {}
    nxt = g1.n
    for u in range(g2.n):
        if u == v2:
            mapping[u] = v1
        else:
            mapping[u] = nxt
            nxt += 1
    edges = list(g1.edges) + [(mapping[u], mapping[v], g) for u, v, g in g2.edges]
    return QuartGainGraph(g1.n + g2.n - 1, edges)


# -- structural queries --------------------------------------------------------


def components(graph: QuartGainGraph) -> list[VertexSet]:
    """Connected components of the underlying graph, sorted by smallest member."""
    seen = [False] * graph.n
    result: list[VertexSet] = []
    for start in range(graph.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in graph.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        result.append(tuple(sorted(comp)))
    return result


def components_avoiding(graph: QuartGainGraph, v: int) -> list[VertexSet]:
    """Components of the graph minus vertex v, kept in original labels."""
    if not (0 <= v < graph.n):
        raise ValueError(f"vertex id {v} out of range")
    seen = {v}
    result: list[VertexSet] = []
    for start in range(graph.n):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in graph.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        result.append(tuple(sorted(comp)))
    return result


def is_connected(graph: QuartGainGraph) -> bool:
    return len(components(graph)) <= 1


def pendant_vertices(graph: QuartGainGraph) -> VertexSet:
    return tuple(v for v in range(graph.n) if graph.degree(v) == 1)


def cut_vertices(graph: QuartGainGraph) -> VertexSet:
    """Vertices whose removal increases the number of components."""
    base = len(components(graph))
    return tuple(
        v
        for v in range(graph.n)
        if len(components(delete_vertex(graph, v))) > base
    )
