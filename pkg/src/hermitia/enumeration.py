"""Exhaustive enumeration of switching classes at desk scale.

Connected underlying graphs are generated up to isomorphism by vertex
extension with canonical-form deduplication (color refinement narrows the
permutations tried; exhaustive within color classes, so exact at these
orders).  For each underlying graph, the canonical BFS spanning tree is
fixed and every assignment of gains to the non-tree edges is emitted: the
non-tree gains are the fundamental-cycle values, a complete invariant of
four-way switching, so distinct assignments are pairwise inequivalent and
together exhaust the label-preserving four-way-switching classes (pairs
related only by the converse are kept distinct; there are 4^(m-n+1) classes
per connected underlying graph).

With ``mixed_only`` set, a class is emitted only if some four-way switching
of it has no -1 gain; the search fixes the switch at 1 on vertex 0 (a global
phase acts trivially on gains) and emits the representative found.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .graph_core import (
    QuartGainGraph,
    cut_vertices,
    pendant_vertices,
)
from .numeric import UNIT_MINUS_ONE, UNIT_ONE, UNITS

Pair = tuple[int, int]
EdgeTuple = tuple[Pair, ...]

HARD_CAP_DEFAULT = 7


@dataclass(frozen=True)
class EnumSpec:
    """What to enumerate: exact order ``n`` plus population filters."""

    n: int
    connected: bool = True
    has_cut_vertex: bool = False
    no_pendant: bool = False
    has_pendant: bool = False
    mixed_only: bool = False
    limit: Optional[int] = None
    hard_cap: int = HARD_CAP_DEFAULT


# -- canonical labeling ----------------------------------------------------------


def _refine_colors(n: int, adj: list[set[int]]) -> list[int]:
    colors = [len(adj[v]) for v in range(n)]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)
        ]
        ranks = {key: i for i, key in enumerate(sorted(set(keys)))}
        refined = [ranks[key] for key in keys]
        if refined == colors:
            return colors
        colors = refined


def canonical_form(n: int, edges: EdgeTuple) -> EdgeTuple:
    """Lexicographically least relabeling of the edge set.

    Only vertex orderings that respect the color-refinement classes are
    tried; the classes are isomorphism-invariant, so isomorphic graphs get
    identical forms.
    """
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    colors = _refine_colors(n, adj)
    classes: list[list[int]] = []
    for color in sorted(set(colors)):
        classes.append([v for v in range(n) if colors[v] == color])
    best: Optional[EdgeTuple] = None
    for arrangement in itertools.product(
        *(itertools.permutations(cls) for cls in classes)
    ):
        position: dict[int, int] = {}
        idx = 0
        for group in arrangement:
            for old in group:
                position[old] = idx
                idx += 1
        mapped = tuple(
            sorted(
                (min(position[u], position[v]), max(position[u], position[v]))
                for u, v in edges
            )
        )
        if best is None or mapped < best:
            best = mapped
    assert best is not None
    return best


def _is_connected_edges(n: int, edges: EdgeTuple) -> bool:
    if n <= 1:
        return True
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


@lru_cache(maxsize=None)
def connected_underlying(n: int) -> tuple[EdgeTuple, ...]:
    """All connected graphs of order n up to isomorphism, as canonical
    sorted edge tuples, generated by single-vertex extension."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        return ((),)
    result: set[EdgeTuple] = set()
    for smaller in connected_underlying(n - 1):
        for bits in range(1, 1 << (n - 1)):
            extra = tuple((u, n - 1) for u in range(n - 1) if bits >> u & 1)
            result.add(canonical_form(n, smaller + extra))
    return tuple(sorted(result))


def connected_underlying_bruteforce(n: int) -> tuple[EdgeTuple, ...]:
    """Independent oracle: filter all labeled graphs and deduplicate."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    result: set[EdgeTuple] = set()
    for bits in range(1 << len(pairs)):
        edges = tuple(pairs[i] for i in range(len(pairs)) if bits >> i & 1)
        if _is_connected_edges(n, edges):
            result.add(canonical_form(n, edges))
    return tuple(sorted(result))


# -- class emission -----------------------------------------------------------------


def _bfs_tree_pairs(n: int, graph: QuartGainGraph) -> set[Pair]:
    tree: set[Pair] = set()
    seen = [False] * n
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        while queue:
            u = queue.pop(0)
            for w in graph.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    tree.add((min(u, w), max(u, w)))
                    queue.append(w)
    return tree


def mixed_representative(graph: QuartGainGraph) -> Optional[QuartGainGraph]:
    """A switching of ``graph`` with no -1 gain, or None.

    Exhausts switch assignments with vertex 0 pinned to 1; sufficient
    because rescaling a whole component leaves every gain unchanged.
    Intended for connected graphs at enumeration scale.
    """
    edges = graph.edges
    if all(g != UNIT_MINUS_ONE for _, _, g in edges):
        return graph
    n = graph.n
    for tail in itertools.product(UNITS, repeat=n - 1):
        theta = (UNIT_ONE,) + tail
        if all((g - theta[u] + theta[v]) % 4 != UNIT_MINUS_ONE for u, v, g in edges):
            return QuartGainGraph(
                n, [(u, v, (g - theta[u] + theta[v]) % 4) for u, v, g in edges]
            )
    return None


def enumerate_switching_classes(spec: EnumSpec) -> Iterator[QuartGainGraph]:
    """Stream one representative per label-preserving switching class.

    Deterministic: underlying graphs in canonical order, gain assignments
    in lexicographic order over (1, i, -1, -i).  Every emitted graph
    satisfies the spec's filters and no two are switching equivalent.
    """
    if not spec.connected:
        raise ValueError("only connected enumeration is supported")
    if not 1 <= spec.n <= spec.hard_cap:
        raise ValueError(f"order {spec.n} outside 1..{spec.hard_cap}")
    emitted = 0
    for edges in connected_underlying(spec.n):
        base = QuartGainGraph(spec.n, [(u, v, UNIT_ONE) for u, v in edges])
        if spec.has_cut_vertex and not cut_vertices(base):
            continue
        pendants = pendant_vertices(base)
        if spec.no_pendant and pendants:
            continue
        if spec.has_pendant and not pendants:
            continue
        tree = _bfs_tree_pairs(spec.n, base)
        non_tree = [pair for pair in edges if pair not in tree]
        tree_edges = [(u, v, UNIT_ONE) for u, v in edges if (u, v) in tree]
        for gains in itertools.product(UNITS, repeat=len(non_tree)):
            candidate = QuartGainGraph(
                spec.n,
                tree_edges + [(u, v, g) for (u, v), g in zip(non_tree, gains)],
            )
            if spec.mixed_only:
                rep = mixed_representative(candidate)
                if rep is None:
                    continue
                candidate = rep
            yield candidate
            emitted += 1
            if spec.limit is not None and emitted >= spec.limit:
                return


def classes_up_to(order: int, **filters) -> Iterator[QuartGainGraph]:
    """All classes of every order from 1 through ``order``."""
    for n in range(1, order + 1):
        yield from enumerate_switching_classes(EnumSpec(n=n, **filters))
