"""Switching operations, canonical class forms, and the twin machinery.

Conjugating H(G) by a diagonal matrix of fourth roots of unity rewrites every
gain as conj(theta_u) * gain * theta_v without touching the spectrum.  Two
graphs are *switching equivalent* when one reaches the other by such a switch
plus, optionally, taking the converse (conjugating all gains).

The canonical form of a class fixes a BFS spanning tree per component and
switches all tree gains to 1; the remaining non-tree gains are exactly the
fundamental-cycle values of the class, which form a complete invariant.  That
makes label-preserving equivalence a pair of normal-form comparisons.

Twins are vertices with unit-proportional matrix rows; collapsing each twin
class to its smallest member produces the twin reduction, which preserves the
positive and negative inertia counts.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .graph_core import (
    QuartGainGraph,
    VertexSet,
    induced_subgraph,
    relabel,
    underlying,
)
from .numeric import (
    UNIT_I,
    UNIT_MINUS_I,
    UNIT_MINUS_ONE,
    UNIT_ONE,
    Unit,
    unit_conj,
    unit_mul,
)

# One unit per vertex, realizing a four-way switching.
SwitchAssignment = tuple[Unit, ...]


def apply_switch(graph: QuartGainGraph, theta: SwitchAssignment) -> QuartGainGraph:
    """Switch gains to conj(theta_u) * gain * theta_v; underlying unchanged."""
    if len(theta) != graph.n:
        raise ValueError("switch assignment length does not match vertex count")
    edges = [
        (u, v, (g - theta[u] + theta[v]) % 4)
        for u, v, g in graph.edges
    ]
    return QuartGainGraph(graph.n, edges)


def converse(graph: QuartGainGraph) -> QuartGainGraph:
    """Reverse every arc: each gain is conjugated, H becomes its transpose."""
    return QuartGainGraph(graph.n, [(u, v, unit_conj(g)) for u, v, g in graph.edges])


def _crossing_edges(graph: QuartGainGraph, cut: Iterable[int]):
    side = set(cut)
    for v in side:
        if not (0 <= v < graph.n):
            raise ValueError(f"vertex id {v} out of range")
    for u, v, g in graph.edges:
        if (u in side) != (v in side):
            yield u, v, g, u in side


def two_way_directed(graph: QuartGainGraph, cut: VertexSet) -> QuartGainGraph:
    """Reverse all edges of an edge cut consisting of arcs only."""
    side = set(cut)
    for u, v, g, _ in _crossing_edges(graph, cut):
        if g not in (UNIT_I, UNIT_MINUS_I):
            raise ValueError(f"cut edge ({u}, {v}) is not directed")
    theta = tuple(UNIT_MINUS_ONE if v in side else UNIT_ONE for v in range(graph.n))
    return apply_switch(graph, theta)


def two_way_mixed(graph: QuartGainGraph, cut: VertexSet) -> QuartGainGraph:
    """Swap undirected and directed edges across a one-way edge cut.

    The cut may contain undirected edges and arcs pointing one way only;
    arcs become undirected and undirected edges become arcs in the opposite
    direction.  Realized as a switch by -i on one side of the cut.
    """
    side = set(cut)
    inward = outward = False
    for u, v, g, u_in_side in _crossing_edges(graph, cut):
        if g == UNIT_MINUS_ONE:
            raise ValueError(f"cut edge ({u}, {v}) has gain -1")
        if g == UNIT_ONE:
            continue
        oriented = g if u_in_side else unit_conj(g)
        if oriented == UNIT_I:
            outward = True
        else:
            inward = True
    if inward and outward:
        raise ValueError("cut contains directed edges in both directions")
    # Switching by -i on a side undirects the arcs that point at it, so the
    # side is chosen by the arc direction.
    if outward:
        switched = tuple(
            UNIT_MINUS_I if v not in side else UNIT_ONE for v in range(graph.n)
        )
    else:
        switched = tuple(
            UNIT_MINUS_I if v in side else UNIT_ONE for v in range(graph.n)
        )
    return apply_switch(graph, switched)


# -- cycles ---------------------------------------------------------------------


def _check_cycle(graph: QuartGainGraph, cycle: tuple[int, ...]) -> None:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise ValueError("not a cycle: need at least 3 distinct vertices")
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        if not graph.has_edge(u, v):
            raise ValueError(f"not a cycle: missing edge ({u}, {v})")


def cycle_value(graph: QuartGainGraph, cycle: tuple[int, ...]) -> Unit:
    """Product of gains along the traversal; conjugated by reversal."""
    _check_cycle(graph, cycle)
    total = UNIT_ONE
    for i, u in enumerate(cycle):
        total = unit_mul(total, graph.gain(u, cycle[(i + 1) % len(cycle)]))
    return total


def cycle_signature(graph: QuartGainGraph, cycle: tuple[int, ...]) -> int:
    """Forward arcs minus backward arcs along the traversal.

    Only defined when every cycle edge is mixed-representable (gain in
    {1, i, -i}); undirected edges contribute 0.
    """
    _check_cycle(graph, cycle)
    sig = 0
    for i, u in enumerate(cycle):
        g = graph.gain(u, cycle[(i + 1) % len(cycle)])
        if g == UNIT_I:
            sig += 1
        elif g == UNIT_MINUS_I:
            sig -= 1
        elif g == UNIT_MINUS_ONE:
            raise ValueError(f"edge ({u}, {cycle[(i + 1) % len(cycle)]}) has gain -1")
    return sig


# -- canonical forms --------------------------------------------------------------


class NormalForm(NamedTuple):
    graph: QuartGainGraph
    assignment: SwitchAssignment


def tree_normalize(graph: QuartGainGraph) -> NormalForm:
    """Canonical representative of the switching class of ``graph``.

    Per component, a BFS spanning tree rooted at the smallest vertex id
    (neighbors visited in increasing order) is switched to all-1 gains.  The
    surviving non-tree gains are the fundamental-cycle values, so two graphs
    on the same labeled underlying graph are switching equivalent by a
    four-way switch exactly when their normal forms coincide.  Idempotent.
    """
    theta = [UNIT_ONE] * graph.n
    seen = [False] * graph.n
    for root in range(graph.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in graph.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    theta[w] = (theta[u] - graph.gain(u, w)) % 4
                    queue.append(w)
    assignment = tuple(theta)
    return NormalForm(apply_switch(graph, assignment), assignment)


def is_positive(graph: QuartGainGraph) -> bool:
    """True when every cycle has value 1, i.e. the class of the underlying graph."""
    normal = tree_normalize(graph).graph
    return all(g == UNIT_ONE for _, _, g in normal.edges)


def switching_equivalent(g1: QuartGainGraph, g2: QuartGainGraph) -> bool:
    """Label-preserving switching equivalence (switch plus optional converse)."""
    return switching_witness(g1, g2) is not None


def switching_witness(
    g1: QuartGainGraph, g2: QuartGainGraph
) -> Optional[tuple[SwitchAssignment, bool]]:
    """A (theta, took_converse) pair with maybe_converse(switch(g1)) == g2."""
    if g1.n != g2.n or underlying(g1) != underlying(g2):
        return None
    nf1 = tree_normalize(g1)
    nf2 = tree_normalize(g2)
    if nf1.graph == nf2.graph:
        theta = tuple(
            unit_mul(a, unit_conj(b)) for a, b in zip(nf1.assignment, nf2.assignment)
        )
        return theta, False
    nf2c = tree_normalize(converse(g2))
    if nf1.graph == nf2c.graph:
        theta = tuple(
            unit_mul(a, unit_conj(b)) for a, b in zip(nf1.assignment, nf2c.assignment)
        )
        return theta, True
    return None


@dataclass(frozen=True)
class IsoWitness:
    """Certificate that relabeling g1 by ``perm``, switching by ``theta`` and
    (optionally) taking the converse yields g2 exactly."""

    perm: tuple[int, ...]
    theta: SwitchAssignment
    took_converse: bool


def switching_equivalent_up_to_iso(
    g1: QuartGainGraph, g2: QuartGainGraph, max_vertices: int = 12
) -> Optional[IsoWitness]:
    """Search underlying-graph isomorphisms for a switching-equivalence witness.

    Backtracks over degree-compatible vertex maps with adjacency pruning and
    tests label-preserving equivalence at each complete map.  Exhaustive but
    intended for small orders; raises when the size cap is exceeded.
    """
    if g1.n != g2.n:
        return None
    if g1.n > max_vertices:
        raise ValueError(f"graphs too large for isomorphism search (n={g1.n})")
    if len(g1.edges) != len(g2.edges):
        return None
    u1, u2 = underlying(g1), underlying(g2)
    deg2 = {v: u2.degree(v) for v in range(u2.n)}
    if sorted(u1.degree(v) for v in range(u1.n)) != sorted(deg2.values()):
        return None

    # Map high-degree, already-anchored vertices first.
    order: list[int] = []
    remaining = set(range(u1.n))
    while remaining:
        anchored = [v for v in remaining if any(w in order for w in u1.neighbors(v))]
        pool = anchored if anchored else list(remaining)
        nxt = max(pool, key=lambda v: (u1.degree(v), -v))
        order.append(nxt)
        remaining.discard(nxt)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def feasible(v: int, target: int) -> bool:
        if deg2[target] != u1.degree(v):
            return False
        for w in u1.neighbors(v):
            if w in mapping and not u2.has_edge(target, mapping[w]):
                return False
        mapped_nbrs = sum(1 for w in u1.neighbors(v) if w in mapping)
        back_nbrs = sum(1 for t in u2.neighbors(target) if t in used)
        return mapped_nbrs == back_nbrs

    def extend(depth: int) -> Optional[IsoWitness]:
        if depth == len(order):
            perm = tuple(mapping[v] for v in range(u1.n))
            witness = switching_witness(relabel(g1, perm), g2)
            if witness is not None:
                theta, took_converse = witness
                return IsoWitness(perm, theta, took_converse)
            return None
        v = order[depth]
        for target in range(u2.n):
            if target in used or not feasible(v, target):
                continue
            mapping[v] = target
            used.add(target)
            found = extend(depth + 1)
            if found is not None:
                return found
            del mapping[v]
            used.discard(target)
        return None

    return extend(0)


# -- twins -------------------------------------------------------------------------


def are_twins(graph: QuartGainGraph, u: int, w: int) -> Optional[Unit]:
    """The unit alpha with row_u = alpha * row_w, or None.

    Twins must be non-adjacent and see the same neighbor set; a nonzero
    common entry pins alpha uniquely.  Two isolated vertices are twins with
    alpha = 1.
    """
    if u == w:
        raise ValueError("a vertex is not its own twin")
    if not (0 <= u < graph.n and 0 <= w < graph.n):
        raise ValueError("vertex id out of range")
    if graph.has_edge(u, w):
        return None
    nu = set(graph.neighbors(u)) - {w}
    nw = set(graph.neighbors(w)) - {u}
    if nu != nw:
        return None
    alpha: Optional[Unit] = None
    for x in nu:
        delta = (graph.gain(u, x) - graph.gain(w, x)) % 4
        if alpha is None:
            alpha = delta
        elif alpha != delta:
            return None
    return UNIT_ONE if alpha is None else alpha


@dataclass(frozen=True)
class TwinPartition:
    """Twin classes with, per vertex, the unit relating it to its class
    representative (the smallest id in the class)."""

    classes: tuple[VertexSet, ...]
    representatives: tuple[int, ...]
    alphas: tuple[Unit, ...]


def twin_partition(graph: QuartGainGraph) -> TwinPartition:
    reps: list[int] = []
    member_lists: list[list[int]] = []
    alphas = [UNIT_ONE] * graph.n
    for v in range(graph.n):
        for i, rep in enumerate(reps):
            alpha = are_twins(graph, v, rep)
            if alpha is not None:
                member_lists[i].append(v)
                alphas[v] = alpha
                break
        else:
            reps.append(v)
            member_lists.append([v])
    return TwinPartition(
        classes=tuple(tuple(ms) for ms in member_lists),
        representatives=tuple(reps),
        alphas=tuple(alphas),
    )


def twin_reduction(graph: QuartGainGraph) -> QuartGainGraph:
    """One vertex per twin class: the induced subgraph on class representatives."""
    return induced_subgraph(graph, twin_partition(graph).representatives)


# -- triangles ----------------------------------------------------------------------


def _is_triangle(graph: QuartGainGraph) -> bool:
    return graph.n == 3 and len(graph.edges) == 3


def is_odd_triangle(graph: QuartGainGraph) -> bool:
    """A triangle whose cycle value is +-i (odd number of arcs)."""
    return _is_triangle(graph) and cycle_value(graph, (0, 1, 2)) in (UNIT_I, UNIT_MINUS_I)


def is_even_triangle(graph: QuartGainGraph) -> bool:
    """A triangle whose cycle value is +-1 (even number of arcs)."""
    return _is_triangle(graph) and cycle_value(graph, (0, 1, 2)) in (UNIT_ONE, UNIT_MINUS_ONE)
