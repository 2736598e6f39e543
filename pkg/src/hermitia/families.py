"""Constructors for the named graph families and their textual specs.

All families share vertex-layout conventions that the classifiers and golden
tests rely on:

* blown-up triangles (:func:`gen_c3t`): part A is vertices 0..t1-1, then B,
  then C; every cross edge is an arc following the cyclic pattern
  A -> B -> C -> A, so each cross triangle carries an odd number of arcs;
* apex families (:func:`gen_K_plain`, :func:`gen_K_gain`): the apex vertex v
  is index 0, followed by the q-side blocks and then the n-side blocks in
  declared order.

``FamilySpec`` is the uniform description consumed by the CLI; its textual
grammar is documented on :func:`parse_family_spec`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph_core import QuartGainGraph, coalesce
from .numeric import UNIT_I, UNIT_MINUS_I, UNIT_MINUS_ONE, UNIT_ONE, Unit


class FamilySpecError(ValueError):
    """Raised for invalid family parameters or malformed spec text."""


def _blocks(sizes: Sequence[int], start: int) -> list[list[int]]:
    out = []
    idx = start
    for size in sizes:
        out.append(list(range(idx, idx + size)))
        idx += size
    return out


def _join_blocks(edges: list, blocks: list[list[int]], gain: Unit = UNIT_ONE) -> None:
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            for u in blocks[i]:
                for v in blocks[j]:
                    edges.append((u, v, gain))


def gen_c3t(t1: int, t2: int, t3: int) -> QuartGainGraph:
    """Complete tripartite blow-up of an odd triangle, rank 2.

    Gains are constant on each part pair; all A -> B, B -> C and C -> A
    edges are arcs, so every cross triangle is odd and the twin reduction is
    the one-vertex-per-part odd triangle.
    """
    if min(t1, t2, t3) < 1:
        raise FamilySpecError("part sizes must be >= 1")
    a, b, c = _blocks((t1, t2, t3), 0)
    edges = []
    for u in a:
        for v in b:
            edges.append((u, v, UNIT_I))
    for u in b:
        for v in c:
            edges.append((u, v, UNIT_I))
    for u in c:
        for v in a:
            edges.append((u, v, UNIT_I))
    return QuartGainGraph(t1 + t2 + t3, edges)


def gen_complete_multipartite(sizes: Sequence[int]) -> QuartGainGraph:
    if not sizes or min(sizes) < 1:
        raise FamilySpecError("need a nonempty list of positive part sizes")
    blocks = _blocks(sizes, 0)
    edges: list = []
    _join_blocks(edges, blocks)
    return QuartGainGraph(sum(sizes), edges)


def gen_star(n: int) -> QuartGainGraph:
    """Undirected star of order n, center at vertex 0."""
    if n < 2:
        raise FamilySpecError("a star needs at least 2 vertices")
    return QuartGainGraph(n, [(0, v, UNIT_ONE) for v in range(1, n)])


def gen_cycle(n: int, arcs: Sequence[int] = ()) -> QuartGainGraph:
    """Cycle 0-1-...-(n-1)-0; positions in ``arcs`` become forward arcs."""
    if n < 3:
        raise FamilySpecError("a cycle needs at least 3 vertices")
    arc_set = set(arcs)
    if not arc_set <= set(range(n)):
        raise FamilySpecError("arc positions must lie in 0..n-1")
    # The constructor conjugates the closing edge's gain into u < v form.
    edges = [
        (j, (j + 1) % n, UNIT_I if j in arc_set else UNIT_ONE)
        for j in range(n)
    ]
    return QuartGainGraph(n, edges)


def gen_K_plain(q: Sequence[int], n: Sequence[int], p: int) -> QuartGainGraph:
    """Apex family with all gains 1.

    An apex vertex v (index 0) joined to all of one complete multipartite
    block (part sizes ``q``, possibly empty) and to the first ``p`` parts of
    a second block (part sizes ``n``).
    """
    return gen_K_gain(q, n, 0, 0, p, 0)


def gen_K_gain(
    q: Sequence[int], n: Sequence[int], a: int, b: int, c: int, d: int
) -> QuartGainGraph:
    """Apex family with gains on the apex edges into the n-side.

    Edges from v into the first ``a`` parts carry gain i (v -> u), the next
    ``b`` parts gain -i, the next ``c`` parts gain 1 and the next ``d``
    parts gain -1; every other edge has gain 1.  ``d > 0`` leaves the
    mixed sub-family.
    """
    k = len(n)
    if q and min(q) < 1:
        raise FamilySpecError("q part sizes must be >= 1")
    if not n or min(n) < 1:
        raise FamilySpecError("n part sizes must be >= 1")
    if min(a, b, c, d) < 0 or a + b + c + d < 1 or a + b + c + d > k:
        raise FamilySpecError(
            f"need 1 <= a+b+c+d <= k, got a={a} b={b} c={c} d={d} k={k}"
        )
    qblocks = _blocks(q, 1)
    nblocks = _blocks(n, 1 + sum(q))
    edges: list = []
    _join_blocks(edges, qblocks)
    _join_blocks(edges, nblocks)
    for block in qblocks:
        for u in block:
            edges.append((0, u, UNIT_ONE))
    apex_gains = [UNIT_I] * a + [UNIT_MINUS_I] * b + [UNIT_ONE] * c + [UNIT_MINUS_ONE] * d
    for gain, block in zip(apex_gains, nblocks):
        for u in block:
            edges.append((0, u, gain))
    return QuartGainGraph(1 + sum(q) + sum(n), edges)


# -- uniform spec --------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Tagged description of a family instance.

    kind is one of c3t, multipartite, star, cycle, k_plain, k_gain,
    coalescence.  Unused fields stay at their defaults.
    """

    kind: str
    sizes: tuple[int, ...] = ()
    arcs: tuple[int, ...] = ()
    q: tuple[int, ...] = ()
    parts: tuple[int, ...] = ()
    p: int = 0
    gain_counts: tuple[int, int, int, int] = (0, 0, 0, 0)
    sub: tuple = field(default=())  # (spec1, v1, spec2, v2) for coalescence


def realize(spec: FamilySpec) -> QuartGainGraph:
    """Build the graph a FamilySpec describes."""
    if spec.kind == "c3t":
        if len(spec.sizes) != 3:
            raise FamilySpecError("c3t takes exactly three part sizes")
        return gen_c3t(*spec.sizes)
    if spec.kind == "multipartite":
        return gen_complete_multipartite(spec.sizes)
    if spec.kind == "star":
        if len(spec.sizes) != 1:
            raise FamilySpecError("star takes exactly one order")
        return gen_star(spec.sizes[0])
    if spec.kind == "cycle":
        if len(spec.sizes) != 1:
            raise FamilySpecError("cycle takes exactly one order")
        return gen_cycle(spec.sizes[0], spec.arcs)
    if spec.kind == "k_plain":
        return gen_K_plain(spec.q, spec.parts, spec.p)
    if spec.kind == "k_gain":
        return gen_K_gain(spec.q, spec.parts, *spec.gain_counts)
    if spec.kind == "coalescence":
        s1, v1, s2, v2 = spec.sub
        return coalesce(realize(s1), v1, realize(s2), v2)
    raise FamilySpecError(f"unknown family kind {spec.kind!r}")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse the textual family grammar.

    Forms::

        c3t:T1,T2,T3
        multipartite:N1,N2,...
        star:N
        cycle:N            or  cycle:N;arcs=P1,P2,...
        K:q=Q1,..;n=N1,..;p=P          (q may be empty: "q=")
        K:q=..;n=..;a=A,b=B,c=C,d=D
        coalesce:(SPEC)@V1+(SPEC)@V2

    Round-trips with :func:`format_family_spec`.
    """
    text = text.strip()
    head, sep, rest = text.partition(":")
    if not sep:
        raise FamilySpecError(f"missing ':' in family spec {text!r}")
    if head == "c3t":
        sizes = _int_list(rest)
        if len(sizes) != 3:
            raise FamilySpecError("c3t takes exactly three part sizes")
        return FamilySpec("c3t", sizes=sizes)
    if head == "multipartite":
        return FamilySpec("multipartite", sizes=_int_list(rest))
    if head == "star":
        return FamilySpec("star", sizes=(_int(rest),))
    if head == "cycle":
        order, _, tail = rest.partition(";")
        arcs: tuple[int, ...] = ()
        if tail:
            key, _, val = tail.partition("=")
            if key != "arcs":
                raise FamilySpecError(f"unknown cycle option {key!r}")
            arcs = _int_list(val) if val else ()
        return FamilySpec("cycle", sizes=(_int(order),), arcs=arcs)
    if head == "K":
        q_text = n_text = p_text = gains_text = None
        for piece in rest.split(";"):
            piece = piece.strip()
            if piece.startswith("q="):
                q_text = piece[2:]
            elif piece.startswith("n="):
                n_text = piece[2:]
            elif piece.startswith("p="):
                p_text = piece[2:]
            elif piece.startswith("a="):
                gains_text = piece
            else:
                raise FamilySpecError(f"bad K spec component {piece!r}")
        if q_text is None or n_text is None:
            raise FamilySpecError("K spec needs q= and n= components")
        q = _int_list(q_text) if q_text else ()
        parts = _int_list(n_text)
        if p_text is not None:
            return FamilySpec("k_plain", q=q, parts=parts, p=_int(p_text))
        if gains_text is None:
            raise FamilySpecError("K spec needs either p=P or a=A,b=B,c=C,d=D")
        counts: dict[str, int] = {}
        for item in gains_text.split(","):
            key, sep2, val = item.partition("=")
            if not sep2:
                raise FamilySpecError(f"bad gain count {item!r}")
            counts[key.strip()] = _int(val)
        if sorted(counts) != ["a", "b", "c", "d"]:
            raise FamilySpecError("K gain spec needs exactly a=, b=, c=, d=")
        abcd = (counts["a"], counts["b"], counts["c"], counts["d"])
        return FamilySpec("k_gain", q=q, parts=parts, gain_counts=abcd)
    if head == "coalesce":
        return _parse_coalesce(rest)
    raise FamilySpecError(f"unknown family kind {head!r}")


def _parse_coalesce(rest: str) -> FamilySpec:
    first, plus, second = _split_coalesce(rest)
    spec1, v1 = _parse_anchored(first)
    spec2, v2 = _parse_anchored(second)
    return FamilySpec("coalescence", sub=(spec1, v1, spec2, v2))


def _split_coalesce(rest: str) -> tuple[str, str, str]:
    depth = 0
    for i, ch in enumerate(rest):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "+" and depth == 0:
            return rest[:i], "+", rest[i + 1 :]
    raise FamilySpecError("coalesce spec needs '(A)@i+(B)@j'")


def _parse_anchored(piece: str) -> tuple[FamilySpec, int]:
    piece = piece.strip()
    if not piece.startswith("("):
        raise FamilySpecError(f"expected parenthesized sub-spec in {piece!r}")
    depth = 0
    for i, ch in enumerate(piece):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                inner = piece[1:i]
                tail = piece[i + 1 :]
                if not tail.startswith("@"):
                    raise FamilySpecError(f"missing '@vertex' in {piece!r}")
                return parse_family_spec(inner), _int(tail[1:])
    raise FamilySpecError(f"unbalanced parentheses in {piece!r}")


def format_family_spec(spec: FamilySpec) -> str:
    if spec.kind == "c3t":
        return "c3t:" + ",".join(map(str, spec.sizes))
    if spec.kind == "multipartite":
        return "multipartite:" + ",".join(map(str, spec.sizes))
    if spec.kind == "star":
        return f"star:{spec.sizes[0]}"
    if spec.kind == "cycle":
        base = f"cycle:{spec.sizes[0]}"
        if spec.arcs:
            base += ";arcs=" + ",".join(map(str, spec.arcs))
        return base
    if spec.kind == "k_plain":
        return (
            "K:q=" + ",".join(map(str, spec.q))
            + ";n=" + ",".join(map(str, spec.parts))
            + f";p={spec.p}"
        )
    if spec.kind == "k_gain":
        a, b, c, d = spec.gain_counts
        return (
            "K:q=" + ",".join(map(str, spec.q))
            + ";n=" + ",".join(map(str, spec.parts))
            + f";a={a},b={b},c={c},d={d}"
        )
    if spec.kind == "coalescence":
        s1, v1, s2, v2 = spec.sub
        return f"coalesce:({format_family_spec(s1)})@{v1}+({format_family_spec(s2)})@{v2}"
    raise FamilySpecError(f"unknown family kind {spec.kind!r}")


def _int(token: str) -> int:
    token = token.strip()
    if not token or not token.lstrip("-").isdigit():
        raise FamilySpecError(f"expected an integer, got {token!r}")
    return int(token)


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        raise FamilySpecError("expected a comma-separated integer list")
    return tuple(_int(tok) for tok in text.split(","))
