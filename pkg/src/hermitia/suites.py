"""Verification suites: each replays one spectral law over an exhaustive or
seeded corpus and reports every violation.

Laws that hold for arbitrary Hermitian congruence (pivoting, pendant
recursion, interlacing, cut-vertex composition, twin duplication) run over
every switching class including -1 gains; laws about mixed graphs (the p = 1
and p = 2 characterizations, rank-3 reduction) run over the mixed classes,
which is their stated scope.  Randomized suites draw from a fixed seed that
the HERMITIA_SEED environment variable or an explicit argument overrides.
"""

from __future__ import annotations

import itertools
import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .classify import (
    HypothesisViolation,
    cor39_condition,
    lem310_condition,
    lem311_check,
    lem38_condition,
    p1_characterize,
    thm11_classify,
    thm12_classify,
)
from .enumeration import EnumSpec, classes_up_to, enumerate_switching_classes
from .families import (
    gen_c3t,
    gen_complete_multipartite,
    gen_cycle,
    gen_K_gain,
    gen_K_plain,
)
from .graph_core import (
    QuartGainGraph,
    compact_str,
    components_avoiding,
    cut_vertices,
    coalesce,
    delete_vertex,
    disjoint_union,
    induced_subgraph,
    pendant_vertices,
)
from .numeric import GaussianRational, UNITS
from .spectra import (
    InertiaTriple,
    congruence,
    hermitian_matrix,
    inertia,
    inertia_exact,
    inertia_float,
)
from .switching_twins import (
    apply_switch,
    cycle_signature,
    is_even_triangle,
    twin_reduction,
)

DEFAULT_SEED = 1729


@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)
    millis: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, instance: str, expected: object, got: object) -> None:
        self.failures.append((instance, str(expected), str(got)))

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "failures": [
                {"graph": g, "expected": e, "got": o}
                for g, e, o in sorted(self.failures)
            ],
            "millis": self.millis,
        }


def _random_graph(rng: random.Random, max_n: int, edge_prob: float = 0.5) -> QuartGainGraph:
    n = rng.randint(1, max_n)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < edge_prob:
                edges.append((u, v, rng.choice(UNITS)))
    return QuartGainGraph(n, edges)


def _random_switch(rng: random.Random, n: int) -> tuple[int, ...]:
    return tuple(rng.choice(UNITS) for _ in range(n))


# -- individual suites --------------------------------------------------------------


def _suite_sylvester(report: SuiteReport, n: Optional[int], seed: int) -> None:
    """Inertia is invariant under congruence by random invertible matrices."""
    rng = random.Random(seed)
    max_n = n or 7
    for _ in range(120):
        g = _random_graph(rng, max_n)
        if g.n == 0:
            continue
        h = hermitian_matrix(g)
        s = _random_invertible(rng, g.n)
        report.checked += 1
        base = inertia_exact(h)
        conj = inertia_exact(congruence(h, s))
        if base != conj:
            report.record(compact_str(g), base, conj)


def _random_invertible(rng: random.Random, n: int) -> list[list[GaussianRational]]:
    # Unit lower triangular times nonzero diagonal times unit upper
    # triangular: invertible by construction.
    def small() -> GaussianRational:
        return GaussianRational.of(
            Fraction(rng.randint(-2, 2), rng.randint(1, 2)),
            Fraction(rng.randint(-1, 1), 1),
        )

    lower = [[GaussianRational.of(int(i == j)) for j in range(n)] for i in range(n)]
    upper = [[GaussianRational.of(int(i == j)) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            lower[i][j] = small()
            upper[j][i] = small()
    diag = [
        GaussianRational.of(rng.choice([1, -1, 2]), rng.choice([0, 1]))
        for _ in range(n)
    ]
    product = [[GaussianRational.of(0) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = GaussianRational.of(0)
            for k in range(n):
                acc = acc + lower[i][k] * diag[k] * upper[k][j]
            product[i][j] = acc
    return product


def _suite_pendant(report: SuiteReport, n: Optional[int], seed: int) -> None:
    """Deleting a pendant vertex and its neighbor costs exactly (1, 1, 0)."""
    for g in classes_up_to(n or 5):
        for v1 in pendant_vertices(g):
            v2 = g.neighbors(v1)[0]
            report.checked += 1
            whole = inertia(g)
            rest = inertia(induced_subgraph(g, [u for u in range(g.n) if u not in (v1, v2)]))
            expected = rest + InertiaTriple(1, 1, 0)
            if whole != expected:
                report.record(compact_str(g), expected, whole)


def _suite_interlacing(report: SuiteReport, n: Optional[int], seed: int) -> None:
    """Vertex deletion changes p and n by at most one, never upward."""
    for g in classes_up_to(n or 5):
        if g.n < 2:
            continue
        whole = inertia(g)
        for u in range(g.n):
            report.checked += 1
            sub = inertia(delete_vertex(g, u))
            ok = (
                whole.p - 1 <= sub.p <= whole.p
                and whole.n_neg - 1 <= sub.n_neg <= whole.n_neg
            )
            if not ok:
                report.record(f"{compact_str(g)} minus {u}", whole, sub)


def _suite_cutvertex(report: SuiteReport, n: Optional[int], seed: int) -> None:
    """Cut-vertex composition laws for the rank of the augmented components."""
    for g in classes_up_to(n or 5):
        for v in cut_vertices(g):
            comps = components_avoiding(g, v)
            ranks = []
            for comp in comps:
                alone = inertia(induced_subgraph(g, comp))
                with_v = inertia(induced_subgraph(g, sorted(comp + (v,))))
                ranks.append((alone, with_v))
            whole = inertia(g)
            minus_v = inertia(delete_vertex(g, v))
            if any(w.rank == a.rank + 2 for a, w in ranks):
                report.checked += 1
                expected = minus_v + InertiaTriple(1, 1, -1)
                if whole != expected:
                    report.record(f"{compact_str(g)} at {v} (rank+2)", expected, whole)
            for comp, (alone, with_v) in zip(comps, ranks):
                if with_v.rank == alone.rank:
                    report.checked += 1
                    other = inertia(
                        induced_subgraph(g, [u for u in range(g.n) if u not in comp])
                    )
                    if whole != alone + other:
                        report.record(
                            f"{compact_str(g)} at {v} split {comp}", alone + other, whole
                        )
            if all(w.rank == a.rank for a, w in ranks):
                report.checked += 1
                expected = minus_v + InertiaTriple(0, 0, 1)
                if whole != expected:
                    report.record(f"{compact_str(g)} at {v} (rank+0)", expected, whole)


def _cycle_nullity_expected(n: int, sigma: int) -> int:
    if n % 2 == 1:
        return 1 if sigma % 2 == 1 else 0
    if sigma % 2 == 1:
        return 0
    return 2 if (n + sigma) % 4 == 0 else 0


def _suite_cycle_nullity(report: SuiteReport, n: Optional[int], seed: int) -> None:
    """Nullity of every mixed cycle follows the five-case parity table."""
    top = n or 12
    for length in range(3, max(top, 3) + 1):
        for arcs in range(0, length + 1):
            g = gen_cycle(length, range(arcs))
            report.checked += 1
            sigma = cycle_signature(g, tuple(range(length)))
            if sigma != arcs:
                report.record(compact_str(g), f"sigma={arcs}", f"sigma={sigma}")
                continue
            expected = _cycle_nullity_expected(length, sigma)
            eta = inertia(g).eta
            if eta != expected:
                report.record(compact_str(g), f"eta={expected}", f"eta={eta}")


def _suite_p1(report: SuiteReport, n: Optional[int], seed: int) -> None:
    """p = 1 holds exactly for blown-up odd triangles and positive
    complete multipartite graphs (plus isolated vertices)."""
    rng = random.Random(seed)
    top = n or 5
    connected = list(classes_up_to(top, mixed_only=True))
    corpus: list[QuartGainGraph] = list(connected)
    # Disconnected composites: unions of two small classes, padded unions.
    small = [g for g in connected if g.n <= max(2, top - 2)]
    for _ in range(300):
        a = rng.choice(small)
        b = rng.choice(small)
        g = disjoint_union(a, b)
        if rng.random() < 0.3:
            g = disjoint_union(g, QuartGainGraph(1))
        corpus.append(g)
    for g in connected:
        if rng.random() < 0.1:
            corpus.append(disjoint_union(g, QuartGainGraph(rng.randint(1, 2))))
    for g in corpus:
        report.checked += 1
        tagged = p1_characterize(g) is not None
        is_p1 = inertia(g).p == 1
        if tagged != is_p1:
            report.record(compact_str(g), f"p1={is_p1}", f"tagged={tagged}")


def _add_twin(g: QuartGainGraph, u: int) -> QuartGainGraph:
    edges = list(g.edges) + [(g.n, x, g.gain(u, x)) for x in g.neighbors(u)]
    return QuartGainGraph(g.n + 1, edges)


def _suite_twins(report: SuiteReport, n: Optional[int], seed: int) -> None:
    """Duplicating a vertex into its twin class fixes (p, n) and bumps eta;
    removing a singleton class from a positive multipartite graph drops the
    rank by one."""
    for g in classes_up_to(n or 5):
        base = inertia(g)
        for u in range(g.n):
            report.checked += 1
            grown = inertia(_add_twin(g, u))
            expected = InertiaTriple(base.p, base.n_neg, base.eta + 1)
            if grown != expected:
                report.record(f"{compact_str(g)} twin {u}", expected, grown)
    rng = random.Random(seed)
    for sizes in ([1, 1, 1], [1, 2, 2], [1, 1, 3], [1, 2, 1, 2], [1, 1, 1, 1], [1, 3, 2, 2]):
        plain = gen_complete_multipartite(sizes)
        g = apply_switch(plain, _random_switch(rng, plain.n))
        singleton = sizes.index(1)
        v = sum(sizes[:singleton])
        report.checked += 1
        if inertia(g).rank != inertia(delete_vertex(g, v)).rank + 1:
            report.record(compact_str(g), "rank drop 1", "other")


def _suite_twin_rank3(report: SuiteReport, n: Optional[int], seed: int) -> None:
    """Connected mixed graphs have rank 3 exactly when the twin reduction
    is an even triangle."""
    for g in classes_up_to(n or 5, mixed_only=True):
        report.checked += 1
        rank3 = inertia(g).rank == 3
        reduced = is_even_triangle(twin_reduction(g))
        if rank3 != reduced:
            report.record(compact_str(g), f"rank3={rank3}", f"even-triangle={reduced}")


def _suite_c3t_rank(report: SuiteReport, n: Optional[int], seed: int) -> None:
    """Every blown-up odd triangle has inertia (1, 1, n - 2)."""
    for t1 in range(1, 5):
        for t2 in range(1, 5):
            for t3 in range(1, 5):
                g = gen_c3t(t1, t2, t3)
                report.checked += 1
                got = inertia(g)
                expected = InertiaTriple(1, 1, g.n - 2)
                if got != expected:
                    report.record(f"c3t:{t1},{t2},{t3}", expected, got)


def _suite_coalescence_bounds(report: SuiteReport, n: Optional[int], seed: int) -> None:
    """p of a one-vertex identification is squeezed between the deleted and
    whole-side sums; joining two non-star positive multipartite blocks with
    p = 1 gives exactly p = 2."""
    rng = random.Random(seed)
    for _ in range(150):
        a = _random_graph(rng, 5, 0.6)
        b = _random_graph(rng, 5, 0.6)
        if a.n == 0 or b.n == 0:
            continue
        va = rng.randrange(a.n)
        vb = rng.randrange(b.n)
        g = coalesce(a, va, b, vb)
        report.checked += 1
        lower = inertia(delete_vertex(a, va)).p + inertia(delete_vertex(b, vb)).p
        upper = inertia(a).p + inertia(b).p
        mid = inertia(g).p
        if not lower <= mid <= upper:
            report.record(compact_str(g), f"{lower} <= p <= {upper}", mid)
    # Exact p = 2 for non-star positive complete multipartite sides.
    size_pool = [[1, 1, 1], [2, 2], [2, 1, 1], [2, 3], [1, 1, 1, 1], [3, 2, 1]]
    for _ in range(60):
        sa = rng.choice(size_pool)
        sb = rng.choice(size_pool)
        a = apply_switch(gen_complete_multipartite(sa), _random_switch(rng, sum(sa)))
        b = apply_switch(gen_complete_multipartite(sb), _random_switch(rng, sum(sb)))
        g = coalesce(a, rng.randrange(a.n), b, rng.randrange(b.n))
        report.checked += 1
        got = inertia(g).p
        if got != 2:
            report.record(compact_str(g), 2, got)


def _sweep_parameters(k_max: int = 7, r_max: int = 5):
    for r in range(2, r_max + 1):
        for k in range(2, k_max + 1):
            yield r, k


def _suite_cor39(report: SuiteReport, n: Optional[int], seed: int) -> None:
    """Parameter predicate vs exact spectrum for the all-plain apex family."""
    rng = random.Random(seed)
    for r, k in _sweep_parameters():
        for p in range(1, k + 1):
            report.checked += 1
            predicted = cor39_condition(r, k, p)
            actual = inertia(gen_K_plain([1] * r, [1] * k, p)).p == 2
            if predicted != actual:
                report.record(f"K:q={'1,'*r};n={'1,'*k};p={p}", predicted, actual)
    for _ in range(25):
        r, k = rng.randint(2, 4), rng.randint(2, 5)
        p = rng.randint(1, k)
        q_sizes = [rng.randint(1, 3) for _ in range(r)]
        n_sizes = [rng.randint(1, 3) for _ in range(k)]
        report.checked += 1
        predicted = cor39_condition(r, k, p)
        actual = inertia(gen_K_plain(q_sizes, n_sizes, p)).p == 2
        if predicted != actual:
            report.record(f"K:q={q_sizes};n={n_sizes};p={p}", predicted, actual)


def _suite_lem38(report: SuiteReport, n: Optional[int], seed: int) -> None:
    """Predicate vs exact spectrum for the (a gain-i, b gain--i) family."""
    rng = random.Random(seed)
    for r, k in _sweep_parameters():
        for a in range(1, k + 1):
            for b in range(0, min(a, k - a) + 1):
                report.checked += 1
                predicted = lem38_condition(r, k, a, b)
                actual = inertia(gen_K_gain([1] * r, [1] * k, a, b, 0, 0)).p == 2
                if predicted != actual:
                    report.record(f"r={r},k={k},a={a},b={b}", predicted, actual)
    for _ in range(25):
        r, k = rng.randint(2, 4), rng.randint(2, 5)
        a = rng.randint(1, k)
        b = rng.randint(0, min(a, k - a))
        q_sizes = [rng.randint(1, 3) for _ in range(r)]
        n_sizes = [rng.randint(1, 3) for _ in range(k)]
        report.checked += 1
        predicted = lem38_condition(r, k, a, b)
        actual = inertia(gen_K_gain(q_sizes, n_sizes, a, b, 0, 0)).p == 2
        if predicted != actual:
            report.record(f"q={q_sizes},n={n_sizes},a={a},b={b}", predicted, actual)


def _suite_lem310(report: SuiteReport, n: Optional[int], seed: int) -> None:
    """Predicate vs exact spectrum for the (a gain-i, c gain-1) family."""
    rng = random.Random(seed)
    for r, k in _sweep_parameters():
        for a in range(1, k + 1):
            for c in range(0, min(a, k - a) + 1):
                report.checked += 1
                predicted = lem310_condition(r, k, a, c)
                actual = inertia(gen_K_gain([1] * r, [1] * k, a, 0, c, 0)).p == 2
                if predicted != actual:
                    report.record(f"r={r},k={k},a={a},c={c}", predicted, actual)
    for _ in range(25):
        r, k = rng.randint(2, 4), rng.randint(2, 5)
        a = rng.randint(1, k)
        c = rng.randint(0, min(a, k - a))
        q_sizes = [rng.randint(1, 3) for _ in range(r)]
        n_sizes = [rng.randint(1, 3) for _ in range(k)]
        report.checked += 1
        predicted = lem310_condition(r, k, a, c)
        actual = inertia(gen_K_gain(q_sizes, n_sizes, a, 0, c, 0)).p == 2
        if predicted != actual:
            report.record(f"q={q_sizes},n={n_sizes},a={a},c={c}", predicted, actual)


def _suite_lem311(report: SuiteReport, n: Optional[int], seed: int) -> None:
    """Whenever the one-vertex-extension hypotheses hold, the structural
    conclusion must hold; tried over systematic apex attachments."""
    rng = random.Random(seed)
    size_pool = [[1, 1], [2, 1], [2, 2], [1, 1, 1], [2, 1, 1], [2, 2, 1], [2, 2, 2]]
    for sizes in size_pool:
        f1 = gen_complete_multipartite(sizes)
        total = f1.n
        blocks = []
        idx = 0
        for s in sizes:
            blocks.append(list(range(idx, idx + s)))
            idx += s
        # Whole-class attachments with one gain per class (0 = skip class).
        for gains in itertools.product((None,) + UNITS, repeat=len(sizes)):
            if all(g is None for g in gains):
                continue
            edges = list(f1.edges)
            for block, g in zip(blocks, gains):
                if g is None:
                    continue
                edges.extend((u, total, (-g) % 4) for u in block)
            _check_lem311_instance(report, f1, QuartGainGraph(total + 1, edges), total)
    # Partial attachments: arbitrary neighbor subsets with random gains.
    for _ in range(200):
        sizes = rng.choice(size_pool)
        f1 = apply_switch(
            gen_complete_multipartite(sizes), _random_switch(rng, sum(sizes))
        )
        total = f1.n
        subset = [u for u in range(total) if rng.random() < 0.5]
        if not subset:
            continue
        edges = list(f1.edges) + [(u, total, rng.choice(UNITS)) for u in subset]
        _check_lem311_instance(report, f1, QuartGainGraph(total + 1, edges), total)


def _check_lem311_instance(
    report: SuiteReport, f1: QuartGainGraph, f2: QuartGainGraph, v: int
) -> None:
    try:
        conclusion = lem311_check(f1, f2, v)
    except HypothesisViolation:
        return
    report.checked += 1
    if not conclusion:
        report.record(compact_str(f2), "conclusion holds", "conclusion fails")


def _suite_thm11(report: SuiteReport, n: Optional[int], seed: int) -> None:
    """Over every mixed class with a pendant vertex: classified iff p = 2."""
    top = n or 5
    for order in range(2, top + 1):
        spec = EnumSpec(n=order, has_pendant=True, mixed_only=True)
        for g in enumerate_switching_classes(spec):
            report.checked += 1
            classified = thm11_classify(g) is not None
            is_p2 = inertia(g).p == 2
            if classified != is_p2:
                report.record(compact_str(g), f"p2={is_p2}", f"classified={classified}")


def _suite_thm12(report: SuiteReport, n: Optional[int], seed: int) -> None:
    """Over every mixed class with a cut vertex and no pendant vertex:
    at least one family case matches iff p = 2."""
    top = n or 6
    for order in range(3, top + 1):
        spec = EnumSpec(n=order, has_cut_vertex=True, no_pendant=True, mixed_only=True)
        for g in enumerate_switching_classes(spec):
            report.checked += 1
            matched = bool(thm12_classify(g).cases)
            is_p2 = inertia(g).p == 2
            if matched != is_p2:
                report.record(compact_str(g), f"p2={is_p2}", f"matched={matched}")


def _suite_oracle_agreement(report: SuiteReport, n: Optional[int], seed: int) -> None:
    """Exact congruence inertia equals the Jacobi float inertia at 1e-9."""
    rng = random.Random(seed)
    for _ in range(10000):
        g = _random_graph(rng, min(n or 10, 10))
        h = hermitian_matrix(g)
        report.checked += 1
        exact = inertia_exact(h)
        floated = inertia_float(h, 1e-9)
        if exact != floated:
            report.record(compact_str(g), exact, floated)


_SUITES: dict[str, Callable[[SuiteReport, Optional[int], int], None]] = {
    "sylvester": _suite_sylvester,
    "pendant": _suite_pendant,
    "interlacing": _suite_interlacing,
    "cutvertex": _suite_cutvertex,
    "cycle_nullity": _suite_cycle_nullity,
    "p1": _suite_p1,
    "twins": _suite_twins,
    "twin_rank3": _suite_twin_rank3,
    "c3t_rank": _suite_c3t_rank,
    "coalescence_bounds": _suite_coalescence_bounds,
    "lem38": _suite_lem38,
    "cor39": _suite_cor39,
    "lem310": _suite_lem310,
    "lem311": _suite_lem311,
    "thm11": _suite_thm11,
    "thm12": _suite_thm12,
    "oracle_agreement": _suite_oracle_agreement,
}

SUITE_NAMES = tuple(_SUITES)


def verify_suite(name: str, n: Optional[int] = None, seed: Optional[int] = None) -> SuiteReport:
    """Run one named suite and report instances checked and failures."""
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}")
    if seed is None:
        seed = int(os.environ.get("HERMITIA_SEED", DEFAULT_SEED))
    report = SuiteReport(suite=name)
    start = time.perf_counter()
    _SUITES[name](report, n, seed)
    report.millis = int((time.perf_counter() - start) * 1000)
    report.failures.sort()
    return report


def verify_all(n: Optional[int] = None, seed: Optional[int] = None) -> list[SuiteReport]:
    return [verify_suite(name, n=n, seed=seed) for name in SUITE_NAMES]
