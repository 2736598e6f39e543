"""Exact inertia of Hermitian gain-graph matrices, plus a float cross-check.

Two fully independent routes compute the signature of H(G):

* :func:`inertia_exact` diagonalizes by congruence over the Gaussian
  rationals and counts pivot signs.  Congruent Hermitian matrices share
  their inertia, so the count is exact.
* :func:`eig_float` runs a cyclic Jacobi eigensolver on a complex floating
  copy; :func:`inertia_float` thresholds its eigenvalues.  This path shares
  no code with the exact one and exists purely as an oracle.

Spectral quantities are additive over connected components; :func:`inertia`
exploits that to keep matrices small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph_core import QuartGainGraph, components, induced_subgraph
from .numeric import GR_ZERO, GaussianRational, unit_value


class JacobiConvergenceError(RuntimeError):
    """The float eigensolver did not converge within its sweep budget."""


@dataclass(frozen=True, slots=True)
class InertiaTriple:
    """Counts of positive, negative and zero eigenvalues."""

    p: int
    n_neg: int
    eta: int

    @property
    def rank(self) -> int:
        return self.p + self.n_neg

    def __add__(self, other: "InertiaTriple") -> "InertiaTriple":
        return InertiaTriple(self.p + other.p, self.n_neg + other.n_neg, self.eta + other.eta)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p, self.n_neg, self.eta)

    def __str__(self) -> str:
        return f"(p={self.p}, n={self.n_neg}, eta={self.eta})"


class HermitianMatrix:
    """A square matrix of GaussianRational entries with H* = H, checked."""

    __slots__ = ("n", "entries")

    def __init__(self, entries: Sequence[Sequence[GaussianRational]]):
        rows = tuple(tuple(row) for row in entries)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix is not square")
        for s in range(n):
            for t in range(s, n):
                if rows[s][t] != rows[t][s].conj():
                    raise ValueError(f"matrix is not Hermitian at ({s}, {t})")
        self.n = n
        self.entries = rows

    def entry(self, s: int, t: int) -> GaussianRational:
        return self.entries[s][t]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def to_complex_array(self) -> np.ndarray:
        return np.array(
            [[e.to_complex() for e in row] for row in self.entries], dtype=complex
        )


def hermitian_matrix(graph: QuartGainGraph) -> HermitianMatrix:
    """H(G): entry (s, t) is the gain of the edge oriented s -> t, else 0."""
    n = graph.n
    grid = [[GR_ZERO for _ in range(n)] for _ in range(n)]
    for u, v, g in graph.edges:
        grid[u][v] = unit_value(g)
        grid[v][u] = unit_value(g).conj()
    return HermitianMatrix(grid)


# -- exact route ---------------------------------------------------------------

# The congruence reduction below works on (re, im) Fraction pairs rather than
# GaussianRational objects: the elimination is the hot path of the whole
# package and plain tuples halve its constant factor.

_Pair = tuple[Fraction, Fraction]


def _pmul(a: _Pair, b: _Pair) -> _Pair:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _pdiv(a: _Pair, b: _Pair) -> _Pair:
    d = b[0] * b[0] + b[1] * b[1]
    return ((a[0] * b[0] + a[1] * b[1]) / d, (a[1] * b[0] - a[0] * b[1]) / d)


def inertia_exact(matrix: HermitianMatrix) -> InertiaTriple:
    """Exact inertia by Hermitian congruence diagonalization.

    Repeatedly (a) pivots on the smallest-index nonzero diagonal entry,
    eliminating its row and column and recording the pivot sign; (b) when
    the whole remaining diagonal is zero, takes the lexicographically
    smallest nonzero off-diagonal pair, which contributes one positive and
    one negative eigenvalue, and eliminates both of its indices at once.
    The dimension left when nothing remains nonzero is the nullity.  All
    arithmetic stays rational, so no square roots ever appear.
    """
    n = matrix.n
    m: list[list[_Pair]] = [
        [(e.re, e.im) for e in row] for row in matrix.entries
    ]
    active = list(range(n))
    pos = neg = 0
    while active:
        pivot = None
        for j in active:
            if m[j][j][0] != 0:
                pivot = j
                break
        if pivot is not None:
            d = m[pivot][pivot][0]
            if d > 0:
                pos += 1
            else:
                neg += 1
            rest = [t for t in active if t != pivot]
            row_p = m[pivot]
            for t in rest:
                ct = m[t][pivot]
                if ct[0] == 0 and ct[1] == 0:
                    continue
                f = (ct[0] / d, ct[1] / d)
                row_t = m[t]
                for x in rest:
                    px = row_p[x]
                    if px[0] != 0 or px[1] != 0:
                        fp = _pmul(f, px)
                        tx = row_t[x]
                        row_t[x] = (tx[0] - fp[0], tx[1] - fp[1])
            active = rest
            continue
        pair = None
        for i, s in enumerate(active):
            row_s = m[s]
            for t in active[i + 1 :]:
                e = row_s[t]
                if e[0] != 0 or e[1] != 0:
                    pair = (s, t)
                    break
            if pair is not None:
                break
        if pair is None:
            break
        s, t = pair
        h = m[s][t]
        hbar = (h[0], -h[1])
        pos += 1
        neg += 1
        rest = [x for x in active if x != s and x != t]
        # Block elimination against the invertible 2x2 [[0, h], [hbar, 0]].
        for x in rest:
            xs = m[x][s]
            xt = m[x][t]
            if xs == (0, 0) and xt == (0, 0):
                continue
            row_x = m[x]
            for y in rest:
                sy = m[s][y]
                ty = m[t][y]
                u1 = _pdiv(_pmul(xt, sy), h)
                u2 = _pdiv(_pmul(xs, ty), hbar)
                xy = row_x[y]
                row_x[y] = (xy[0] - u1[0] - u2[0], xy[1] - u1[1] - u2[1])
        active = rest
    return InertiaTriple(pos, neg, len(active))


def inertia(graph: QuartGainGraph) -> InertiaTriple:
    """Inertia of H(G), computed per connected component and summed."""
    total = InertiaTriple(0, 0, 0)
    for comp in components(graph):
        sub = induced_subgraph(graph, comp)
        total = total + inertia_exact(hermitian_matrix(sub))
    return total


def congruence(matrix: HermitianMatrix, s: Sequence[Sequence[GaussianRational]]) -> HermitianMatrix:
    """S* H S over the Gaussian rationals, for congruence-invariance checks."""
    n = matrix.n
    rows = [list(r) for r in s]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError("congruence matrix has wrong shape")
    hs = [
        [
            sum((matrix.entries[i][k] * rows[k][j] for k in range(n)), GR_ZERO)
            for j in range(n)
        ]
        for i in range(n)
    ]
    out = [
        [
            sum((rows[k][i].conj() * hs[k][j] for k in range(n)), GR_ZERO)
            for j in range(n)
        ]
        for i in range(n)
    ]
    return HermitianMatrix(out)


# -- float oracle --------------------------------------------------------------


def eig_float(
    matrix: HermitianMatrix, rel_tol: float = 1e-12, max_sweeps: int = 60
) -> list[float]:
    """Eigenvalues by cyclic Jacobi rotations, ascending.

    Each rotation phases the (p, q) entry real and applies a plane rotation
    annihilating it.  Sweeps repeat until the off-diagonal Frobenius norm
    drops below ``rel_tol`` times the matrix Frobenius norm.  Exceeding the
    sweep budget signals a bug rather than an expected condition.
    """
    a = matrix.to_complex_array()
    n = matrix.n
    if n == 0:
        return []
    fro = math.sqrt(float((np.abs(a) ** 2).sum()))
    if fro == 0.0:
        return [0.0] * n
    thresh = rel_tol * fro
    skip = thresh / (2.0 * n)
    for _ in range(max_sweeps):
        sq = np.abs(a) ** 2
        np.fill_diagonal(sq, 0.0)
        if math.sqrt(float(sq.sum())) <= thresh:
            return sorted(float(x) for x in a.diagonal().real)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= skip:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                phase = apq / r
                tau = (aqq - app) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = phase * c * col_p - s * col_q
                a[:, q] = phase * s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = np.conj(phase * c) * row_p - s * row_q
                a[q, :] = np.conj(phase * s) * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = complex(app - t * r)
                a[q, q] = complex(aqq + t * r)
    raise JacobiConvergenceError(f"no convergence after {max_sweeps} sweeps (n={n})")


def inertia_float(matrix: HermitianMatrix, tol: float = 1e-9) -> InertiaTriple:
    """Inertia from float eigenvalues, classified at tol * max(1, spectral radius)."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    eigs = eig_float(matrix)
    scale = max(1.0, max((abs(e) for e in eigs), default=0.0))
    cut = tol * scale
    p = sum(1 for e in eigs if e > cut)
    n_neg = sum(1 for e in eigs if e < -cut)
    return InertiaTriple(p, n_neg, matrix.n - p - n_neg)
