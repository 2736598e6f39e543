import math
import random

import numpy as np
import pytest

from hermitia import (
    GaussianRational,
    HermitianMatrix,
    InertiaTriple,
    congruence,
    disjoint_union,
    eig_float,
    gen_c3t,
    gen_cycle,
    hermitian_matrix,
    inertia,
    inertia_exact,
    inertia_float,
    parse_graph,
)

from conftest import random_graph

gr = GaussianRational.of


def test_hermitian_matrix_single_edge():
    h = hermitian_matrix(parse_graph("n 2\nU 0 1"))
    assert h.entries == ((gr(0), gr(1)), (gr(1), gr(0)))


def test_hermitian_matrix_arc():
    h = hermitian_matrix(parse_graph("n 2\nA 0 1"))
    assert h.entry(0, 1) == gr(0, 1)
    assert h.entry(1, 0) == gr(0, -1)


def test_hermitian_matrix_empty():
    h = hermitian_matrix(parse_graph("n 3"))
    assert all(h.entry(s, t) == gr(0) for s in range(3) for t in range(3))


def test_hermitian_validation():
    with pytest.raises(ValueError, match="Hermitian"):
        HermitianMatrix([[gr(0), gr(1)], [gr(2), gr(0)]])
    with pytest.raises(ValueError, match="Hermitian"):
        HermitianMatrix([[gr(0, 1)]])
    with pytest.raises(ValueError, match="square"):
        HermitianMatrix([[gr(0), gr(1)]])


def test_inertia_exact_k3():
    g = parse_graph("n 3\nU 0 1\nU 0 2\nU 1 2")
    assert inertia_exact(hermitian_matrix(g)).as_tuple() == (1, 2, 0)


def test_inertia_exact_odd_triangle():
    g = parse_graph("n 3\nA 0 1\nU 1 2\nU 0 2")
    assert inertia_exact(hermitian_matrix(g)).as_tuple() == (1, 1, 1)


def test_inertia_exact_c3t_222():
    assert inertia_exact(hermitian_matrix(gen_c3t(2, 2, 2))).as_tuple() == (1, 1, 4)


def test_inertia_p2_and_c4():
    assert inertia(parse_graph("n 2\nU 0 1")).as_tuple() == (1, 1, 0)
    assert inertia(gen_cycle(4)).as_tuple() == (1, 1, 2)


def test_inertia_additive_over_components():
    p2 = parse_graph("n 2\nU 0 1")
    assert inertia(disjoint_union(p2, p2)).as_tuple() == (2, 2, 0)


def test_inertia_triple_arithmetic():
    t = InertiaTriple(1, 2, 3)
    assert t.rank == 3
    assert (t + InertiaTriple(1, 1, -1)).as_tuple() == (2, 3, 2)


def _cycle_spectrum(n: int, value_exponent: int) -> list[float]:
    # Closed form for a gain cycle whose value is i**value_exponent:
    # eigenvalues 2 cos((theta + 2 pi j) / n) with theta = value_exponent*pi/2.
    theta = value_exponent * math.pi / 2
    return sorted(2.0 * math.cos((theta + 2.0 * math.pi * j) / n) for j in range(n))


def test_eig_float_p2_and_k3():
    assert eig_float(hermitian_matrix(parse_graph("n 2\nU 0 1"))) == pytest.approx([-1.0, 1.0])
    k3 = parse_graph("n 3\nU 0 1\nU 0 2\nU 1 2")
    assert eig_float(hermitian_matrix(k3)) == pytest.approx([-1.0, -1.0, 2.0])


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8])
@pytest.mark.parametrize("arcs", [0, 1, 2, 3])
def test_eig_float_matches_cycle_closed_form(n, arcs):
    g = gen_cycle(n, range(arcs))
    got = eig_float(hermitian_matrix(g))
    assert got == pytest.approx(_cycle_spectrum(n, arcs % 4), abs=1e-9)


def test_eig_float_c4_spectrum():
    got = eig_float(hermitian_matrix(gen_cycle(4)))
    assert got == pytest.approx([-2.0, 0.0, 0.0, 2.0], abs=1e-9)


def test_inertia_float_examples():
    assert inertia_float(hermitian_matrix(parse_graph("n 2\nU 0 1")), 1e-9).as_tuple() == (1, 1, 0)
    assert inertia_float(hermitian_matrix(parse_graph("n 4")), 1e-9).as_tuple() == (0, 0, 4)
    odd = parse_graph("n 3\nA 0 1\nU 1 2\nU 0 2")
    assert inertia_float(hermitian_matrix(odd), 1e-9) == inertia_exact(hermitian_matrix(odd))
    with pytest.raises(ValueError):
        inertia_float(hermitian_matrix(odd), 0.0)


def test_oracle_agreement_sample():
    rng = random.Random(99)
    for _ in range(400):
        g = random_graph(rng, 8)
        h = hermitian_matrix(g)
        assert inertia_exact(h) == inertia_float(h, 1e-9)


def test_exact_matches_numpy_eigvalsh_sample():
    # Third-party cross-check on top of the in-repo oracle pair.
    rng = random.Random(7)
    for _ in range(100):
        g = random_graph(rng, 7)
        h = hermitian_matrix(g)
        eigs = np.linalg.eigvalsh(h.to_complex_array())
        p = int((eigs > 1e-9).sum())
        n_neg = int((eigs < -1e-9).sum())
        assert inertia_exact(h).as_tuple() == (p, n_neg, g.n - p - n_neg)


def test_congruence_invariance_fixed():
    g = parse_graph("n 3\nA 0 1\nU 1 2\nU 0 2")
    h = hermitian_matrix(g)
    s = [
        [gr(1), gr(0, 1), gr(2)],
        [gr(0), gr(1), gr(1, -1)],
        [gr(0), gr(0), gr(-1)],
    ]
    assert inertia_exact(congruence(h, s)) == inertia_exact(h)


def test_congruence_shape_check():
    h = hermitian_matrix(parse_graph("n 2\nU 0 1"))
    with pytest.raises(ValueError):
        congruence(h, [[gr(1)]])


def test_jacobi_sweep_budget():
    from hermitia import JacobiConvergenceError

    k3 = parse_graph("n 3\nU 0 1\nU 0 2\nU 1 2")
    with pytest.raises(JacobiConvergenceError):
        eig_float(hermitian_matrix(k3), max_sweeps=0)
