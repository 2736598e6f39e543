import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hermitia import (
    QuartGainGraph,
    UNIT_I,
    UNIT_MINUS_I,
    UNIT_MINUS_ONE,
    UNIT_ONE,
    apply_switch,
    are_twins,
    converse,
    cycle_signature,
    cycle_value,
    eig_float,
    gen_c3t,
    gen_cycle,
    hermitian_matrix,
    inertia,
    is_even_triangle,
    is_odd_triangle,
    is_positive,
    parse_graph,
    switching_equivalent,
    switching_equivalent_up_to_iso,
    switching_witness,
    tree_normalize,
    twin_partition,
    twin_reduction,
    two_way_directed,
    two_way_mixed,
    underlying,
)

from conftest import brute_force_equivalent, quart_graphs, random_graph, random_switch

ODD = "n 3\nA 0 1\nU 1 2\nU 0 2"
K3 = "n 3\nU 0 1\nU 0 2\nU 1 2"
POSITIVE_TRIANGLE = "n 3\nA 0 1\nA 2 1\nU 0 2"  # gains i, -i, 1: value 1


def test_apply_switch_examples():
    arc = parse_graph("n 2\nA 0 1")
    assert apply_switch(arc, (UNIT_ONE, UNIT_MINUS_I)) == parse_graph("n 2\nU 0 1")
    g = parse_graph(ODD)
    assert apply_switch(g, (UNIT_ONE,) * 3) == g
    edge = parse_graph("n 2\nU 0 1")
    switched = apply_switch(edge, (UNIT_ONE, UNIT_MINUS_ONE))
    assert switched.gain(0, 1) == UNIT_MINUS_ONE
    assert not switched.is_mixed


def test_apply_switch_preserves_underlying_and_inertia():
    rng = random.Random(4)
    for _ in range(60):
        g = random_graph(rng, 6)
        theta = random_switch(rng, g.n)
        switched = apply_switch(g, theta)
        assert underlying(switched) == underlying(g)
        assert inertia(switched) == inertia(g)


def test_converse():
    assert converse(parse_graph("n 2\nA 0 1")) == parse_graph("n 2\nA 1 0")
    k3 = parse_graph(K3)
    assert converse(k3) == k3
    tri = parse_graph("n 3\nA 0 1\nA 1 2\nU 0 2")
    assert converse(tri) == parse_graph("n 3\nA 1 0\nA 2 1\nU 0 2")


def test_two_way_directed():
    arc = parse_graph("n 2\nA 0 1")
    assert two_way_directed(arc, (0,)) == parse_graph("n 2\nA 1 0")
    with pytest.raises(ValueError):
        two_way_directed(parse_graph("n 2\nU 0 1"), (0,))


def test_two_way_mixed():
    edge = parse_graph("n 2\nU 0 1")
    flipped = two_way_mixed(edge, (0,))
    assert underlying(flipped) == underlying(edge)
    assert flipped.gain(0, 1) in (UNIT_I, UNIT_MINUS_I)
    # Empty cut: identity.
    g = parse_graph(ODD)
    assert two_way_mixed(g, ()) == g
    assert two_way_directed(g, ()) == g


def test_two_way_mixed_keeps_mixedness_and_reverses():
    # Arcs into the cut side become undirected; undirected edges become arcs
    # opposite to the former arc direction.
    g = parse_graph("n 3\nA 0 2\nU 1 2")
    out = two_way_mixed(g, (0, 1))
    assert out.is_mixed
    assert out.gain(0, 2) == UNIT_ONE
    assert out.gain(2, 1) == UNIT_I  # arc 2 -> 1, opposite side of former 0 -> 2
    with pytest.raises(ValueError):
        two_way_mixed(parse_graph("n 3\nA 0 2\nA 2 1"), (0, 1))


def test_cycle_value_and_signature():
    k3 = parse_graph(K3)
    assert cycle_value(k3, (0, 1, 2)) == UNIT_ONE
    assert cycle_signature(k3, (0, 1, 2)) == 0
    tri = parse_graph("n 3\nA 0 1\nA 1 2\nA 2 0")
    assert cycle_value(tri, (0, 1, 2)) == UNIT_MINUS_I
    assert cycle_signature(tri, (0, 1, 2)) == 3
    # Reversal conjugates the value and negates the signature.
    assert cycle_value(tri, (2, 1, 0)) == UNIT_I
    assert cycle_signature(tri, (2, 1, 0)) == -3
    with pytest.raises(ValueError):
        cycle_value(parse_graph("n 3\nU 0 1\nU 1 2"), (0, 1, 2))
    with pytest.raises(ValueError):
        cycle_signature(parse_graph("n 3\nG 0 1 -1\nU 1 2\nU 0 2"), (0, 1, 2))


def test_even_cycle_with_one_arc_has_full_rank():
    g = gen_cycle(4, (0,))
    assert cycle_signature(g, (0, 1, 2, 3)) == 1
    assert inertia(g).eta == 0


def test_tree_normalize_examples():
    arc = parse_graph("n 2\nA 0 1")
    normal, theta = tree_normalize(arc)
    assert normal == parse_graph("n 2\nU 0 1")
    assert apply_switch(arc, theta) == normal

    positive = parse_graph(POSITIVE_TRIANGLE)
    assert tree_normalize(positive).graph == parse_graph(K3)

    negative_quad = parse_graph("n 4\nG 0 1 -1\nU 1 2\nU 2 3\nU 0 3")
    normal = tree_normalize(negative_quad).graph
    non_tree_gains = sorted(g for _, _, g in normal.edges if g != UNIT_ONE)
    assert non_tree_gains == [UNIT_MINUS_ONE]


@given(quart_graphs())
def test_tree_normalize_idempotent(g):
    normal = tree_normalize(g).graph
    again, theta = tree_normalize(normal)
    assert again == normal
    assert all(t == UNIT_ONE for t in theta)


@settings(max_examples=60)
@given(quart_graphs(max_n=6), st.data())
def test_normal_form_switch_invariant(g, data):
    theta = tuple(data.draw(st.sampled_from((0, 1, 2, 3))) for _ in range(g.n))
    assert tree_normalize(apply_switch(g, theta)).graph == tree_normalize(g).graph


def test_switching_equivalent_examples():
    assert switching_equivalent(parse_graph("n 2\nA 0 1"), parse_graph("n 2\nU 0 1"))
    assert switching_equivalent(parse_graph(POSITIVE_TRIANGLE), parse_graph(K3))
    assert not switching_equivalent(parse_graph(ODD), parse_graph(K3))


def test_switching_witness_semantics():
    g1 = parse_graph(ODD)
    g2 = converse(apply_switch(g1, (UNIT_I, UNIT_MINUS_ONE, UNIT_ONE)))
    witness = switching_witness(g1, g2)
    assert witness is not None
    theta, took_converse = witness
    result = apply_switch(g1, theta)
    if took_converse:
        result = converse(result)
    assert result == g2


def test_switching_equivalent_agrees_with_brute_force():
    rng = random.Random(11)
    checked = agreements = 0
    for _ in range(250):
        g1 = random_graph(rng, 5)
        style = rng.random()
        if style < 0.4:
            g2 = apply_switch(g1, random_switch(rng, g1.n))
        elif style < 0.6:
            g2 = converse(apply_switch(g1, random_switch(rng, g1.n)))
        else:
            g2 = QuartGainGraph(
                g1.n, [(u, v, rng.choice((0, 1, 2, 3))) for u, v, _ in g1.edges]
            )
        checked += 1
        assert switching_equivalent(g1, g2) == brute_force_equivalent(g1, g2)
        agreements += 1
    assert checked == agreements


def test_equivalence_implies_equal_spectra():
    rng = random.Random(12)
    for _ in range(40):
        g1 = random_graph(rng, 6)
        g2 = apply_switch(g1, random_switch(rng, g1.n))
        if rng.random() < 0.5:
            g2 = converse(g2)
        assert switching_equivalent(g1, g2)
        assert inertia(g1) == inertia(g2)
        e1 = eig_float(hermitian_matrix(g1))
        e2 = eig_float(hermitian_matrix(g2))
        assert all(abs(a - b) < 1e-8 for a, b in zip(e1, e2))


def test_cycle_value_switch_invariant_signature_not():
    c4 = gen_cycle(4)
    theta = (UNIT_ONE, UNIT_I, UNIT_MINUS_ONE, UNIT_MINUS_I)
    switched = apply_switch(c4, theta)
    assert switched.is_mixed
    assert cycle_value(switched, (0, 1, 2, 3)) == cycle_value(c4, (0, 1, 2, 3))
    assert cycle_signature(c4, (0, 1, 2, 3)) == 0
    assert cycle_signature(switched, (0, 1, 2, 3)) == 4


def test_cycle_positivity_iff_signature_zero_mod_4():
    for n in (3, 4, 5, 6):
        for arcs in range(n + 1):
            g = gen_cycle(n, range(arcs))
            sigma = cycle_signature(g, tuple(range(n)))
            assert is_positive(g) == (sigma % 4 == 0)


def test_is_positive_examples():
    assert is_positive(parse_graph(K3))
    assert is_positive(parse_graph(POSITIVE_TRIANGLE))
    assert not is_positive(parse_graph(ODD))
    # Disconnected: both components must be positive.
    g = parse_graph("n 6\nU 0 1\nU 1 2\nU 0 2\nA 3 4\nU 4 5\nU 3 5")
    assert not is_positive(g)


def test_up_to_iso_examples():
    assert switching_equivalent_up_to_iso(
        parse_graph("n 2\nA 1 0"), parse_graph("n 2\nU 0 1")
    ) is not None
    even = parse_graph("n 3\nA 0 1\nA 2 1\nU 0 2")
    assert switching_equivalent_up_to_iso(parse_graph(ODD), even) is None
    # Same class, different arc placement.
    g1 = gen_c3t(1, 1, 1)
    g2 = parse_graph("n 3\nU 0 1\nA 1 2\nU 0 2")
    witness = switching_equivalent_up_to_iso(g1, g2)
    assert witness is not None
    from hermitia import relabel

    relabeled = apply_switch(relabel(g1, witness.perm), witness.theta)
    if witness.took_converse:
        relabeled = converse(relabeled)
    assert relabeled == g2


def test_up_to_iso_size_cap():
    big = gen_c3t(5, 5, 5)
    with pytest.raises(ValueError):
        switching_equivalent_up_to_iso(big, big, max_vertices=12)


def test_twins_examples():
    g = gen_c3t(2, 1, 1)
    assert are_twins(g, 0, 1) == UNIT_ONE
    edge = parse_graph("n 2\nU 0 1")
    assert are_twins(edge, 0, 1) is None
    with pytest.raises(ValueError):
        are_twins(edge, 0, 0)


def test_twins_with_nontrivial_alpha():
    # Rows of 0 and 1 differ by the unit -1.
    g = parse_graph("n 3\nU 0 2\nG 1 2 -1")
    assert are_twins(g, 0, 1) == UNIT_MINUS_ONE
    assert are_twins(g, 1, 0) == UNIT_MINUS_ONE


def test_isolated_vertices_are_twins():
    g = parse_graph("n 4\nU 0 1")
    assert are_twins(g, 2, 3) == UNIT_ONE


def test_twin_partition_structure():
    g = gen_c3t(2, 2, 1)
    part = twin_partition(g)
    assert part.classes == ((0, 1), (2, 3), (4,))
    assert part.representatives == (0, 2, 4)
    assert all(a == UNIT_ONE for a in part.alphas)


def test_twin_reduction_of_c3t_is_odd_triangle():
    for sizes in ((1, 1, 1), (2, 1, 1), (3, 2, 1), (2, 2, 2)):
        reduced = twin_reduction(gen_c3t(*sizes))
        assert is_odd_triangle(reduced)


def test_triangle_parity_predicates():
    assert is_odd_triangle(parse_graph(ODD))
    assert not is_even_triangle(parse_graph(ODD))
    even = parse_graph("n 3\nA 0 1\nA 2 1\nU 0 2")
    assert is_even_triangle(even)
    assert is_even_triangle(parse_graph(K3))
    p3 = parse_graph("n 3\nU 0 1\nU 1 2")
    assert not is_odd_triangle(p3)
    assert not is_even_triangle(p3)


def test_twin_reduction_equivalence_mirrors_graph_equivalence():
    # Same underlying graph: equivalent iff the twin structures agree and
    # the reductions are equivalent.
    rng = random.Random(21)
    for _ in range(150):
        g1 = random_graph(rng, 5, 0.6)
        if rng.random() < 0.5:
            g2 = apply_switch(g1, random_switch(rng, g1.n))
            if rng.random() < 0.5:
                g2 = converse(g2)
        else:
            g2 = QuartGainGraph(
                g1.n, [(u, v, rng.choice((0, 1, 2, 3))) for u, v, _ in g1.edges]
            )
        lhs = switching_equivalent(g1, g2)
        p1, p2 = twin_partition(g1), twin_partition(g2)
        rhs = p1.classes == p2.classes and switching_equivalent(
            twin_reduction(g1), twin_reduction(g2)
        )
        assert lhs == rhs


def test_twin_partition_records_alphas():
    g = parse_graph("n 3\nU 0 2\nG 1 2 -1")
    part = twin_partition(g)
    assert part.classes == ((0, 1), (2,))
    assert part.alphas[0] == UNIT_ONE      # representatives carry alpha 1
    assert part.alphas[1] == UNIT_MINUS_ONE
