import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import permutations
from orbitpoly.errors import ConsistencyError, InputError
from orbitpoly.fixtures import gens, graph_suite
from orbitpoly.graph import (
    SimpleGraph,
    act_on_orientation,
    act_on_pair,
    acyclic_orientations,
    chromatic_oracle,
    complete_graph,
    cycle_graph,
    even_chromatic_formula,
    even_chromatic_polynomial,
    even_proper_coloring_orbits,
    fixed_coloring_count,
    fixed_orientations,
    is_acyclic,
    is_graph_action,
    is_weakly_compatible,
    orbital_chromatic_polynomial,
    orientation_poset,
    pair_orbit_counts,
    path_graph,
    proper_colorings,
    verify_graph_reciprocity,
    weakly_compatible_pairs,
)
from orbitpoly.permgroup import Permutation, act_on_map, dihedral_group, symmetric_group, trivial_group
from orbitpoly.polynomial import RationalPolynomial, evaluate, from_values
from orbitpoly.poset import antichain, chain, is_automorphism, poset_from_relations

EDGE = SimpleGraph.from_edges(2, [(0, 1)])
TRIANGLE = cycle_graph(3)


def falling(n, k):
    out = 1
    for i in range(k):
        out *= n - i
    return out


def test_from_edges_validation():
    with pytest.raises(InputError):
        SimpleGraph.from_edges(2, [(0, 0)])
    with pytest.raises(InputError):
        SimpleGraph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        SimpleGraph.from_edges(2, [(0, 2)])


def test_is_graph_action():
    assert is_graph_action(TRIANGLE, trivial_group(3))
    assert is_graph_action(SimpleGraph(3, ()), symmetric_group(3))
    check = is_graph_action(path_graph(3), gens(3, "(0 1)"))
    assert not check and check.witness[1:] == (1, 2)


def test_proper_coloring_examples():
    assert len(proper_colorings(EDGE, 2)) == 2
    assert proper_colorings(TRIANGLE, 2) == []
    assert len(proper_colorings(TRIANGLE, 3)) == falling(3, 3) == 6


def test_acyclic_orientation_examples():
    assert len(acyclic_orientations(EDGE)) == 2
    all_orientations = list(itertools.product(*TRIANGLE.edges))
    acyclic = [s for s in all_orientations if is_acyclic(TRIANGLE, s)]
    assert len(all_orientations) == 8 and len(acyclic) == 6
    assert sorted(acyclic_orientations(TRIANGLE)) == sorted(acyclic)
    assert acyclic_orientations(SimpleGraph(3, ())) == [()]


def test_orientation_poset_examples():
    path = path_graph(3)  # edges (0,1), (1,2)
    assert orientation_poset(path, (1, 2)) == chain(3)
    assert orientation_poset(SimpleGraph(3, ()), ()) == antichain(3)
    # edges (0,1),(0,2),(1,2) with arcs 0->1, 0->2, 1->2
    assert orientation_poset(TRIANGLE, (1, 2, 2)) == chain(3)
    with pytest.raises(InputError):
        orientation_poset(TRIANGLE, (1, 0, 2))  # 0->1->2->0


def test_act_on_orientation_examples():
    sigma = (1,)  # 0 -> 1
    swap = Permutation((1, 0))
    assert act_on_orientation(EDGE, Permutation.identity(2), sigma) == sigma
    assert act_on_orientation(EDGE, swap, sigma) == (0,)
    g = Permutation((1, 2, 0))
    for s in acyclic_orientations(TRIANGLE):
        assert act_on_orientation(TRIANGLE, g.inverse, act_on_orientation(TRIANGLE, g, s)) == s


def test_orbital_chromatic_examples():
    res = orbital_chromatic_polynomial(TRIANGLE, trivial_group(3))
    assert res.polynomial == from_values([falling(n, 3) for n in range(1, 5)]) == RationalPolynomial((0, 2, -3, 1))
    d3 = orbital_chromatic_polynomial(TRIANGLE, dihedral_group(3)).polynomial
    for n in range(1, 6):
        assert evaluate(d3, n) == Fraction(len(proper_colorings(TRIANGLE, n)), 6)
    assert evaluate(d3, 3) == 1
    pent = cycle_graph(5)
    d5 = orbital_chromatic_polynomial(pent, dihedral_group(5)).polynomial
    assert evaluate(d5, 2) == 0 and evaluate(d5, 3) == 3
    for n in range(1, 6):
        assert evaluate(d5, n) == Fraction(len(proper_colorings(pent, n)), 10)


def test_weakly_compatible_pair_examples():
    assert len(weakly_compatible_pairs(EDGE, 1)) == 2
    brute = [
        (c, s)
        for c in itertools.product((1, 2), repeat=2)
        for s in acyclic_orientations(EDGE)
        if not (c[0] < c[1] and s != (1,)) and not (c[1] < c[0] and s != (0,))
    ]
    assert len(weakly_compatible_pairs(EDGE, 2)) == len(brute) == 6
    assert len(weakly_compatible_pairs(SimpleGraph(2, ()), 2)) == 4


def test_graph_reciprocity_examples():
    rep = verify_graph_reciprocity(TRIANGLE, trivial_group(3), 3)
    assert rep.passed
    assert abs(evaluate(rep.chromatic, -1)) == len(acyclic_orientations(TRIANGLE)) == 6
    for n in range(1, 4):
        assert abs(evaluate(rep.chromatic, -n)) == len(weakly_compatible_pairs(TRIANGLE, n))

    swap = symmetric_group(2)
    rep = verify_graph_reciprocity(EDGE, swap, 2)
    assert rep.chromatic == RationalPolynomial((0, Fraction(-1, 2), Fraction(1, 2)))
    even_orientations = [
        s for s in acyclic_orientations(EDGE)
        if all(g.sign == 1 for g in swap if act_on_orientation(EDGE, g, s) == s)
    ]
    assert len(even_orientations) == 2
    assert evaluate(rep.chromatic, -1) == 1 == (-1) ** 2 * Fraction(len(even_orientations), 2)

    rep = verify_graph_reciprocity(TRIANGLE, dihedral_group(3), 1)
    assert rep.rows[0].chromatic_at_minus_n == -1 == rep.rows[0].signed_even_pair_orbits


def test_even_coloring_examples():
    for n in range(1, 5):
        assert even_proper_coloring_orbits(TRIANGLE, trivial_group(3), n) == len(proper_colorings(TRIANGLE, n))
    assert even_proper_coloring_orbits(EDGE, symmetric_group(2), 2) == 1
    assert even_proper_coloring_orbits(TRIANGLE, dihedral_group(3), 3) == 1


@pytest.mark.parametrize("case", graph_suite(), ids=lambda c: c.name)
def test_routes_agree(case):
    res = orbital_chromatic_polynomial(case.graph, case.group, verify=False)
    nodes = [chromatic_oracle(case.graph, case.group, n) for n in range(1, case.graph.vertex_count + 2)]
    assert res.polynomial == from_values(nodes)
    assert res.polynomial.degree == case.graph.vertex_count
    assert res.polynomial.leading_coefficient > 0
    assert even_chromatic_formula(case.graph, case.group) == even_chromatic_polynomial(case.graph, case.group)


@pytest.mark.parametrize("case", graph_suite(), ids=lambda c: c.name)
def test_coloring_orientation_correspondence(case):
    """A g-fixed proper coloring induces a g-fixed acyclic orientation, and the
    fixed colorings split by induced orientation."""
    graph = case.graph
    sigmas = acyclic_orientations(graph)
    for g in case.group:
        fixed = fixed_orientations(graph, g, sigmas)
        for n in range(1, 4):
            by_sigma = {}
            for c in proper_colorings(graph, n):
                if act_on_map(g, c) != c:
                    continue
                induced = tuple(v if c[u] < c[v] else u for u, v in graph.edges)
                assert induced in fixed
                by_sigma[induced] = by_sigma.get(induced, 0) + 1
            assert sum(by_sigma.values()) == fixed_coloring_count(graph, g, n)
            for s in fixed:
                assert is_automorphism(orientation_poset(graph, s), g)


@pytest.mark.parametrize("case", graph_suite(), ids=lambda c: c.name)
def test_sigma_one_and_diagonal_action(case):
    graph, G = case.graph, case.group
    pairs1 = weakly_compatible_pairs(graph, 1)
    assert len(pairs1) == len(acyclic_orientations(graph))
    pairs = weakly_compatible_pairs(graph, 2)
    for pair in pairs:
        for g in G:
            img = act_on_pair(graph, g, pair)
            assert is_weakly_compatible(graph, *img) and is_acyclic(graph, img.orientation)
    if G.order == 1:
        chi = orbital_chromatic_polynomial(graph, G).polynomial
        assert (-1) ** graph.vertex_count * evaluate(chi, -1) == len(pairs1)


@given(st.data())
def test_act_on_orientation_is_left_action(data):
    graph = data.draw(st.sampled_from([complete_graph(4), cycle_graph(5), SimpleGraph(4, ()), complete_graph(3)]))
    m = graph.vertex_count
    g = data.draw(permutations(m))
    h = data.draw(permutations(m))
    sigma = data.draw(st.sampled_from(acyclic_orientations(graph)))
    if not (is_graph_action(graph, gens(m, g.cycle_notation())) and is_graph_action(graph, gens(m, h.cycle_notation()))):
        return
    assert act_on_orientation(graph, Permutation.identity(m), sigma) == sigma
    moved = act_on_orientation(graph, g, act_on_orientation(graph, h, sigma))
    assert moved == act_on_orientation(graph, g * h, sigma)
    assert is_acyclic(graph, moved)


def test_dihedral_cycle_law():
    for p in (3, 5):
        chi = orbital_chromatic_polynomial(cycle_graph(p), dihedral_group(p)).polynomial
        for n in range(1, 6):
            assert evaluate(chi, n) == Fraction(len(proper_colorings(cycle_graph(p), n)), 2 * p)


def test_odd_cycle_half_of_rotations():
    for k in (3, 5, 7):
        g = cycle_graph(k)
        d = orbital_chromatic_polynomial(g, dihedral_group(k), verify=False).polynomial
        z = orbital_chromatic_polynomial(g, gens(k, "(" + " ".join(map(str, range(k))) + ")"), verify=False).polynomial
        assert d * 2 == z


def test_pair_orbit_counts_z2_edge():
    total, even = pair_orbit_counts(EDGE, symmetric_group(2), 1)
    assert (total, even) == (1, 1)
