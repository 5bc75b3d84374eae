from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from src.catalog import catalog_get
from src.gf_linalg import rref
from src.graph import (
    GraphKind,
    GraphUndefinedError,
    IsomorphismCapError,
    SolvGraph,
    build_graph,
    components,
    evaluate_direct_sum_formula,
    find_isomorphism,
    formula_inputs,
    graphs_isomorphic,
    indicator,
    induced_vertex_map,
    measure,
)
from src.models import MeasureFormulaInputs
from src.superalgebra import bracket, change_basis, identity_morphism


def brute_force_solvable(L, x, y):
    span = rref([x, y], L.p, L.n)
    while True:
        grown = rref(list(span.basis) + [bracket(L, a, b) for a in span.basis for b in span.basis], L.p, L.n)
        if grown == span:
            break
        span = grown
    while span.rank:
        derived = rref([bracket(L, a, b) for a in span.basis for b in span.basis], L.p, L.n)
        if derived == span:
            return False
        span = derived
    return True


def small_graph(algebra, edges, n):
    adjacency = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        adjacency[u, v] = adjacency[v, u] = True
    vertices = tuple((k % algebra.p, k // algebra.p) for k in range(1, n + 1))
    return SolvGraph(algebra, GraphKind.SOLVABLE, vertices, adjacency)


def test_e2_graph_has_26_vertices(e2):
    G = build_graph(e2)
    assert G.order == 26
    assert (0, 0, 0) not in G.vertices
    assert list(G.vertices) == sorted(G.vertices)


def test_e2_adjacency_matches_brute_force(e2):
    G = build_graph(e2)
    for i, j in combinations(range(G.order), 2):
        assert bool(G.adjacency[i, j]) == brute_force_solvable(e2, G.vertices[i], G.vertices[j])


def test_e2_known_pairs(e2):
    G = build_graph(e2)
    h, x, y = G.index((1, 0, 0)), G.index((0, 1, 0)), G.index((0, 0, 1))
    assert G.adjacency[h, x]
    assert G.adjacency[h, y]
    assert not G.adjacency[x, y]


def test_nonsolvable_graph_is_the_complement(e2):
    G = build_graph(e2, GraphKind.SOLVABLE)
    N = build_graph(e2, "nonsolvable")
    assert N.kind == GraphKind.NONSOLVABLE
    assert G.edge_count + N.edge_count == 26 * 25 // 2
    assert not (G.adjacency & N.adjacency).any()


def test_measure_is_exact(e2):
    G = build_graph(e2)
    nu = measure(G)
    assert nu.value == 1 - Fraction(G.edge_count, 325)
    assert 0 <= nu.value <= 1
    assert nu.pair_count == 325
    assert str(nu).startswith(f"{nu.numerator}/{nu.denominator} (≈ ")


def test_measure_needs_solvable_graph(e2):
    with pytest.raises(ValueError):
        measure(build_graph(e2, GraphKind.NONSOLVABLE))


def test_graph_of_solvable_algebra_is_undefined(e1):
    with pytest.raises(GraphUndefinedError):
        build_graph(e1)


def test_vertex_fibers_of_gl2split(gl2split, sl2):
    G = build_graph(gl2split)
    B = build_graph(sl2)
    assert G.order == 78 == 3 * B.order
    assert G.edge_count == 9 * B.edge_count + 78
    assert measure(B).value > measure(G).value


def test_graph_is_deterministic_across_workers(e2):
    assert np.array_equal(build_graph(e2, workers=1).adjacency, build_graph(e2, workers=4).adjacency)


def test_components_counts(e1):
    G = small_graph(e1, [(0, 1), (2, 3)], 5)
    assert components(G) == 3


def test_find_isomorphism_on_paths(e1):
    path = small_graph(e1, [(0, 1), (1, 2)], 3)
    shuffled = small_graph(e1, [(0, 2), (2, 1)], 3)
    mapping = find_isomorphism(path, shuffled)
    assert mapping is not None
    for u, v in combinations(range(3), 2):
        assert path.adjacency[u, v] == shuffled.adjacency[mapping[u], mapping[v]]


def test_find_isomorphism_rejects_different_graphs(e1):
    path = small_graph(e1, [(0, 1), (1, 2), (2, 3)], 4)
    star = small_graph(e1, [(0, 1), (0, 2), (0, 3)], 4)
    assert find_isomorphism(path, star) is None
    triangle = small_graph(e1, [(0, 1), (1, 2), (0, 2)], 3)
    assert not graphs_isomorphic(small_graph(e1, [(0, 1), (1, 2)], 3), triangle)


def test_isomorphism_cap(e1):
    G = small_graph(e1, [(0, 1)], 5)
    with pytest.raises(IsomorphismCapError):
        find_isomorphism(G, G, cap=4)


def test_mismatched_sizes_are_not_isomorphic_even_past_the_cap(e2, gl2split):
    assert find_isomorphism(build_graph(e2), build_graph(gl2split), cap=10) is None


def test_identity_induces_identity(e2):
    G = build_graph(e2)
    images, leaving = induced_vertex_map(G, G, identity_morphism(e2))
    assert images == list(range(G.order))
    assert leaving == []


def test_indicator(e2):
    assert indicator(e2, (1, 0, 0), (0, 1, 0)) == 1
    assert indicator(e2, (0, 1, 0), (0, 0, 1)) == 0


def test_formula_inputs_of_e2(e2):
    inputs = formula_inputs(e2)
    assert inputs.a == 26
    assert inputs.b == 0
    assert not inputs.zero_in_sol
    assert inputs.sigma == Fraction(14, 26)


def test_formula_on_complete_graphs():
    complete = MeasureFormulaInputs(a=2, b=1, alpha=Fraction(1), sigma=Fraction(1), zero_in_sol=True)
    vertices, edges, nu = evaluate_direct_sum_formula(complete, complete)
    assert vertices == 8
    assert edges == 28
    assert nu == 0


def test_formula_measure_undefined_below_two_vertices():
    tiny = MeasureFormulaInputs(a=1, b=0, alpha=Fraction(0), sigma=Fraction(0), zero_in_sol=False)
    vertices, _, nu = evaluate_direct_sum_formula(tiny, tiny)
    assert vertices == 1
    assert nu is None


def test_automorphism_gives_isomorphic_graphs(e2):
    psi = catalog_get("E2-psi@3")
    G, H = build_graph(psi.source), build_graph(psi.target)
    assert graphs_isomorphic(G, H)
    assert graphs_isomorphic(G.complement(), H.complement())


def test_basis_change_gives_isomorphic_graphs(e2):
    algebra, iso = change_basis(e2, [[1, 0, 0], [0, 1, 1], [0, 0, 1]])
    G, H = build_graph(algebra), build_graph(e2)
    assert graphs_isomorphic(G, H)
    assert graphs_isomorphic(G.complement(), H.complement())
    assert measure(G) == measure(H)
