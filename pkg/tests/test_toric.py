import logging
import random

import pytest

from csc.configs import central_symmetrize, graph_config_mu, graph_config_rho
from csc.errors import InvalidInput, NotBipartite, PreconditionViolated, ResourceLimit
from csc.graphs import (
    Graph,
    connected_graphs,
    find_disjoint_odd_cycles,
    graph_from_family,
    is_bipartite,
    is_chordal_bipartite,
    is_connected,
)
from csc.intlin import IntMatrix, is_unimodular
from csc.toric import (
    Binomial,
    GroebnerBasis,
    OrderKind,
    TermOrder,
    binomial_from_vector,
    buchberger,
    format_monomial,
    ideals_equal,
    initial_ideal,
    is_quadratically_generated,
    is_squarefree,
    kernel_lattice,
    minimal_generator_degrees,
    orient,
    reduce_binomial,
    bipartite_gb,
    toric_ideal_gb,
    variable_names,
    verify_reduced_gb,
)


def mono(n, *variables):
    m = [0] * n
    for v in variables:
        m[v] += 1
    return tuple(m)


# ------------------------------------------------------------
# Ordens
# ------------------------------------------------------------
def test_term_orders_break_ties_differently():
    u, v = (1, 1, 0, 0, 0, 1), (0, 0, 1, 1, 1, 0)
    assert orient(u, v, TermOrder.graded_lex(6)).lead == u
    assert orient(u, v, TermOrder.graded_revlex(6)).lead == v


def test_term_order_degree_first():
    order = TermOrder.graded_revlex(3)
    assert order.key((0, 0, 2)) > order.key((1, 0, 0))
    assert order.key((1, 1, 0)) > order.key((1, 0, 1))


def test_term_order_validation_and_helpers():
    with pytest.raises(InvalidInput):
        TermOrder.revlex((0, 0, 1))
    order = TermOrder.center_smallest(2)
    assert order.variable_order == (0, 4, 3, 2, 1)
    assert order.with_smallest(3).variable_order == (3, 0, 4, 2, 1)
    assert order.describe() == {"kind": "revlex", "smallest_to_largest": [0, 4, 3, 2, 1]}
    assert TermOrder.graded_lex(2).kind is OrderKind.GRADED_LEX


def test_formatting():
    names = variable_names(3)
    assert names == ("x1", "x2", "x3")
    assert variable_names(3, csc=True) == ("x0", "x1", "x2")
    assert format_monomial((2, 0, 1), names) == "x1^2*x3"
    assert format_monomial((0, 0, 0), names) == "1"


# ------------------------------------------------------------
# Núcleo e Buchberger
# ------------------------------------------------------------
def test_kernel_lattice():
    assert kernel_lattice(IntMatrix.identity(3)) == []
    assert kernel_lattice(IntMatrix.from_rows([[1, 1]])) == [(1, -1)]


def test_binomial_from_vector():
    order = TermOrder.graded_revlex(2)
    assert binomial_from_vector((1, -1), order) == Binomial((1, 0), (0, 1))
    assert binomial_from_vector((-1, 1), order) == Binomial((1, 0), (0, 1))
    assert binomial_from_vector((0, 0), order) is None


def test_kernel_lattice_vectors_are_in_kernel(random_corpus):
    for a in random_corpus:
        basis = kernel_lattice(a)
        assert len(basis) == a.cols - a.rows
        for w in basis:
            assert a.apply(w) == (0,) * a.rows


def test_tie_kernel(graph):
    assert kernel_lattice(graph_config_rho(graph("tie"))) == [(1, 1, -1, -1, -1, 1)]


def test_tie_principal_ideal(graph):
    a = graph_config_rho(graph("tie"))
    glex = toric_ideal_gb(a, TermOrder.graded_lex(6))
    assert glex.elements == (Binomial((1, 1, 0, 0, 0, 1), (0, 0, 1, 1, 1, 0)),)
    assert glex.to_text() == "x1*x2*x6 - x3*x4*x5"
    grevlex = toric_ideal_gb(a, TermOrder.graded_revlex(6))
    assert grevlex.elements == (Binomial((0, 0, 1, 1, 1, 0), (1, 1, 0, 0, 0, 1)),)
    assert verify_reduced_gb(glex, a)
    assert verify_reduced_gb(grevlex, a)


def test_trivial_kernel_gives_empty_basis():
    gb = toric_ideal_gb(IntMatrix.identity(3))
    assert gb.elements == ()
    assert gb.reduced
    assert verify_reduced_gb(gb, IntMatrix.identity(3))


def test_toric_ideal_gb_preconditions():
    with pytest.raises(InvalidInput):
        toric_ideal_gb(IntMatrix.identity(2), TermOrder.graded_revlex(3))
    with pytest.raises(PreconditionViolated):
        toric_ideal_gb(IntMatrix.from_rows([[1, 0], [0, 0]]))
    with pytest.raises(PreconditionViolated):
        toric_ideal_gb(IntMatrix.from_rows([[1, -1]]))


def test_buchberger_reduces_redundant_generators():
    order = TermOrder.graded_revlex(4)
    f = Binomial((1, 0, 0, 1), (0, 1, 1, 0))
    G = buchberger([f, Binomial((2, 0, 0, 2), (0, 2, 2, 0))], order)
    assert len(G) == 1
    assert reduce_binomial((2, 0, 0, 2), (0, 2, 2, 0), G, order) is None


def test_budget_exhaustion_carries_partial(graph):
    a = central_symmetrize(graph_config_rho(graph("nine_edges"))).matrix
    with pytest.raises(ResourceLimit) as exc:
        toric_ideal_gb(a, budget=1)
    partial = exc.value.partial
    assert partial["spairs"] == 1
    assert partial["stage"].startswith("saturate") or partial["stage"] == "final"
    assert isinstance(partial["generators"], list)


# ------------------------------------------------------------
# A± de matrizes
# ------------------------------------------------------------
def gorex_ideal():
    """<x0^2 - x1*x4, x0^2 - x2*x5, x0^2 - x3*x6> em 7 variáveis."""
    order = TermOrder.center_smallest(3)
    return order, [orient(mono(7, 0, 0), mono(7, i, i + 3), order) for i in (1, 2, 3)]


@pytest.mark.parametrize("name", ["gorex_a", "gorex_b"])
def test_gorex_symmetrizations_share_ideal(matrix, name):
    order, expected = gorex_ideal()
    csc = central_symmetrize(matrix(name))
    gb = toric_ideal_gb(csc.matrix, order)
    assert ideals_equal(gb.elements, expected, order)
    assert len(gb.elements) == 3
    assert is_squarefree(initial_ideal(gb))
    assert minimal_generator_degrees(csc.matrix, 3) == {2: 3}


def test_ideals_equal_detects_difference():
    order, expected = gorex_ideal()
    assert not ideals_equal(expected[:2], expected, order)


def test_unimodular_matrices_have_squarefree_initial_ideal(small_corpus):
    checked = 0
    for a in small_corpus + [IntMatrix.identity(2), IntMatrix.from_rows([[1, 1, 0], [1, 0, 1], [1, 1, 1]])]:
        if not is_unimodular(a)[0]:
            continue
        csc = central_symmetrize(a)
        gb = toric_ideal_gb(csc.matrix, TermOrder.center_smallest(a.cols))
        assert is_squarefree(initial_ideal(gb)), a
        checked += 1
    assert checked > 0


def test_engine_output_verifies_on_corpus(small_corpus):
    for a in small_corpus:
        pm = central_symmetrize(a).matrix
        assert verify_reduced_gb(toric_ideal_gb(pm), pm), a


def test_single_kernel_vector_needs_no_saturation(graph, caplog):
    caplog.set_level(logging.DEBUG, logger="csc")
    gb = toric_ideal_gb(graph_config_rho(graph("tie")), TermOrder.graded_lex(6))
    assert "saturando 0 de 6" in caplog.text
    assert len(gb.elements) == 1


def test_initial_ideal_requires_reduced():
    gb = GroebnerBasis((), TermOrder.graded_revlex(2), reduced=False)
    with pytest.raises(PreconditionViolated):
        initial_ideal(gb)


def test_verify_rejects_wrong_candidates(graph):
    a = graph_config_rho(graph("tie"))
    order = TermOrder.graded_lex(6)
    flipped = GroebnerBasis((Binomial((0, 0, 1, 1, 1, 0), (1, 1, 0, 0, 0, 1)),), order, True)
    assert not verify_reduced_gb(flipped, a)
    outside = GroebnerBasis((Binomial((1, 1, 0, 0, 0, 0), (0, 0, 1, 1, 0, 0)),), order, True)
    assert not verify_reduced_gb(outside, a)
    empty = GroebnerBasis((), order, True)
    assert not verify_reduced_gb(empty, a)


def test_verify_rejects_incomplete_basis():
    order, expected = gorex_ideal()
    a = central_symmetrize(IntMatrix.from_rows([[1, 1, 0], [1, 0, 1], [1, 1, 1]])).matrix
    assert verify_reduced_gb(GroebnerBasis(tuple(expected), order, True), a) is True
    assert not verify_reduced_gb(GroebnerBasis(tuple(expected[:2]), order, True), a)


# ------------------------------------------------------------
# Geração em grau baixo
# ------------------------------------------------------------
def test_minimal_generator_degrees(graph):
    assert minimal_generator_degrees(graph_config_rho(graph("tie")), 3) == {3: 1}
    assert minimal_generator_degrees(IntMatrix.identity(2), 3) == {}
    with pytest.raises(InvalidInput):
        minimal_generator_degrees(IntMatrix.identity(2), 1)


def test_nine_edges_separation(graph):
    g = graph("nine_edges")
    assert is_quadratically_generated(graph_config_rho(g), 3)
    assert not is_quadratically_generated(central_symmetrize(graph_config_rho(g)).matrix, 3)
    assert not is_quadratically_generated(central_symmetrize(graph_config_mu(g)).matrix, 3)


def test_tie_separation(graph):
    g = graph("tie")
    assert is_quadratically_generated(central_symmetrize(graph_config_mu(g)).matrix, 3)
    degrees = minimal_generator_degrees(central_symmetrize(graph_config_rho(g)).matrix, 3)
    assert degrees.get(3, 0) > 0


@pytest.mark.slow
def test_multipartite_separation():
    g = graph_from_family("multipartite:2,2,2")
    assert is_quadratically_generated(central_symmetrize(graph_config_rho(g)).matrix, 3)
    assert not is_quadratically_generated(central_symmetrize(graph_config_mu(g)).matrix, 3)


# ------------------------------------------------------------
# Base explícita de grafos bipartidos
# ------------------------------------------------------------
def test_bipartite_basis_sizes(graph, parts):
    assert len(bipartite_gb(graph("single_edge"), parts("single_edge")).elements) == 1
    assert len(bipartite_gb(graph("k22"), parts("k22")).elements) == 10
    assert len(bipartite_gb(graph("k23"), parts("k23")).elements) == 22
    assert len(bipartite_gb(graph("k24"), parts("k24")).elements) == 38
    assert len(bipartite_gb(graph("k33"), parts("k33")).elements) == 51
    assert len(bipartite_gb(graph("k33_minus_edge"), parts("k33_minus_edge")).elements) == 34


def test_bipartite_basis_shape(graph, parts):
    gb = bipartite_gb(graph("k22"), parts("k22"))
    names = gb.variable_names()
    assert names[0] == "z"
    assert set(names[1:]) == {f"{v}_{{{i},{k}}}" for v in "xy" for i in (1, 2) for k in (1, 2)}
    assert gb.order.variable_order[0] == 0
    assert gb.max_degree == 2
    assert is_squarefree(initial_ideal(gb))
    assert sum(1 for b in gb.elements if b.trail[0] == 2) == 4


def test_bipartite_basis_verifies(graph, parts, chordal_star_fixtures):
    for name in chordal_star_fixtures:
        g = graph(name)
        gb = bipartite_gb(g, parts(name))
        a = central_symmetrize(graph_config_mu(g)).matrix
        assert verify_reduced_gb(gb, a), name


def test_bipartite_basis_matches_engine(graph, parts, chordal_star_fixtures):
    for name in chordal_star_fixtures:
        g = graph(name)
        gb = bipartite_gb(g, parts(name))
        a = central_symmetrize(graph_config_mu(g)).matrix
        assert set(gb.elements) == set(toric_ideal_gb(a, gb.order).elements), name


def test_bipartite_basis_preconditions(graph, parts):
    with pytest.raises(PreconditionViolated) as exc:
        bipartite_gb(graph("cycle6"))
    assert exc.value.hypothesis == "chordal_bipartite"
    with pytest.raises(PreconditionViolated) as exc:
        bipartite_gb(graph("path4_bad_labels"), parts("path4_bad_labels"))
    assert exc.value.hypothesis == "star_condition"
    assert exc.value.details["quadruple"] == [1, 2, 1, 2]
    with pytest.raises(NotBipartite):
        bipartite_gb(Graph.from_edges([(1, 2), (2, 3), (1, 3)]))
    with pytest.raises(PreconditionViolated) as exc:
        bipartite_gb(Graph.from_edges([(1, 2), (3, 4)]))
    assert exc.value.hypothesis == "connected"


# ------------------------------------------------------------
# Núcleos de A_G± e A_Ḡ± e iniciais livres de quadrados
# ------------------------------------------------------------
def _random_bipartite(rng, p, q):
    """Subgrafo conexo gerador de K_{p,q} com partes 1..p e p+1..p+q."""
    while True:
        edges = [(i, p + k) for i in range(1, p + 1) for k in range(1, q + 1) if rng.random() < 0.6]
        if not edges:
            continue
        g = Graph.from_edges(edges, vertex_count=p + q)
        if is_connected(g):
            return g


def test_bipartite_kernels_coincide():
    rng = random.Random(11)
    for _ in range(50):
        g = _random_bipartite(rng, rng.randint(1, 4), rng.randint(1, 4))
        plus = central_symmetrize(graph_config_rho(g)).matrix
        minus = central_symmetrize(graph_config_mu(g)).matrix
        assert kernel_lattice(plus) == kernel_lattice(minus), g.edges


def _assert_squarefree_initial_ideals(k):
    for g in connected_graphs(k):
        order = TermOrder.center_smallest(g.edge_count)
        mu = central_symmetrize(graph_config_mu(g)).matrix
        assert is_squarefree(initial_ideal(toric_ideal_gb(mu, order))), g
        if find_disjoint_odd_cycles(g) is None:
            rho = central_symmetrize(graph_config_rho(g)).matrix
            # mesmo núcleo, mesma base: nada a recalcular
            if kernel_lattice(rho) == kernel_lattice(mu):
                continue
            assert is_squarefree(initial_ideal(toric_ideal_gb(rho, order))), g


def test_squarefree_initial_ideals_small_graphs():
    for k in (3, 4):
        _assert_squarefree_initial_ideals(k)


def test_squarefree_under_random_completions(matrix):
    rng = random.Random(5)
    a = matrix("gorex_b")
    csc = central_symmetrize(a)
    rest = list(range(1, csc.matrix.cols))
    for _ in range(3):
        rng.shuffle(rest)
        gb = toric_ideal_gb(csc.matrix, TermOrder.revlex([0] + rest))
        assert is_squarefree(initial_ideal(gb))


@pytest.mark.slow
@pytest.mark.parametrize("k", [5, 6])
def test_squarefree_initial_ideals_sweep(k):
    _assert_squarefree_initial_ideals(k)


@pytest.mark.slow
def test_quadratic_generation_iff_chordal_bipartite():
    graphs = [g for k in range(2, 7) for g in connected_graphs(k) if is_bipartite(g) is not None]
    graphs += [graph_from_family(f) for f in ("cycle:8", "bipartite:3,4", "bipartite:4,4", "path:8")]
    rng = random.Random(31)
    graphs += [_random_bipartite(rng, 4, 4) for _ in range(6)]
    seen = set()
    for g in graphs:
        chordal = is_chordal_bipartite(g)
        a = central_symmetrize(graph_config_mu(g)).matrix
        assert is_quadratically_generated(a, 4) == chordal, g.edges
        seen.add(chordal)
    assert seen == {True, False}
