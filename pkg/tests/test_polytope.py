from fractions import Fraction
import logging

import pytest

from csc.configs import central_symmetrize, graph_config_mu, graph_config_rho
from csc.errors import InvalidInput, PreconditionViolated, RankDeficient, SizeLimit
from csc.graphs import graph_from_family
from csc.intlin import IntMatrix, is_unimodular, lattice_index
from csc.polytope import (
    Facet,
    affine_dim,
    build_polytope,
    csc_polytope,
    dual_polytope,
    enumerate_facets,
    facets,
    fano_verdict,
    interior_contains,
    is_gorenstein_fano,
    normalized_volume,
    polytope_vertices,
    pulling_triangulation,
    standard_form,
    triangulate_points,
)
from csc.semigroup import hilbert_h_vector
from csc.toric import TermOrder


SQUARE = [(1, 1), (1, -1), (-1, -1), (-1, 1)]


def test_affine_dim():
    assert affine_dim([(1, 2, 3)]) == 0
    assert affine_dim(SQUARE) == 2
    csc = central_symmetrize(IntMatrix.identity(2))
    assert affine_dim(csc.matrix.columns()) == 2
    with pytest.raises(InvalidInput):
        affine_dim([])


def test_affine_dim_of_bipartite_mu_symmetrization(graph):
    k22 = graph("k22")
    assert affine_dim(central_symmetrize(graph_config_mu(k22)).matrix.columns()) == 3


def test_standard_form_deletes_last_coordinate():
    p = csc_polytope(central_symmetrize(IntMatrix.identity(2)))
    coords, frame = standard_form(p)
    assert coords == ((0, 0), (1, 0), (0, 1), (-1, 0), (0, -1))
    assert frame.describe()["kind"] == "last_coordinate_deletion"
    assert frame.from_frame((1, 0)) == (1, 0, 1)


def test_standard_form_lattice_basis():
    p = build_polytope([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert p.dim == 2
    assert p.frame.describe()["kind"] == "lattice_basis"
    for pt, w in zip(p.points, p.coords):
        assert p.frame.from_frame(w) == pt


def test_full_dimensional_frame_is_identity():
    p = build_polytope(SQUARE)
    assert p.frame.describe()["kind"] == "identity"
    assert p.coords == tuple(SQUARE)


def test_duplicate_points_are_dropped(caplog):
    caplog.set_level(logging.WARNING, logger="csc")
    p = build_polytope(SQUARE + [(1, 1)])
    assert len(p.points) == 4
    assert "repetido" in caplog.text


def test_square_facets():
    fs = facets(build_polytope(SQUARE))
    assert [(f.normal, f.offset) for f in fs] == [((-1, 0), 1), ((0, -1), 1), ((0, 1), 1), ((1, 0), 1)]
    assert all(len(f.tight) == 2 for f in fs)


def test_cross_polytope_facets():
    p = csc_polytope(central_symmetrize(IntMatrix.identity(2)))
    fs = facets(p)
    assert [f.normal for f in fs] == [(-1, -1), (-1, 1), (1, -1), (1, 1)]
    assert all(f.offset == 1 for f in fs)


def test_facet_value():
    f = Facet((1, 2), 3, (0,))
    assert f.value((Fraction(1, 2), 1)) == Fraction(5, 2)


def test_enumerate_facets_limits():
    with pytest.raises(SizeLimit):
        enumerate_facets(SQUARE, max_points=3)
    with pytest.raises(SizeLimit):
        enumerate_facets(SQUARE, max_dim=1)


def test_interior_and_vertices():
    p = csc_polytope(central_symmetrize(IntMatrix.identity(2)))
    assert interior_contains(p, (0, 0, 1))
    assert not interior_contains(p, (1, 0, 1))
    assert not interior_contains(p, (0, 0, 2))
    assert polytope_vertices(p) == [(-1, 0, 1), (0, -1, 1), (0, 1, 1), (1, 0, 1)]


def test_dual_of_square_is_cross_polytope():
    dual = dual_polytope(build_polytope(SQUARE))
    assert dual == [(-1, 0), (0, -1), (0, 1), (1, 0)]
    back = dual_polytope(build_polytope([tuple(int(c) for c in v) for v in dual]))
    assert sorted(back) == sorted(SQUARE)


def test_dual_requires_interior_origin():
    p = build_polytope([(0, 0), (1, 0), (0, 1)])
    with pytest.raises(PreconditionViolated):
        dual_polytope(p)
    assert fano_verdict(p).reason == "origin_not_interior"


@pytest.mark.parametrize("name,expected", [("square", True), ("gorex_b", True), ("gorex_a", False)])
def test_gorenstein_fano_examples(matrix, name, expected):
    p = csc_polytope(central_symmetrize(matrix(name)))
    assert is_gorenstein_fano(p) is expected


def test_gorex_a_verdict_details(matrix):
    verdict = fano_verdict(csc_polytope(central_symmetrize(matrix("gorex_a"))))
    assert verdict.origin_interior
    assert verdict.fano
    assert verdict.reason == "nonintegral_dual_vertex"
    assert verdict.interior_lattice_points == ((0, 0, 0),)
    assert (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)) in verdict.dual_vertices


def test_extra_interior_points():
    p = build_polytope([(2, 0), (-2, 0), (0, 2), (0, -2)])
    verdict = fano_verdict(p)
    assert not verdict.fano
    assert verdict.reason == "extra_interior_lattice_points"
    assert len(verdict.interior_lattice_points) == 5


def test_unimodular_matrices_give_gorenstein_fano(small_corpus):
    for a in small_corpus:
        flag, delta = is_unimodular(a)
        if flag and delta == 1:
            assert is_gorenstein_fano(csc_polytope(central_symmetrize(a))), a


def test_pulling_triangulation_identity():
    tri = pulling_triangulation(central_symmetrize(IntMatrix.identity(2)))
    assert tri.simplices == ((0, 1, 2), (0, 1, 4), (0, 2, 3), (0, 3, 4))
    assert tri.determinants == (1, 1, 1, 1)
    assert tri.total_volume == 4


def test_pulling_triangulation_unimodular_determinants(matrix):
    for name in ("gorex_a", "gorex_b", "identity2", "square"):
        a = matrix(name)
        _, delta = is_unimodular(a)
        csc = central_symmetrize(a)
        tri = pulling_triangulation(csc)
        assert all(0 in s for s in tri.simplices)
        assert set(tri.determinants) == {delta}
        assert set(tri.volumes) == {delta // lattice_index(csc.matrix)}


def test_pulling_triangulation_preconditions():
    csc = central_symmetrize(IntMatrix.identity(2))
    with pytest.raises(PreconditionViolated):
        pulling_triangulation(csc, TermOrder.graded_lex(5))
    with pytest.raises(PreconditionViolated):
        pulling_triangulation(csc, TermOrder.revlex((1, 0, 2, 3, 4)))
    with pytest.raises(RankDeficient):
        pulling_triangulation(central_symmetrize(IntMatrix.from_rows([[1, 2], [2, 4]])))


def test_triangulate_points_simplex_and_square():
    assert triangulate_points([(0, 0), (1, 0), (0, 1)], [0, 1, 2]) == [(0, 1, 2)]
    assert triangulate_points(SQUARE, [0, 1, 2, 3]) == [(0, 1, 2), (0, 2, 3)]
    with pytest.raises(InvalidInput):
        triangulate_points([(0, 0), (0, 0), (1, 0)], [0, 1, 2])


def test_normalized_volume():
    assert normalized_volume(build_polytope(SQUARE)) == 8
    assert normalized_volume(build_polytope([(0, 0), (1, 0), (0, 1)])) == 1
    p = csc_polytope(central_symmetrize(IntMatrix.identity(2)))
    assert normalized_volume(p) == 4


def test_volume_matches_hilbert_sum():
    csc = central_symmetrize(graph_config_rho(graph_from_family("wheel:4")))
    tri = pulling_triangulation(csc)
    h = hilbert_h_vector(csc.configuration).h_vector
    assert tri.total_volume == sum(h) == 32
