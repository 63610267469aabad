import math

import numpy as np
import pytest

from graphent import (
    EmptyEdgeSetError,
    Graph,
    MatrixKind,
    NotOrientedError,
    as_kind,
    canonical_orientation,
    complete_graph,
    kind_from_string,
    path_graph,
    spectrum_of,
    standard_kinds,
    star_graph,
)
from graphent.matrices import (
    build,
    distance_matrix,
    general_randic,
    incidence,
    normalized_laplacian,
    normalized_signless_laplacian,
    randic_incidence,
    randic_matrix,
    signless_laplacian,
    skew_adjacency,
)


def test_kind_parsing_round_trip():
    k = kind_from_string("general-randic:-0.5")
    assert k.tag == "general-randic" and k.beta == -0.5
    assert str(k) == "general-randic:-0.5"
    assert as_kind("q") == MatrixKind("q")
    with pytest.raises(ValueError):
        kind_from_string("laplacian")
    with pytest.raises(ValueError):
        kind_from_string("general-randic:x")


def test_standard_kinds_order_and_betas():
    kinds = standard_kinds((1.0,))
    tags = [k.tag for k in kinds]
    assert tags.count("general-randic") == 1
    assert len(kinds) == 10


def test_signless_laplacian_of_triangle():
    q = signless_laplacian(complete_graph(3))
    assert np.array_equal(q, np.array([
        [2.0, 1.0, 1.0],
        [1.0, 2.0, 1.0],
        [1.0, 1.0, 2.0],
    ]))


def test_normalized_matrices_of_triangle():
    g = complete_graph(3)
    lap = normalized_laplacian(g)
    assert np.allclose(np.diag(lap), 1.0)
    assert np.allclose(lap[0, 1], -0.5)
    q = normalized_signless_laplacian(g)
    assert np.allclose(q[0, 1], 0.5)


def test_normalized_laplacian_zero_row_for_isolated_vertex():
    g = Graph.from_edges(3, [(0, 1)])
    lap = normalized_laplacian(g)
    assert np.allclose(lap[2], 0.0)
    # trace counts only covered vertices
    assert np.trace(lap) == pytest.approx(2.0)
    assert np.trace(normalized_signless_laplacian(g)) == pytest.approx(2.0)


def test_incidence_of_path_uses_sorted_edge_columns():
    b = incidence(path_graph(3))
    assert np.array_equal(b, np.array([
        [1.0, 0.0],
        [1.0, 1.0],
        [0.0, 1.0],
    ]))


def test_incidence_requires_an_edge():
    with pytest.raises(EmptyEdgeSetError):
        incidence(Graph.from_edges(3, []))
    with pytest.raises(EmptyEdgeSetError):
        randic_incidence(Graph.from_edges(2, []))


def test_incidence_gram_equals_signless_laplacian():
    for g in (path_graph(4), complete_graph(4), star_graph(5)):
        b = incidence(g)
        assert np.allclose(b @ b.T, signless_laplacian(g), atol=1e-12)


def test_randic_incidence_rows_of_path():
    rows = randic_incidence(path_graph(3))
    s = 1 / math.sqrt(2)
    assert np.allclose(rows, np.array([
        [1.0, 0.0],
        [s, s],
        [0.0, 1.0],
    ]))


def test_randic_incidence_zero_row_at_isolated_vertex():
    g = Graph.from_edges(3, [(0, 1)])
    rows = randic_incidence(g)
    assert np.allclose(rows[2], 0.0)


def test_distance_matrix_path():
    d = distance_matrix(path_graph(3))
    assert np.array_equal(d, np.array([
        [0.0, 1.0, 2.0],
        [1.0, 0.0, 1.0],
        [2.0, 1.0, 0.0],
    ]))


def test_skew_adjacency_signs():
    og = canonical_orientation(path_graph(3))
    s = skew_adjacency(og)
    assert s[0, 1] == 1.0 and s[1, 0] == -1.0
    assert np.allclose(s, -s.T)


def test_oriented_kinds_require_orientation():
    with pytest.raises(NotOrientedError):
        build("skew", path_graph(3))
    with pytest.raises(NotOrientedError):
        build("skew-randic", path_graph(3))


def test_general_randic_at_zero_is_adjacency():
    from graphent.matrices import adjacency

    g = complete_graph(4)
    assert np.array_equal(general_randic(g, 0.0), adjacency(g))


def test_general_randic_at_minus_half_matches_randic_exactly():
    for g in (path_graph(5), star_graph(5), complete_graph(4)):
        assert np.array_equal(general_randic(g, -0.5), randic_matrix(g))


def test_randic_matrix_values():
    r = randic_matrix(path_graph(3))
    s = 1 / math.sqrt(2)
    assert r[0, 1] == pytest.approx(s)
    assert r[0, 2] == 0.0


def test_spectrum_of_signless_laplacian_triangle():
    spec = spectrum_of("q", complete_graph(3))
    assert np.allclose(spec.values, [4.0, 1.0, 1.0])


def test_spectrum_of_incidence_is_padded_to_order():
    spec = spectrum_of("incidence", star_graph(5))
    assert spec.size == 5
    assert spec.kind == "singular-values"


def test_spectrum_of_skew_uses_absolute_values():
    spec = spectrum_of("skew", canonical_orientation(complete_graph(2)))
    assert np.allclose(spec.values, [1.0, 1.0])


def test_spectrum_source_labels_follow_kind():
    assert spectrum_of("randic", path_graph(3)).source == "randic"
    assert spectrum_of("general-randic:1", path_graph(3)).source == "general-randic:1"
