import io
from fractions import Fraction as F

import numpy as np
import pytest

from core.algebra import RationalPolynomial
from core.drg import q_polynomial_orderings, spectrum, srg_array
from core.errors import DisconnectedGraph, GraphTooLarge, NotDistanceRegular
from core.parser import parse_array
from modules.oracle.checks import (
    check_distance_regular,
    export_edge_list,
    local_graph,
    local_spectrum,
    non_principal_eigenvalues,
    triple_count,
    verify_spear,
    verify_terwilliger,
)
from modules.oracle.graphs import _make, build, distance_matrix, folded, johnson
from modules.triples.laws import TripleLaw
from modules.type2.parameters import Type2Parameters, type2_ordering


@pytest.mark.parametrize("family, params, text", [
    ("petersen", [], "3,2;1,1"),
    ("clebsch", [], "10,3;1,6"),
    ("schlafli", [], "16,5;1,8"),
    ("grid", [6], "10,5;1,2"),
    ("triangular", [7], "10,4;1,4"),
    ("cube", [3], "3,2,1;1,2,3"),
    ("johnson", [8, 4], "16,9,4,1;1,4,9,16"),
    ("halved-cube", [7], "21,10,3;1,6,15"),
    ("folded-cube", [7], "7,6,5;1,2,3"),
    ("folded-johnson", [12], "36,25,16;1,4,18"),
    ("folded-halved-cube", [12], "66,45,28;1,6,30"),
])
def test_constructions_are_distance_regular(family, params, text):
    assert check_distance_regular(build(family, params)) == parse_array(text)


@pytest.mark.parametrize("family, params", [
    ("johnson", [8, 4]),
    ("cube", [5]),
    ("halved-cube", [7]),
    ("folded-cube", [7]),
    ("folded-johnson", [10]),
    ("petersen", []),
    ("clebsch", []),
    ("schlafli", []),
    ("triangular", [7]),
    ("grid", [5]),
])
def test_array_spectrum_matches_adjacency_eigenvalues(family, params):
    g = build(family, params)
    spec = spectrum(check_distance_regular(g))
    predicted = sorted(float(e.theta) for e in spec for _ in range(int(e.multiplicity)))
    actual = np.linalg.eigvalsh(g.adjacency.toarray().astype(float))
    assert len(predicted) == g.n
    assert np.allclose(predicted, actual, atol=1e-9)


def test_vertex_counts(halved7, folded_j12, petersen):
    assert (halved7.n, folded_j12.n, petersen.n) == (64, 462, 10)
    assert halved7.diameter == 3
    assert petersen.degree() == 3


def test_folded_johnson_6_is_complete():
    g = folded(johnson(6, 3))
    assert g.n == 10
    assert check_distance_regular(g) == parse_array("9;1")


def test_not_distance_regular():
    path = _make("P4", [0, 1, 2, 3], [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(NotDistanceRegular) as err:
        check_distance_regular(path)
    assert len(err.value.witness) == 6


def test_disconnected():
    g = _make("2K2", [0, 1, 2, 3], [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraph):
        check_distance_regular(g)


def test_build_errors():
    with pytest.raises(GraphTooLarge):
        build("johnson", [30, 15])
    with pytest.raises(GraphTooLarge):
        build("halved-cube", [7], max_vertices=10)
    with pytest.raises(ValueError):
        build("moore", [])
    with pytest.raises(ValueError):
        build("johnson", [8])
    with pytest.raises(ValueError):
        build("folded-johnson", [11])


def test_local_graph_and_spectrum(halved7):
    local = local_graph(halved7, 0)
    assert local.n == 21
    assert check_distance_regular(local) == parse_array("10,4;1,4")
    eigs = local_spectrum(halved7, 0)
    assert eigs == pytest.approx([10] + [3] * 6 + [-2] * 14, abs=1e-9)
    assert sorted(non_principal_eigenvalues(halved7, 0)) == pytest.approx([-2] * 14 + [3] * 6, abs=1e-9)


def test_non_principal_keeps_irregular_local_spectrum():
    # local graph at 0 is K2 plus an isolated vertex
    g = _make("paw", [0, 1, 2, 3], [(0, 1), (0, 2), (0, 3), (1, 2)])
    assert non_principal_eigenvalues(g, 0) == pytest.approx([1, 0, -1], abs=1e-9)
    # at 1 the local graph is K2: drop one copy of the valency 1
    assert non_principal_eigenvalues(g, 1) == pytest.approx([-1], abs=1e-9)


def test_triple_count(halved7):
    nbrs = sorted(halved7.graph[0])
    y = nbrs[0]
    adjacent = [z for z in nbrs[1:] if halved7.distances[y, z] == 1]
    far = [z for z in nbrs[1:] if halved7.distances[y, z] == 2]
    assert triple_count(halved7, 0, y, adjacent[0], 1, 2, 2) == 6
    assert triple_count(halved7, 0, y, adjacent[0], 2, 3, 3) == 1
    assert triple_count(halved7, 0, y, far[0], 1, 2, 2) == 3
    assert triple_count(halved7, 0, y, far[0], 2, 3, 3) == 0


def _orderings(g):
    ia = check_distance_regular(g)
    return ia, q_polynomial_orderings(ia, spectrum(ia))


def test_spear_halved_cube(halved7):
    ia, orderings = _orderings(halved7)
    for ordering in orderings:
        report = verify_spear(halved7, ordering, ia)
        assert report.passed, report.witness
        assert report.checked[(1, 1)] == 64 * 210
        assert report.checked[(2, 2)] == 64 * 210


def test_spear_detects_a_wrong_law(halved7):
    laws = {
        (1, 1): TripleLaw(1, 1, F(1), F(0)),
        (1, 2): TripleLaw(1, 2, F(1), F(0)),
        (2, 1): TripleLaw(2, 1, F(1), F(-5)),
        (2, 2): TripleLaw(2, 2, F(1), F(-3)),
    }
    assert verify_spear(halved7, laws=laws).passed
    laws[(2, 2)] = TripleLaw(2, 2, F(1), F(-2))
    report = verify_spear(halved7, laws=laws)
    assert not report.passed
    assert report.witness["i"] == 2 and report.witness["delta"] == 2
    with pytest.raises(ValueError):
        verify_spear(halved7)


def test_spear_folded_johnson(folded_j12):
    ia, orderings = _orderings(folded_j12)
    for ordering in orderings:
        assert verify_spear(folded_j12, ordering, ia).passed


def test_terwilliger_halved_cube(halved7):
    ia, orderings = _orderings(halved7)
    for ordering in orderings:
        report = verify_terwilliger(halved7, ordering, ia)
        assert report.passed, report.witness
        assert report.zeros == [-2, 3]
        assert report.vertices == 64 and report.eigenvalues == 64 * 20


def test_terwilliger_folded_johnson(folded_j12):
    ia, orderings = _orderings(folded_j12)
    report = verify_terwilliger(folded_j12, orderings[0], ia)
    assert report.passed
    assert report.zeros == [-2, 4]


def test_terwilliger_exact_negative_value_fails(petersen):
    # Petersen local graphs are edgeless, so every non-principal η is 0
    report = verify_terwilliger(petersen, T=RationalPolynomial.of(F(-1, 10**12)))
    assert not report.passed
    assert report.witness["eta"] == 0
    report = verify_terwilliger(petersen, T=RationalPolynomial.of(0, 1))
    assert report.passed
    assert report.zeros == [0]


def test_spear_petersen(petersen):
    ia, orderings = _orderings(petersen)
    for ordering in orderings:
        assert verify_spear(petersen, ordering, ia).passed


@pytest.mark.slow
def test_halved_nine_cube():
    g = build("halved-cube", [9])
    ia, orderings = _orderings(g)
    assert ia == parse_array("36,21,10,3;1,6,15,28")
    for ordering in orderings:
        assert verify_spear(g, ordering, ia).passed
        assert verify_terwilliger(g, ordering, ia).passed


@pytest.mark.slow
def test_folded_halved_fourteen_cube_zeros():
    g = build("folded-halved-cube", [14])
    ia = check_distance_regular(g)
    assert g.n == 4096 and ia == parse_array("91,66,45;1,6,15")
    ordering = type2_ordering(Type2Parameters(7, "7/2", "13/2", 3), ia)
    report = verify_terwilliger(g, ordering, ia)
    assert report.passed
    assert report.zeros == [-2, 10]
    local = local_graph(g, 0)
    assert check_distance_regular(local) == srg_array(91, 24, 12, 4)
    assert local_spectrum(g, 0) == pytest.approx([24] + [10] * 13 + [-2] * 77, abs=1e-9)


def test_export_edge_list(petersen):
    out = io.StringIO()
    assert export_edge_list(petersen, out) == 15
    lines = out.getvalue().splitlines()
    assert len(lines) == 15
    pairs = [tuple(map(int, line.split())) for line in lines]
    assert all(u < v for u, v in pairs)
    assert pairs == sorted(pairs)


def test_distances_are_symmetric(petersen):
    d = distance_matrix(petersen)
    assert d is petersen.distances
    assert np.array_equal(d, d.T)
    assert d.max() == 2
