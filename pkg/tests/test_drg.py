from fractions import Fraction as F

import pytest

from core.drg import (
    QPolyOrdering,
    characteristic_polynomial,
    dual_eigenvalues,
    dual_intersection_numbers,
    eigenvalue_sequence,
    intersection_numbers,
    krein_parameters,
    q_polynomial_orderings,
    spectrum,
    srg_array,
    srg_eigenvalues,
    srg_parameters,
    standard_sequence,
    theta_hat,
    validate,
    valencies,
    vertex_count,
)
from core.errors import InfeasibleArray
from core.parser import parse_array


def test_valencies(halved7_array):
    vals = valencies(halved7_array)
    assert list(vals) == [1, 21, 35, 7]
    assert vals.v == 64
    assert vertex_count(parse_array("36,25,16;1,4,18")) == 462
    assert not vals.warnings


def test_intersection_numbers(halved7_array):
    P = intersection_numbers(halved7_array)
    assert P[1, 1, 1] == 10
    assert P[1, 2, 3] == 5
    assert P[2, 1, 3] == 3
    assert P[3, 1, 2] == 15
    assert P[0, 2, 2] == 35
    assert P[1, 4, 0] == 0


def test_folded_johnson_p123():
    assert intersection_numbers(parse_array("36,25,16;1,4,18"))[1, 2, 3] == 100


def test_spectrum_halved_cube(halved7_array):
    spec = spectrum(halved7_array)
    assert spec.thetas == (21, 9, 1, -3)
    assert spec.multiplicities == (1, 7, 21, 35)
    assert spec.exact and spec.integral


def test_spectrum_petersen():
    spec = spectrum(parse_array("3,2;1,1"))
    assert spec.thetas == (3, 1, -2)
    assert spec.multiplicities == (1, 5, 4)


def test_spectrum_irrational_pentagon():
    spec = spectrum(parse_array("2,1;1,1"))
    assert not spec.exact
    assert len(spec) == 3
    assert [float(m) for m in spec.multiplicities] == pytest.approx([1, 2, 2])


def test_characteristic_polynomial_roots(halved7_array):
    chi = characteristic_polynomial(halved7_array)
    assert chi.degree == 4
    assert all(chi(F(t)) == 0 for t in (21, 9, 1, -3))


def test_standard_sequence(halved7_array):
    assert standard_sequence(halved7_array, F(9)) == (1, F(3, 7), F(-1, 7), F(-5, 7))


def test_theta_hat(halved7_array):
    assert theta_hat(halved7_array, F(9)) == -2
    with pytest.raises(ValueError):
        theta_hat(halved7_array, F(-1))


def test_q_orderings_halved_cube(halved7_array):
    orderings = q_polynomial_orderings(halved7_array)
    assert orderings == [QPolyOrdering((0, 1, 2, 3)), QPolyOrdering((0, 2, 3, 1))]
    assert orderings[0].natural
    assert str(orderings[1]) == "(0,2,3,1)"


def test_dual_eigenvalues(halved7_array):
    spec = spectrum(halved7_array)
    natural, type2 = q_polynomial_orderings(halved7_array, spec)
    assert dual_eigenvalues(halved7_array, spec, natural).theta_star == (7, 3, -1, -5)
    assert dual_eigenvalues(halved7_array, spec, type2).theta_star == (21, 1, -3, 9)
    assert eigenvalue_sequence(spec, type2) == (21, 1, -3, 9)


def test_krein_and_dual_intersection_numbers(halved7_array):
    spec = spectrum(halved7_array)
    krein = krein_parameters(halved7_array, spec)
    assert krein[0, 1, 1] == 7
    assert krein[0, 2, 2] == 21
    type2 = q_polynomial_orderings(halved7_array, spec, krein)[1]
    c_star, b_star = dual_intersection_numbers(krein, type2)
    assert c_star == (1, 6, 15)
    assert b_star == (21, 10, 3)


def test_srg_helpers():
    petersen = parse_array("3,2;1,1")
    assert srg_parameters(petersen) == (10, 3, 0, 1)
    assert srg_array(36, 10, 4, 2) == parse_array("10,5;1,2")
    assert srg_eigenvalues(10, 3, 0, 1) == (1, -2)
    r, s = srg_eigenvalues(5, 2, 0, 1)
    assert (r, s) == pytest.approx(((-1 + 5 ** 0.5) / 2, (-1 - 5 ** 0.5) / 2))
    with pytest.raises(ValueError):
        srg_parameters(parse_array("21,10,3;1,6,15"))


def test_validate():
    assert validate([10, 5, 1, 2], 2) == parse_array("10,5;1,2")
    with pytest.raises(InfeasibleArray, match="a_1 = -1 is negative"):
        validate([3, 3, 1, 1], 2)
    with pytest.raises(InfeasibleArray, match="expected 4 values"):
        validate([3, 2, 1], 2)
    assert validate(["3", "2", "1", "1", "2", "1"], 3).warnings == ("c_3 < c_2",)
