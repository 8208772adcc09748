from fractions import Fraction as F

import pytest

from core.drg import dual_eigenvalues, q_polynomial_orderings, spectrum
from core.errors import InfeasibleParameters
from core.parser import parse_array
from modules.classical.parameters import (
    ClassicalParameters,
    PseudoPartitionParameters,
    classical_array,
    classical_ordering,
    classical_p_minus_minus,
    classical_tau,
    classical_terwilliger_polynomial,
    classical_triple_root_list,
    dual_relation_check,
    gaussian_bracket,
    imprimitivity,
    pseudo_partition_array,
)
from modules.terwilliger.polynomial import terwilliger_polynomial

CLASSICAL = [
    ((3, 1, 2, 7), "21,10,3;1,6,15"),
    ((4, 1, 1, 4), "16,9,4,1;1,4,9,16"),
    ((4, 1, 2, 9), "36,21,10,3;1,6,15,28"),
    ((3, 1, 0, 1), "3,2,1;1,2,3"),
    ((4, 1, 1, 5), "20,12,6,2;1,4,9,16"),
]


def test_gaussian_bracket():
    assert gaussian_bracket(3, 2) == 7
    assert gaussian_bracket(3, 1) == 3
    assert gaussian_bracket(0, 5) == 0
    assert gaussian_bracket(2, F(-1, 2)) == F(1, 2)


@pytest.mark.parametrize("params, text", CLASSICAL)
def test_classical_array(params, text):
    assert classical_array(ClassicalParameters(*params)) == parse_array(text)


def test_parameters_accept_strings():
    cp = ClassicalParameters(3, "1", "2", "7")
    assert cp.beta == 7
    assert str(cp) == "(3,1,2,7)"


def test_invalid_parameters():
    with pytest.raises(InfeasibleParameters):
        ClassicalParameters(3, 0, 1, 1)
    with pytest.raises(InfeasibleParameters):
        classical_array(ClassicalParameters(3, 1, 0, 0))


def test_imprimitivity():
    assert imprimitivity(ClassicalParameters(3, 1, 0, 1)).kind == "bipartite+antipodal"
    assert imprimitivity(ClassicalParameters(3, 1, 1, 3)).kind == "antipodal"
    assert imprimitivity(ClassicalParameters(3, 1, 2, 7)).kind == "primitive"


def test_dual_relation_picks_the_classical_ordering():
    cp = ClassicalParameters(3, 1, 2, 7)
    ia = classical_array(cp)
    spec = spectrum(ia)
    natural, type2 = q_polynomial_orderings(ia, spec)
    assert dual_relation_check(cp, dual_eigenvalues(ia, spec, natural))
    assert not dual_relation_check(cp, dual_eigenvalues(ia, spec, type2))
    ordering, duals = classical_ordering(cp)
    assert ordering == natural
    assert duals.theta_star == (7, 3, -1, -5)


def test_closed_form_roots_halved_cube():
    assert sorted(classical_triple_root_list(ClassicalParameters(3, 1, 2, 7))) == [-2, -1, 3, 4]


@pytest.mark.parametrize("params, text", CLASSICAL)
def test_closed_forms_match_assembled(params, text):
    cp = ClassicalParameters(*params)
    ia = classical_array(cp)
    _, duals = classical_ordering(cp, ia)
    data = terwilliger_polynomial(ia, duals)
    assert classical_terwilliger_polynomial(cp) == data.T
    assert classical_tau(cp) == data.tau
    assert classical_p_minus_minus(cp) == data.p_minus_minus
    assert sorted(classical_triple_root_list(cp)) == data.roots.values()


@pytest.mark.parametrize("params, text, cover", [
    ((2, 3, 1), "91,66,45;1,6,15", 7),
    ((1, 3, 2), "36,25,16;1,4,18", 6),
    ((0, 3, 1), "7,6,5;1,2,3", 7),
])
def test_pseudo_partition_array(params, text, cover):
    pp = PseudoPartitionParameters(*params)
    assert pp.cover_diameter == cover
    assert pseudo_partition_array(pp) == parse_array(text)


@pytest.mark.parametrize("params", [(3, 3, 1), (1, 2, 1), (1, 3, 3)])
def test_pseudo_partition_rejects(params):
    with pytest.raises(InfeasibleParameters):
        PseudoPartitionParameters(*params)
