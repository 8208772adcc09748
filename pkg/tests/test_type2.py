from fractions import Fraction as F

import pytest

from core.algebra import same_multiset
from core.drg import dual_eigenvalues, spectrum
from core.errors import DiameterTooSmall, InfeasibleParameters, ParameterInconsistency
from core.parser import parse_array
from modules.classical.parameters import PseudoPartitionParameters
from modules.terwilliger.polynomial import terwilliger_polynomial
from modules.type2.parameters import (
    FAMILIES,
    Type2Parameters,
    bannai_ito_parameters,
    beta_r,
    condition_check,
    dual_parameters,
    gamma_r,
    h_from_gamma2,
    known_type2_parameters,
    leading_coefficient,
    pseudo_partition_type2,
    t2d_values,
    type2_array,
    type2_eigenvalues,
    type2_ordering,
    type2_terwilliger_roots,
)
from modules.type2.screening import (
    FOLDED_HALVED_CUBE,
    FOLDED_JOHNSON,
    HALVED_ODD_CUBE,
    KNOWN_OPEN_VERDICTS,
    SeidelMatch,
    _eliminate,
    screen,
    screen_known,
    seidel_match,
    srg_local_parameters,
)

FH14 = Type2Parameters(7, "7/2", "13/2", 3)
FJ12 = Type2Parameters(6, "5/2", 6, 3)
HALVED7 = Type2Parameters("7/2", "5/4", "7/4", 3)


def test_arrays():
    assert type2_array(FH14) == parse_array("91,66,45;1,6,15")
    assert type2_array(FJ12) == parse_array("36,25,16;1,4,18")
    assert type2_array(Type2Parameters(6, "5/2", "11/2", 3)) == parse_array("66,45,28;1,6,30")
    assert type2_array(Type2Parameters(8, "7/2", "15/2", 4)) == parse_array("120,91,66,45;1,6,15,56")
    assert type2_array(HALVED7) == parse_array("21,10,3;1,6,15")


def test_h_and_gamma2():
    assert (FH14.h, gamma_r(type2_array(FH14), 2)) == (8, 4)
    assert (FJ12.h, gamma_r(type2_array(FJ12), 2)) == (4, 2)
    assert HALVED7.h == 8 and HALVED7.t_star == F(7, 2)
    assert h_from_gamma2(4) == 8


def test_parameter_errors():
    with pytest.raises(DiameterTooSmall):
        Type2Parameters(6, 2, 3, 2)
    with pytest.raises(ParameterInconsistency):
        Type2Parameters(3, 2, 3, 3)


def test_condition():
    ia = parse_array("91,66,45;1,6,15")
    assert gamma_r(ia, 3) == 0 and beta_r(ia, 2) == 4
    assert condition_check(ia)
    assert not condition_check(parse_array("36,25,16;1,4,18"))
    assert not condition_check(parse_array("66,45,28;1,6,30"))
    with pytest.raises(DiameterTooSmall):
        condition_check(parse_array("3,2;1,1"))


def test_eigenvalues_in_q_order():
    assert type2_eigenvalues(HALVED7) == (21, 1, -3, 9)
    assert type2_eigenvalues(FH14) == (91, 43, 11, -5)


def test_roots_and_leading_coefficient():
    roots = type2_terwilliger_roots(FH14)
    assert roots.sorted() == [F(-5, 2), -2, 10, F(31, 2)]
    assert roots.consistent
    assert leading_coefficient(FH14) == -24
    assert type2_terwilliger_roots(FJ12).sorted() == [F(-8, 3), -2, 4, F(22, 3)]
    assert leading_coefficient(FJ12) == -18
    assert type2_terwilliger_roots(HALVED7).sorted() == [-6, -2, 3, 19]
    assert leading_coefficient(HALVED7) == F(1, 9)


def test_t2d_values():
    assert t2d_values(7, 4) == [F(-5, 2), -2, 10, F(31, 2)]


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("variant", ["even", "odd"])
@pytest.mark.parametrize("D", [3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow), pytest.param(8, marks=pytest.mark.slow)])
def test_known_families_match_assembled_polynomial(family, variant, D):
    p = known_type2_parameters(family, D, variant)
    ia = type2_array(p)
    spec = spectrum(ia)
    assert same_multiset(spec.thetas, type2_eigenvalues(p, ia, spec))
    ordering = type2_ordering(p, ia, spec)
    data = terwilliger_polynomial(ia, dual_eigenvalues(ia, spec, ordering))
    roots = type2_terwilliger_roots(p, ia)
    assert roots.consistent
    assert data.roots.values() == roots.sorted()
    assert data.leading == leading_coefficient(p, ia)


def test_known_family_gamma2_pairing():
    for D in (3, 4):
        assert gamma_r(type2_array(known_type2_parameters("folded-johnson", D)), 2) == 2
        assert gamma_r(type2_array(known_type2_parameters("folded-halved-cube", D)), 2) == 4
        assert gamma_r(type2_array(known_type2_parameters("halved-cube", D)), 2) == 4
    with pytest.raises(ValueError):
        known_type2_parameters("johnson", 3)


def test_pseudo_partition_type2():
    assert pseudo_partition_type2(PseudoPartitionParameters(2, 3, 1)) == FH14
    assert pseudo_partition_type2(PseudoPartitionParameters(1, 3, 2)) == FJ12
    with pytest.raises(InfeasibleParameters):
        pseudo_partition_type2(PseudoPartitionParameters(0, 3, 1))


@pytest.mark.parametrize("p", [FH14, HALVED7])
def test_dual_parameters(p):
    duals = dual_parameters(p)
    assert duals.h_star == 8
    assert duals.t_star == p.t_star
    assert not duals.discrepancies


def test_dual_parameters_halved_cube():
    assert dual_parameters(HALVED7).b0_star == 21
    assert dual_parameters(FH14).b0_star == 91


def test_bannai_ito():
    bi = bannai_ito_parameters(FH14)
    assert (bi.r1, bi.r2, bi.r3) == (F(-9, 2), F(-15, 2), -4)
    assert (bi.s, bi.s_star) == (-1 - FH14.t_star, -8)


def test_local_srg_and_seidel():
    assert srg_local_parameters(7, 4).as_tuple() == (91, 24, 12, 4)
    assert [str(m) for m in seidel_match(36, 10, 4, 2)] == ["grid(6)"]
    assert [str(m) for m in seidel_match(16, 6, 2, 2)] == ["grid(4)", "shrikhande"]
    assert [str(m) for m in seidel_match(28, 12, 6, 4)] == ["triangular(8)", "chang"]
    assert [str(m) for m in seidel_match(10, 3, 0, 1)] == ["petersen"]
    assert [str(m) for m in seidel_match(27, 16, 10, 8)] == ["schlafli"]
    assert [str(m) for m in seidel_match(8, 6, 4, 6)] == ["multipartite(4)"]


def test_eliminations():
    assert _eliminate(SeidelMatch("shrikhande"), F(6))[0] is None
    assert _eliminate(SeidelMatch("chang"), F(7))[0] is None
    assert _eliminate(SeidelMatch("grid", 6), F(6))[0] == FOLDED_JOHNSON
    assert _eliminate(SeidelMatch("triangular", 14), F(7))[0] == FOLDED_HALVED_CUBE
    assert _eliminate(SeidelMatch("multipartite", 3), F(6))[0] is None


def test_screen_halved_cube():
    rep = screen(HALVED7)
    assert rep.verdict == HALVED_ODD_CUBE
    assert rep.branch == "t = D + 1 - 2/γ2"
    assert rep.decision_row == "halved cubes"


def test_screen_folded_halved_cube():
    rep = screen(FH14)
    assert rep.verdict == FOLDED_HALVED_CUBE
    assert rep.roots == [F(-5, 2), -2, 10, F(31, 2)]
    assert rep.forbidden_interval == (-2, 10)
    assert rep.interval_bound == 0
    assert rep.seidel_matches == ["triangular(14)"]


def test_screen_known():
    reports = screen_known()
    assert [r.verdict for r in reports] == list(KNOWN_OPEN_VERDICTS)
    assert [r.interval_bound for r in reports] == [0, 0, 0, 0]
    assert [r.srg.as_tuple() for r in reports] == [
        (91, 24, 12, 4), (66, 20, 10, 4), (120, 28, 14, 4), (36, 10, 4, 2),
    ]
    assert [r.array for r in reports] == [
        "{91,66,45;1,6,15}", "{66,45,28;1,6,30}", "{120,91,66,45;1,6,15,56}", "{36,25,16;1,4,18}",
    ]
    assert set(reports[0].to_dict()) >= {"input", "array", "gamma2", "roots", "interval_bound", "srg",
                                         "seidel_matches", "verdict"}
