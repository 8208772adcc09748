"""Type-2 parameterization of Q-polynomial distance-regular graphs.

A tuple (t, x, y, D) fixes h through c_1 = 1; the array, the eigenvalues
in Q-polynomial order and the dual data all follow from it.  The known
families are folded Johnson graphs J(2m, m), folded halved 2m-cubes and
halved (2D+1)-cubes.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import List, Optional, Sequence, Tuple

from core.algebra import fmt, to_rational
from core.drg import (
    DualEigenvalues,
    IntersectionArray,
    KreinTensor,
    QPolyOrdering,
    Spectrum,
    dual_eigenvalues,
    dual_intersection_numbers,
    eigenvalue_sequence,
    intersection_numbers,
    krein_parameters,
    q_polynomial_orderings,
    spectrum,
    theta_hat,
    validate,
)
from core.errors import DegenerateDuals, DiameterTooSmall, InfeasibleArray, InfeasibleParameters, ParameterInconsistency
from modules.classical.parameters import PseudoPartitionParameters

log = logging.getLogger(__name__)

FAMILIES = ("folded-johnson", "folded-halved-cube", "halved-cube")


def _div(num: Fraction, den: Fraction, what: str) -> Fraction:
    if den == 0:
        raise ParameterInconsistency(f"vanishing denominator in {what}")
    return num / den


def _h(t: Fraction, x: Fraction, y: Fraction, D: int, what: str = "h") -> Fraction:
    return _div((2 - t) * (1 - t), (1 - t + x) * (1 - t + y) * (1 - t + D), what)


@dataclass(frozen=True)
class Type2Parameters:
    t: Fraction
    x: Fraction
    y: Fraction
    D: int

    def __post_init__(self):
        for name in ("t", "x", "y"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if self.D < 3:
            raise DiameterTooSmall(3, self.D, "type-2 parameters")
        if self.t.denominator == 1 and 1 <= self.t <= 2 * self.D - 1:
            raise ParameterInconsistency(f"t = {fmt(self.t)} lies in 1..{2 * self.D - 1}")

    @property
    def h(self) -> Fraction:
        return _h(self.t, self.x, self.y, self.D)

    @property
    def t_star(self) -> Fraction:
        return self.x + self.y + self.D + 1 - self.t

    def to_dict(self) -> dict:
        return {"t": self.t, "x": self.x, "y": self.y, "D": self.D}

    def __str__(self):
        return f"(t={fmt(self.t)}, x={fmt(self.x)}, y={fmt(self.y)}, D={self.D})"


def _c(i: int, h, t, x, y, D) -> Fraction:
    if i == D:
        return _div(h * D * (D - t + x) * (D - t + y), 2 * D - t - 1, f"c_{D}")
    return _div(h * i * (i - t + x) * (i - t + y) * (i - t + D), (2 * i - t) * (2 * i - t - 1), f"c_{i}")


def _b(i: int, h, t, x, y, D) -> Fraction:
    return _div(h * (i - t) * (i - x) * (i - y) * (i - D), (2 * i - t) * (2 * i - t + 1), f"b_{i}")


def type2_array(p: Type2Parameters) -> IntersectionArray:
    h, t, x, y, D = p.h, p.t, p.x, p.y, p.D
    b0 = _div(h * x * y * D, t - 1, "b_0")
    if t != 0 and _b(0, h, t, x, y, D) != b0:
        raise ParameterInconsistency(f"b_0 from the b_i formula is {fmt(_b(0, h, t, x, y, D))}, expected {fmt(b0)}")
    b = [b0] + [_b(i, h, t, x, y, D) for i in range(1, D)]
    c = [_c(i, h, t, x, y, D) for i in range(1, D + 1)]
    try:
        return validate(b + c, D)
    except InfeasibleArray as exc:
        raise ParameterInconsistency(f"type-2 parameters {p} give an infeasible array: {exc}") from exc


def type2_eigenvalues(p: Type2Parameters, ia: Optional[IntersectionArray] = None,
                      spec: Optional[Spectrum] = None) -> Tuple[Fraction, ...]:
    """θ_i = b_0 + h i(i - t*) in Q-polynomial order, checked against the spectrum of the array."""
    ia = ia or type2_array(p)
    h, ts = p.h, p.t_star
    thetas = tuple(ia.k + h * i * (i - ts) for i in range(p.D + 1))
    spec = spec or spectrum(ia)
    if sorted(thetas) != sorted(spec.thetas, key=float):
        raise ParameterInconsistency(
            f"eigenvalues {', '.join(fmt(x) for x in thetas)} do not match the spectrum of {ia}")
    return thetas


def gamma_r(ia: IntersectionArray, r: int) -> Fraction:
    return sum(((-1) ** i * ia.ci(r - i) * comb(r, i) for i in range(r + 1)), Fraction(0))


def beta_r(ia: IntersectionArray, r: int) -> Fraction:
    return sum(((-1) ** i * ia.bi(r - i) * comb(r, i) for i in range(r + 1)), Fraction(0))


def condition_check(ia: IntersectionArray) -> bool:
    """c_3 - 3c_2 + 3 = b_2 - 2b_1 + k - c_2 + 2 = 0, i.e. γ_3 = β_2 - γ_2 = 0."""
    if ia.D < 3:
        raise DiameterTooSmall(3, ia.D, "the type-2 condition")
    return gamma_r(ia, 3) == 0 and beta_r(ia, 2) - gamma_r(ia, 2) == 0


def h_from_gamma2(gamma2) -> Fraction:
    return 2 * to_rational(gamma2)


# --- Terwilliger roots of type-2 graphs ---

@dataclass(frozen=True)
class Type2Roots:
    """The four roots, each with its second printed form and the θ̂ identities."""

    values: Tuple[Fraction, Fraction, Fraction, Fraction]
    alternate: Tuple[Fraction, Fraction, Fraction]
    theta_hat_1: Fraction
    theta_hat_D: Fraction
    mismatches: Tuple[str, ...] = field(default=(), compare=False)

    @property
    def consistent(self) -> bool:
        return not self.mismatches

    def sorted(self) -> List[Fraction]:
        return sorted(self.values)


def type2_terwilliger_roots(p: Type2Parameters, ia: Optional[IntersectionArray] = None) -> Type2Roots:
    ia = ia or type2_array(p)
    t, x, y, D = p.t, p.x, p.y, p.D
    b1 = ia.bi(1)
    r1 = -1 - _div((x - 1) * (D - 1) * (t - 1), (x - t + 1) * (D - t + 1) * (t - 3), "root 1")
    r2 = -1 - _div((y - 1) * (D - 1) * (t - 1), (y - t + 1) * (D - t + 1) * (t - 3), "root 2")
    r3 = -1 - _div((x - 1) * (y - 1) * (t - 1), (x - t + 1) * (y - t + 1) * (t - 3), "root 3")
    r4 = -2 - _div(Fraction(2), t - 3, "root 4")
    alt = (
        -1 - _div(b1 * (y - t + 1), (t - 1) * (y - 1), "root 1, second form"),
        -1 - _div(b1 * (x - t + 1), (t - 1) * (x - 1), "root 2, second form"),
        -1 - _div(b1 * (D - t + 1), (t - 1) * (D - 1), "root 3, second form"),
    )
    h, ts = p.h, p.t_star
    th1 = theta_hat(ia, ia.k + h * (1 - ts))
    thD = theta_hat(ia, ia.k + h * D * (D - ts))

    mismatches = [f"root {n}: {fmt(a)} != {fmt(b)}" for n, (a, b) in enumerate(zip((r1, r2, r3), alt), start=1) if a != b]
    if r3 != thD:
        mismatches.append(f"root 3 = {fmt(r3)} but θ̂_D = {fmt(thD)}")
    if r4 != th1:
        mismatches.append(f"root 4 = {fmt(r4)} but θ̂_1 = {fmt(th1)}")
    for m in mismatches:
        log.warning("%s: %s", p, m)
    return Type2Roots((r1, r2, r3, r4), alt, th1, thD, tuple(mismatches))


def t2d_values(t, gamma2) -> List[Fraction]:
    """Sorted roots once t is 2D or 2D+1 and γ_2 is substituted."""
    t, g = to_rational(t), to_rational(gamma2)
    return sorted([
        -2 - 2 / (t - 3),
        Fraction(-2),
        g * (t - 2) / 2,
        -1 + (g * (t - 2) + 2) * (t - 1) / (2 * (t - 3)),
    ])


def leading_coefficient(p: Type2Parameters, ia: Optional[IntersectionArray] = None) -> Fraction:
    """-p^1_23 τ_0 expressed through t."""
    ia = ia or type2_array(p)
    t = p.t
    p123 = intersection_numbers(ia)[1, 2, 3]
    return -_div(2 * p123 * (t - 3) ** 2, ia.bi(1) * (t - 2) * (t - 5), "the leading coefficient")


# --- known families ---

def known_type2_parameters(family: str, D: int, variant: str = "even") -> Type2Parameters:
    if family not in FAMILIES:
        raise ValueError(f"unknown type-2 family {family!r}, expected one of {', '.join(FAMILIES)}")
    if variant not in ("even", "odd"):
        raise ValueError(f"variant must be 'even' or 'odd', got {variant!r}")
    half = Fraction(1, 2)
    if family == "halved-cube":
        t = D + half
        return Type2Parameters(t, (t - 1) / 2, t / 2, D)
    t = Fraction(2 * D if variant == "even" else 2 * D + 1)
    x = (t - 1) / 2 if variant == "even" else t / 2
    y = t if family == "folded-johnson" else t - half
    return Type2Parameters(t, x, y, D)


def pseudo_partition_type2(pp: PseudoPartitionParameters) -> Type2Parameters:
    if pp.alpha == 0:
        raise InfeasibleParameters("folded cubes (alpha = 0) are not of type 2")
    family = "folded-johnson" if pp.alpha == 1 else "folded-halved-cube"
    return known_type2_parameters(family, pp.Dprime, "even" if pp.gamma == 2 else "odd")


# --- Q-polynomial ordering and dual data ---

def type2_ordering(p: Type2Parameters, ia: Optional[IntersectionArray] = None, spec: Optional[Spectrum] = None,
                   orderings: Optional[Sequence[QPolyOrdering]] = None) -> QPolyOrdering:
    ia = ia or type2_array(p)
    spec = spec or spectrum(ia)
    thetas = type2_eigenvalues(p, ia, spec)
    if orderings is None:
        orderings = q_polynomial_orderings(ia, spec)
    for ordering in orderings:
        if eigenvalue_sequence(spec, ordering) == thetas:
            return ordering
    raise ParameterInconsistency(f"no Q-polynomial ordering of {ia} lists the eigenvalues as θ_i = b_0 + h i(i - t*)")


@dataclass(frozen=True)
class DualParameters:
    h_star: Fraction
    t_star: Fraction
    b0_star: Fraction
    ordering: QPolyOrdering
    discrepancies: Tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "h_star": self.h_star,
            "t_star": self.t_star,
            "b0_star": self.b0_star,
            "ordering": str(self.ordering),
            "discrepancies": list(self.discrepancies),
        }


def dual_parameters(p: Type2Parameters, ia: Optional[IntersectionArray] = None, spec: Optional[Spectrum] = None,
                    krein: Optional[KreinTensor] = None, ordering: Optional[QPolyOrdering] = None) -> DualParameters:
    """h*, t* and b*_0 (the multiplicity of E_1), checked against the computed duals and Krein parameters."""
    ia = ia or type2_array(p)
    spec = spec or spectrum(ia)
    krein = krein or krein_parameters(ia, spec)
    ordering = ordering or type2_ordering(p, ia, spec, q_polynomial_orderings(ia, spec, krein))
    t, ts, x, y, D = p.t, p.t_star, p.x, p.y, p.D
    b0_star = to_rational(spec[ordering.sequence[1]].multiplicity)
    issues: List[str] = []
    try:
        h_star = _h(ts, x, y, D, "h*")
    except ParameterInconsistency as exc:
        return DualParameters(Fraction(0), ts, b0_star, ordering, (str(exc),))

    try:
        duals: Optional[DualEigenvalues] = dual_eigenvalues(ia, spec, ordering)
    except DegenerateDuals as exc:
        duals = None
        issues.append(str(exc))
    if duals is not None:
        for i in range(D + 1):
            expected = b0_star + h_star * i * (i - t)
            if duals[i] != expected:
                issues.append(f"θ*_{i} = {fmt(duals[i])}, dual formula gives {fmt(expected)}")

    c_star, _ = dual_intersection_numbers(krein, ordering)
    for i in range(1, D + 1):
        try:
            expected = _c(i, h_star, ts, x, y, D)
        except ParameterInconsistency as exc:
            issues.append(f"c*_{i}: {exc}")
            continue
        if c_star[i - 1] != expected:
            issues.append(f"c*_{i} = {fmt(c_star[i - 1])}, dual formula gives {fmt(expected)}")
    for msg in issues:
        log.warning("%s dual parameters: %s", p, msg)
    return DualParameters(h_star, ts, b0_star, ordering, tuple(issues))


@dataclass(frozen=True)
class BannaiItoParameters:
    r1: Fraction
    r2: Fraction
    r3: Fraction
    s: Fraction
    s_star: Fraction


def bannai_ito_parameters(p: Type2Parameters) -> BannaiItoParameters:
    return BannaiItoParameters(-1 - p.x, -1 - p.y, Fraction(-1 - p.D), -1 - p.t_star, -1 - p.t)
