"""Classical parameters (D, b, alpha, beta) and pseudo-partition arrays."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from core.algebra import RationalPolynomial, fmt, to_rational, vanishes
from core.drg import (
    DualEigenvalues,
    IntersectionArray,
    QPolyOrdering,
    Spectrum,
    dual_eigenvalues,
    intersection_numbers,
    q_polynomial_orderings,
    spectrum,
    validate,
)
from core.errors import DegenerateDuals, InfeasibleArray, InfeasibleParameters

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassicalParameters:
    D: int
    b: Fraction
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        for name in ("b", "alpha", "beta"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if self.b == 0:
            raise InfeasibleParameters("b = 0 is not allowed")

    def bracket(self, j: int) -> Fraction:
        return gaussian_bracket(j, self.b)

    def __str__(self):
        return f"({self.D},{fmt(self.b)},{fmt(self.alpha)},{fmt(self.beta)})"


def gaussian_bracket(j: int, b) -> Fraction:
    """[j] = 1 + b + ... + b^(j-1); [0] = 0, and [j] = j when b = 1."""
    b = to_rational(b)
    return sum((b ** e for e in range(j)), Fraction(0))


def classical_array(cp: ClassicalParameters) -> IntersectionArray:
    br = cp.bracket
    c = [br(i) * (1 + cp.alpha * br(i - 1)) for i in range(1, cp.D + 1)]
    b = [(br(cp.D) - br(i)) * (cp.beta - cp.alpha * br(i)) for i in range(cp.D)]
    bad = [f"b_{i} = {fmt(x)}" for i, x in enumerate(b) if x <= 0] + \
          [f"c_{i} = {fmt(x)}" for i, x in enumerate(c, start=1) if x <= 0]
    if bad:
        raise InfeasibleParameters(f"classical parameters {cp} give non-positive entries: {', '.join(bad)}")
    try:
        return validate(b + c, cp.D)
    except InfeasibleArray as exc:
        raise InfeasibleParameters(f"classical parameters {cp}: {exc}") from exc


def dual_relation_check(cp: ClassicalParameters, duals: DualEigenvalues, tolerance: float = 1e-9) -> bool:
    t0, t1 = duals[0], duals[1]
    for i in range(len(duals)):
        expected = (t1 - t0) * cp.bracket(i) * cp.b ** (1 - i)
        if not vanishes((duals[i] - t0) - expected, tolerance):
            return False
    return True


@dataclass(frozen=True)
class Imprimitivity:
    bipartite: bool
    antipodal: bool

    @property
    def kind(self) -> str:
        flags = [name for name, on in (("bipartite", self.bipartite), ("antipodal", self.antipodal)) if on]
        return "+".join(flags) or "primitive"


def imprimitivity(cp: ClassicalParameters) -> Imprimitivity:
    return Imprimitivity(
        bipartite=cp.alpha == 0 and cp.beta == 1,
        antipodal=cp.b == 1 and cp.beta == 1 + cp.alpha * (cp.D - 1),
    )


def classical_triple_root_list(cp: ClassicalParameters) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    # alpha*b*(b^(D-1) - 1)/(b - 1) is alpha*b*[D-1], which also covers b = 1
    return (
        cp.beta - cp.alpha - 1,
        Fraction(-1),
        -cp.b - 1,
        cp.alpha * cp.b * cp.bracket(cp.D - 1) - 1,
    )


def classical_tau(cp: ClassicalParameters) -> Tuple[Fraction, Fraction, Fraction]:
    ia = classical_array(cp)
    b1, a1 = ia.bi(1), ia.ai(1)
    s = (cp.b + 1) / b1
    return s, s * (b1 - a1 + 1) - cp.b, s * (b1 - a1 - 1 + cp.alpha * cp.b) - cp.b


def classical_p_minus_minus(cp: ClassicalParameters) -> RationalPolynomial:
    ia = classical_array(cp)
    p123 = intersection_numbers(ia)[1, 2, 3]
    ab = cp.alpha * cp.b
    return RationalPolynomial.of(1 - ab, 2 - ab, 1) * (p123 * (cp.b + 1) / ia.bi(1))


def classical_terwilliger_polynomial(cp: ClassicalParameters) -> RationalPolynomial:
    """Closed form b2/(alpha+1) * p++(λ) * (λ² + λ(2-αb) - αb + 1) - b2²(λ+1)²."""
    ia = classical_array(cp)
    b2 = ia.bi(2)
    a, b, beta, nD = cp.alpha, cp.b, cp.beta, cp.bracket(cp.D)
    c2 = (a + 1) * (b + 1)
    plus = RationalPolynomial.of(beta * nD - c2, a * nD + beta - a - 1 - c2, -1)
    minus = RationalPolynomial.of(1 - a * b, 2 - a * b, 1)
    return plus * minus * (b2 / (a + 1)) - RationalPolynomial.of(1, 1) ** 2 * (b2 * b2)


def classical_ordering(cp: ClassicalParameters, ia: Optional[IntersectionArray] = None,
                       spec: Optional[Spectrum] = None, orderings: Optional[Sequence[QPolyOrdering]] = None,
                       tolerance: float = 1e-9) -> Tuple[QPolyOrdering, DualEigenvalues]:
    """The Q-polynomial ordering whose dual eigenvalues obey the classical relation."""
    ia = ia or classical_array(cp)
    spec = spec or spectrum(ia)
    if orderings is None:
        orderings = q_polynomial_orderings(ia, spec, tolerance=tolerance)
    for ordering in orderings:
        try:
            duals = dual_eigenvalues(ia, spec, ordering, tolerance=tolerance)
        except DegenerateDuals:
            continue
        if dual_relation_check(cp, duals, tolerance):
            log.info("%s: classical ordering %s", cp, ordering)
            return ordering, duals
    raise InfeasibleParameters(f"no Q-polynomial ordering of {ia} satisfies the classical dual relation")


# --- pseudo-partition graphs ---

@dataclass(frozen=True)
class PseudoPartitionParameters:
    alpha: int
    Dprime: int
    gamma: int

    def __post_init__(self):
        if self.alpha not in (0, 1, 2):
            raise InfeasibleParameters(f"alpha must be 0, 1 or 2, got {self.alpha}")
        if self.gamma not in (1, 2):
            raise InfeasibleParameters(f"gamma must be 1 or 2, got {self.gamma}")
        if self.Dprime < 3:
            raise InfeasibleParameters(f"folded diameter must be at least 3, got {self.Dprime}")

    @property
    def cover_diameter(self) -> int:
        return 2 * self.Dprime + (1 if self.gamma == 1 else 0)


def pseudo_partition_array(pp: PseudoPartitionParameters) -> IntersectionArray:
    D, Dp, a = pp.cover_diameter, pp.Dprime, pp.alpha
    b = [Fraction((D - i) * (1 + a * (D - 1 - i))) for i in range(Dp)]
    c = [Fraction(i * (1 + a * (i - 1))) for i in range(1, Dp)]
    c.append(Fraction(pp.gamma * Dp * (1 + a * (Dp - 1))))
    return validate(b + c, Dp)
