"""The Terwilliger polynomial T(λ) = p++(λ)p--(λ) - p+-(λ)² for the second subconstituent.

T is non-negative at every non-principal eigenvalue of a local graph of a
Q-polynomial distance-regular graph, so its negative set is a forbidden
region for local eigenvalues.
"""
import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from core.algebra import (
    ROOT_TOLERANCE,
    Number,
    RationalPolynomial,
    RealRootSet,
    fmt,
    is_exact,
    real_roots,
    to_rational,
    vanishes,
)
from core.drg import (
    TOLERANCE,
    DualEigenvalues,
    IntersectionArray,
    QPolyOrdering,
    Spectrum,
    dual_eigenvalues,
    eigenvalue_sequence,
    intersection_numbers,
    q_polynomial_orderings,
    spectrum,
)
from core.errors import DegenerateDuals, DiameterTooSmall

log = logging.getLogger(__name__)

INF = float("inf")


def _require_diameter(ia: IntersectionArray, what: str):
    if ia.D < 3:
        raise DiameterTooSmall(3, ia.D, what)


def p_plus_plus(ia: IntersectionArray) -> RationalPolynomial:
    a1, c2 = ia.ai(1), ia.ci(2)
    return RationalPolynomial.of(ia.k - c2, a1 - c2, -1)


def p_plus_minus(ia: IntersectionArray) -> RationalPolynomial:
    _require_diameter(ia, "p+-")
    return RationalPolynomial.of(1, 1) * -intersection_numbers(ia)[2, 1, 3]


def tau_coefficients(ia: IntersectionArray, duals: DualEigenvalues) -> Tuple[Number, Number, Number]:
    _require_diameter(ia, "the tau coefficients")
    t0, t1, t2, t3 = duals[0], duals[1], duals[2], duals[3]
    a1, b1, c2 = ia.ai(1), ia.bi(1), ia.ci(2)
    for name, d in (("θ*0-θ*2", t0 - t2), ("θ*3-θ*2", t3 - t2), ("θ*1-θ*2", t1 - t2), ("θ*0-θ*1", t0 - t1)):
        if vanishes(d):
            raise DegenerateDuals(f"{name} vanishes for ordering {duals.ordering}")

    tau0 = (t2 - t1) * (t0 + t1 - t2 - t3) / ((t0 - t2) * (t3 - t2)) / b1
    r = (t2 - t1) / (t3 - t2)
    a = (t1 - t3) / (t0 - t2)
    tau1 = r * (a - (a1 - 1) / b1 - (a1 - 1) * a / b1)
    tau2 = r * (
        a
        - (a1 + 1 - c2) / b1
        - (a1 + 1) * a / b1
        + ((t1 - t2) ** 2 - (t0 - t1) * (t2 - t3)) / ((t0 - t1) * (t0 - t2))
        - (t0 - t1) * (t0 + t1 - t2 - t3) / ((t0 - t2) * (t1 - t2)) / b1
    )
    return tau0, tau1, tau2


def p_minus_minus(ia: IntersectionArray, duals: DualEigenvalues,
                  tau: Optional[Tuple[Number, Number, Number]] = None) -> RationalPolynomial:
    tau0, tau1, tau2 = tau if tau is not None else tau_coefficients(ia, duals)
    p123 = intersection_numbers(ia)[1, 2, 3]
    a1 = ia.ai(1)
    return RationalPolynomial.of(1 - a1 * tau0 - tau2, tau1 - tau2, tau0) * p123


@dataclass(frozen=True)
class TerwilligerData:
    p_plus_plus: RationalPolynomial
    p_plus_minus: RationalPolynomial
    p_minus_minus: RationalPolynomial
    T: RationalPolynomial
    tau: Tuple[Number, Number, Number]
    roots: RealRootSet
    ordering: Optional[QPolyOrdering] = None
    approximate: bool = False
    warnings: Tuple[str, ...] = field(default=(), compare=False)

    @property
    def leading(self) -> Fraction:
        return self.T.leading

    def to_dict(self) -> dict:
        return {
            "ordering": str(self.ordering) if self.ordering else None,
            "p_plus_plus": str(self.p_plus_plus),
            "p_plus_minus": str(self.p_plus_minus),
            "p_minus_minus": str(self.p_minus_minus),
            "T": str(self.T),
            "T_coefficients": self.T,
            "tau": list(self.tau),
            "roots": self.roots.values(),
            "approximate": self.approximate,
            "warnings": list(self.warnings),
        }


def terwilliger_polynomial(ia: IntersectionArray, duals: DualEigenvalues,
                           root_tolerance: float = ROOT_TOLERANCE) -> TerwilligerData:
    _require_diameter(ia, "the Terwilliger polynomial")
    tau = tau_coefficients(ia, duals)
    plus = p_plus_plus(ia)
    mixed = p_plus_minus(ia)
    # float duals enter the polynomial through their exact binary values
    minus = p_minus_minus(ia, duals, tau)
    T = plus * minus - mixed * mixed

    warnings: List[str] = []
    approximate = not duals.exact
    if approximate:
        warnings.append("dual eigenvalues are irrational; coefficients are approximate")
    if T.degree != 4:
        warnings.append(f"T has degree {T.degree}, leading coefficients cancel")
    if 1 <= T.degree <= 4:
        roots = real_roots(T, root_tolerance)
    else:
        roots = RealRootSet((), ())
    if roots.approximate:
        approximate = True
    for w in warnings:
        log.warning("%s ordering %s: %s", ia, duals.ordering, w)
    return TerwilligerData(plus, mixed, minus, T, tau, roots, duals.ordering, approximate, tuple(warnings))


# --- admissibility ---

class Admissibility(str, enum.Enum):
    ADMISSIBLE = "admissible"
    BOUNDARY = "boundary"
    VIOLATED = "violated"


def admissible_check(T: RationalPolynomial, eta: Number, tolerance: float = TOLERANCE) -> Admissibility:
    """Sign of T at a local eigenvalue; zero is exact for rational eta."""
    value = T(eta)
    if is_exact(value):
        if value == 0:
            return Admissibility.BOUNDARY
        return Admissibility.VIOLATED if value < 0 else Admissibility.ADMISSIBLE
    if abs(value) <= tolerance:
        return Admissibility.BOUNDARY
    return Admissibility.VIOLATED if value < 0 else Admissibility.ADMISSIBLE


@dataclass(frozen=True)
class AdmissibleRegion:
    """Open intervals where T < 0, sorted and disjoint."""

    forbidden_intervals: Tuple[Tuple[Number, Number], ...]
    approximate: bool = False

    def forbids(self, eta: Number) -> bool:
        return any(lo < eta < hi for lo, hi in self.forbidden_intervals)

    def has_interval(self, lo: Number, hi: Number, tolerance: float = TOLERANCE) -> bool:
        for a, b in self.forbidden_intervals:
            if _close(a, lo, tolerance) and _close(b, hi, tolerance):
                return True
        return False

    def interior(self) -> Tuple[Tuple[Number, Number], ...]:
        return tuple((lo, hi) for lo, hi in self.forbidden_intervals if lo != -INF and hi != INF)

    def to_dict(self) -> dict:
        return {"forbidden": [list(iv) for iv in self.forbidden_intervals], "approximate": self.approximate}


def _close(a: Number, b: Number, tolerance: float) -> bool:
    if a in (INF, -INF) or b in (INF, -INF):
        return a == b
    if is_exact(a) and is_exact(b):
        return a == b
    return abs(float(a) - float(b)) <= tolerance * max(1.0, abs(float(a)))


def _sample(lo: Number, hi: Number) -> Number:
    if lo == -INF and hi == INF:
        return Fraction(0)
    if lo == -INF:
        return hi - 1
    if hi == INF:
        return lo + 1
    return (lo + hi) / 2


def forbidden_region(T: RationalPolynomial, roots: Optional[RealRootSet] = None,
                     root_tolerance: float = ROOT_TOLERANCE) -> AdmissibleRegion:
    if roots is None:
        roots = real_roots(T, root_tolerance)
    points = roots.distinct()
    approximate = roots.approximate or roots.count != T.degree
    if roots.count != T.degree:
        log.warning("T = %s has %d real roots out of %d; region from sign sampling only", T, roots.count, T.degree)
    bounds = [-INF] + list(points) + [INF]
    forbidden = []
    for lo, hi in zip(bounds, bounds[1:]):
        x = _sample(lo, hi)
        if not is_exact(x):
            x = to_rational(x)
        if T(x) < 0:
            forbidden.append((lo, hi))
    return AdmissibleRegion(tuple(forbidden), approximate)


@dataclass(frozen=True)
class IntervalBound:
    value: Fraction
    equality: bool


def interval_bound(v, k, r, s) -> IntervalBound:
    """kv - k² + k(r+s) + (v-1)rs; zero forces a strongly regular local graph with eigenvalues r, s."""
    v, k, r, s = (to_rational(x) for x in (v, k, r, s))
    value = k * v - k * k + k * (r + s) + (v - 1) * r * s
    return IntervalBound(value, value == 0)


# --- per-ordering analysis ---

@dataclass
class OrderingAnalysis:
    ordering: QPolyOrdering
    eigenvalues: Tuple[Number, ...]
    duals: Optional[DualEigenvalues] = None
    data: Optional[TerwilligerData] = None
    region: Optional[AdmissibleRegion] = None
    error: Optional[str] = None

    def to_dict(self) -> dict:
        out = {
            "ordering": str(self.ordering),
            "eigenvalues": list(self.eigenvalues),
            "dual_eigenvalues": list(self.duals.theta_star) if self.duals else None,
            "error": self.error,
        }
        if self.data is not None:
            out["terwilliger"] = self.data.to_dict()
        if self.region is not None:
            out["forbidden_region"] = self.region.to_dict()
        return out


def analyze_orderings(ia: IntersectionArray, spec: Optional[Spectrum] = None,
                      orderings: Optional[Sequence[QPolyOrdering]] = None, index: Optional[int] = None,
                      tolerance: float = TOLERANCE, root_tolerance: float = ROOT_TOLERANCE) -> List[OrderingAnalysis]:
    """T(λ) and its forbidden region for every Q-polynomial ordering (or only ``orderings[index]``)."""
    _require_diameter(ia, "the Terwilliger polynomial")
    spec = spec if spec is not None else spectrum(ia, root_tolerance)
    if orderings is None:
        orderings = q_polynomial_orderings(ia, spec, tolerance=tolerance)
    if index is not None:
        if not 0 <= index < len(orderings):
            raise IndexError(f"ordering index {index} out of range, {len(orderings)} ordering(s) found")
        orderings = [orderings[index]]

    out: List[OrderingAnalysis] = []
    for ordering in orderings:
        item = OrderingAnalysis(ordering, eigenvalue_sequence(spec, ordering))
        try:
            item.duals = dual_eigenvalues(ia, spec, ordering, tolerance=tolerance)
            item.data = terwilliger_polynomial(ia, item.duals, root_tolerance)
            if item.data.T.degree >= 1:
                item.region = forbidden_region(item.data.T, item.data.roots)
        except DegenerateDuals as exc:
            item.error = str(exc)
            log.warning("%s ordering %s: %s", ia, ordering, exc)
        out.append(item)
        if item.data is not None:
            log.info("%s ordering %s: T = %s, roots %s", ia, ordering, item.data.T,
                     ", ".join(fmt(r) for r in item.data.roots.values()))
    return out
