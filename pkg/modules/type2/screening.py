"""Screening of type-2 parameter tuples down to a known graph or a contradiction.

The pipeline follows the case split on t: t = D + 1 - 2/γ_2 leads to the
halved cube through a table of c_2 values, t in {2D, 2D+1} forces a strongly
regular local graph with smallest eigenvalue -2 which is then matched
against Seidel's list and eliminated family by family.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Tuple

from core.algebra import ROOT_TOLERANCE, fmt, same_multiset, to_rational
from core.drg import TOLERANCE, dual_eigenvalues, q_polynomial_orderings, spectrum
from core.errors import DRGError
from modules.terwilliger.polynomial import forbidden_region, interval_bound, terwilliger_polynomial
from .parameters import (
    Type2Parameters,
    condition_check,
    gamma_r,
    leading_coefficient,
    t2d_values,
    type2_array,
    type2_eigenvalues,
    type2_ordering,
    type2_terwilliger_roots,
)

log = logging.getLogger(__name__)

FOLDED_JOHNSON = "folded-Johnson"
FOLDED_HALVED_CUBE = "folded-halved-cube"
HALVED_ODD_CUBE = "halved-odd-cube"
INFEASIBLE = "infeasible"
INCONCLUSIVE = "inconclusive"

# c_2 -> (row, verdict) for graphs with θ_D = b_1 - 1
C2_TABLE: Dict[int, Tuple[str, str]] = {
    2: ("c2 = 2 families: excluded since γ2 >= 1 gives c2 > 2", INFEASIBLE),
    4: ("Johnson graphs: excluded, type 2A", INFEASIBLE),
    6: ("halved cubes", HALVED_ODD_CUBE),
    10: ("Gosset graph: excluded, type 2A", INFEASIBLE),
}


@dataclass(frozen=True)
class LocalSRG:
    v: Fraction
    k: Fraction
    lam: Fraction
    mu: Fraction

    @property
    def integral(self) -> bool:
        return all(x.denominator == 1 for x in self.as_tuple())

    def as_tuple(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.v, self.k, self.lam, self.mu


def srg_local_parameters(t, gamma2) -> LocalSRG:
    t, g = to_rational(t), to_rational(gamma2)
    srg = LocalSRG(t + g * t * (t - 1) / 2, (t - 1) * g, t * g / 2 - 2, g)
    if not srg.integral:
        log.warning("local SRG parameters %s are not integral", tuple(fmt(x) for x in srg.as_tuple()))
    return srg


@dataclass(frozen=True)
class SeidelMatch:
    family: str
    m: Optional[int] = None

    def __str__(self):
        return self.family if self.m is None else f"{self.family}({self.m})"


_SPORADIC = {
    "shrikhande": (16, 6, 2, 2),
    "chang": (28, 12, 6, 4),
    "petersen": (10, 3, 0, 1),
    "clebsch": (16, 10, 6, 6),
    "schlafli": (27, 16, 10, 8),
}


def seidel_match(v, k, lam, mu) -> List[SeidelMatch]:
    """Every family of strongly regular graphs with smallest eigenvalue -2 having these parameters."""
    params = tuple(to_rational(x) for x in (v, k, lam, mu))
    v, k, lam, mu = params
    found: List[SeidelMatch] = []
    if v.denominator == 1 and v % 2 == 0:
        m = int(v) // 2
        if m >= 2 and params == (2 * m, 2 * m - 2, 2 * m - 4, 2 * m - 2):
            found.append(SeidelMatch("multipartite", m))
    if lam.denominator == 1:
        m = int(lam) + 2
        if m >= 3 and params == (m * m, 2 * (m - 1), m - 2, 2):
            found.append(SeidelMatch("grid", m))
        if m >= 5 and params == (comb(m, 2), 2 * (m - 2), m - 2, 4):
            found.append(SeidelMatch("triangular", m))
    for name, ref in _SPORADIC.items():
        if params == ref:
            found.append(SeidelMatch(name))
    return found


def _eliminate(match: SeidelMatch, t: Fraction) -> Tuple[Optional[str], str]:
    """(surviving verdict or None, note) for one Seidel family."""
    f = match.family
    if f == "multipartite":
        return None, "complete multipartite local graph forces t = 2"
    if f == "grid":
        return FOLDED_JOHNSON, f"{match.m}x{match.m} grid: folded Johnson graph J({2 * match.m},{match.m})"
    if f == "shrikhande":
        return (None, "Shrikhande graph excluded since t >= 6") if t >= 6 else (INCONCLUSIVE, "Shrikhande graph not excluded")
    if f == "triangular":
        return FOLDED_HALVED_CUBE, f"T({match.m}): folded halved {match.m}-cube"
    if f == "chang":
        return (None, "Chang graphs excluded since m = 2t >= 12") if 2 * t >= 12 else (INCONCLUSIVE, "Chang graphs not excluded")
    if f == "petersen":
        return None, "Petersen local graph forces D = 2"
    if f == "clebsch":
        return None, "Clebsch local graph forces t = 8/3"
    if f == "schlafli":
        return None, "Schläfli local graph forces t = 3"
    return INCONCLUSIVE, f"unhandled family {f}"


@dataclass
class ScreeningReport:
    params: Type2Parameters
    array: Optional[str] = None
    gamma2: Optional[Fraction] = None
    h: Optional[Fraction] = None
    condition: Optional[bool] = None
    branch: Optional[str] = None
    decision_row: Optional[str] = None
    ordering: Optional[str] = None
    roots: List[Fraction] = field(default_factory=list)
    leading_coefficient: Optional[Fraction] = None
    forbidden_interval: Optional[Tuple[Fraction, Fraction]] = None
    interval_bound: Optional[Fraction] = None
    srg: Optional[LocalSRG] = None
    seidel_matches: List[str] = field(default_factory=list)
    eliminations: List[str] = field(default_factory=list)
    verdict: str = INCONCLUSIVE
    reason: str = ""

    def _finish(self, verdict: str, reason: str) -> "ScreeningReport":
        self.verdict, self.reason = verdict, reason
        log.info("%s: %s (%s)", self.params, verdict, reason)
        return self

    def to_dict(self) -> dict:
        return {
            "input": self.params.to_dict(),
            "array": self.array,
            "gamma2": self.gamma2,
            "h": self.h,
            "condition": self.condition,
            "branch": self.branch,
            "decision_row": self.decision_row,
            "ordering": self.ordering,
            "roots": self.roots,
            "leading_coefficient": self.leading_coefficient,
            "forbidden_interval": list(self.forbidden_interval) if self.forbidden_interval else None,
            "interval_bound": self.interval_bound,
            "srg": list(self.srg.as_tuple()) if self.srg else None,
            "seidel_matches": self.seidel_matches,
            "eliminations": self.eliminations,
            "verdict": self.verdict,
            "reason": self.reason,
        }


def _hypothesis(p: Type2Parameters, gamma2: Fraction) -> bool:
    if gamma2 == 0:
        return False
    t = p.t
    return sorted([p.x, p.y, Fraction(p.D)]) == sorted([(t - 1) / 2, t / 2, t - 1 + 2 / gamma2])


def screen(p: Type2Parameters, tolerance: float = TOLERANCE, root_tolerance: float = ROOT_TOLERANCE) -> ScreeningReport:
    rep = ScreeningReport(p)
    ia = type2_array(p)
    rep.array = str(ia)
    rep.gamma2 = gamma2 = gamma_r(ia, 2)
    rep.h = p.h
    rep.condition = condition_check(ia)
    t, D = p.t, p.D

    if not _hypothesis(p, gamma2):
        return rep._finish(INCONCLUSIVE, "{x, y, D} is not {(t-1)/2, t/2, t-1+2/γ2}")
    if p.h != 2 * gamma2:
        return rep._finish(INFEASIBLE, f"h = {fmt(p.h)} but 2γ2 = {fmt(2 * gamma2)}")

    if t == D + 1 - 2 / gamma2:
        rep.branch = "t = D + 1 - 2/γ2"
        spec = spectrum(ia, root_tolerance)
        thetas = type2_eigenvalues(p, ia, spec)
        if thetas[D] != ia.bi(1) - 1:
            return rep._finish(INFEASIBLE, f"θ_D = {fmt(thetas[D])} differs from b1 - 1 = {fmt(ia.bi(1) - 1)}")
        c2 = ia.ci(2)
        row, verdict = C2_TABLE.get(int(c2) if c2.denominator == 1 else -1,
                                    (f"c2 = {fmt(c2)}: no graph with θ_D = b1 - 1", INFEASIBLE))
        rep.decision_row = row
        if verdict == HALVED_ODD_CUBE and gamma2 != 4:
            return rep._finish(INFEASIBLE, f"halved cube needs γ2 = 4, got {fmt(gamma2)}")
        return rep._finish(verdict, row)

    if t not in (2 * D, 2 * D + 1):
        return rep._finish(INCONCLUSIVE, "t is neither D + 1 - 2/γ2 nor 2D, 2D+1")
    rep.branch = "t in {2D, 2D+1}"

    spec = spectrum(ia, root_tolerance)
    orderings = q_polynomial_orderings(ia, spec, tolerance=tolerance)
    ordering = type2_ordering(p, ia, spec, orderings)
    rep.ordering = str(ordering)
    data = terwilliger_polynomial(ia, dual_eigenvalues(ia, spec, ordering, tolerance=tolerance), root_tolerance)
    rep.roots = data.roots.values()
    formulas = type2_terwilliger_roots(p, ia)
    expected = t2d_values(t, gamma2)
    if not formulas.consistent:
        return rep._finish(INFEASIBLE, "; ".join(formulas.mismatches))
    if not (same_multiset(rep.roots, formulas.values, tolerance) and same_multiset(formulas.values, expected, tolerance)):
        return rep._finish(INFEASIBLE, "roots of T differ from the type-2 root formulas")

    rep.leading_coefficient = data.leading
    if data.leading != leading_coefficient(p, ia):
        return rep._finish(INFEASIBLE, f"leading coefficient {fmt(data.leading)} differs from {fmt(leading_coefficient(p, ia))}")
    if data.leading >= 0:
        return rep._finish(INFEASIBLE, f"leading coefficient {fmt(data.leading)} is not negative")

    s = gamma2 * (t - 2) / 2
    region = forbidden_region(data.T, data.roots)
    if not region.has_interval(Fraction(-2), s, tolerance):
        return rep._finish(INFEASIBLE, f"(-2, {fmt(s)}) is not a forbidden interval of T")
    rep.forbidden_interval = (Fraction(-2), s)

    bound = interval_bound(ia.k, ia.ai(1), -2, s)
    rep.interval_bound = bound.value
    if bound.value < 0:
        return rep._finish(INFEASIBLE, f"interval bound is negative ({fmt(bound.value)})")
    if not bound.equality:
        return rep._finish(INCONCLUSIVE, f"interval bound {fmt(bound.value)} > 0 does not force a strongly regular local graph")

    rep.srg = srg = srg_local_parameters(t, gamma2)
    if not srg.integral:
        return rep._finish(INFEASIBLE, "local strongly regular parameters are not integral")
    if (srg.v, srg.k) != (ia.k, ia.ai(1)):
        return rep._finish(INFEASIBLE, f"local graph ({fmt(srg.v)}, {fmt(srg.k)}) differs from (b0, a1)")

    matches = seidel_match(*srg.as_tuple())
    rep.seidel_matches = [str(m) for m in matches]
    survivors: Dict[str, str] = {}
    for m in matches:
        verdict, note = _eliminate(m, t)
        rep.eliminations.append(note)
        if verdict is not None:
            survivors.setdefault(verdict, note)
    if not survivors:
        return rep._finish(INFEASIBLE, "no strongly regular graph with smallest eigenvalue -2 survives")
    if len(survivors) > 1 or INCONCLUSIVE in survivors:
        return rep._finish(INCONCLUSIVE, "local graph not determined: " + ", ".join(rep.seidel_matches))
    (verdict, note), = survivors.items()
    return rep._finish(verdict, note)


KNOWN_OPEN_TUPLES: Tuple[Tuple[str, str, str, int], ...] = (
    ("7", "7/2", "13/2", 3),
    ("6", "5/2", "11/2", 3),
    ("8", "7/2", "15/2", 4),
    ("6", "5/2", "6", 3),
)

KNOWN_OPEN_VERDICTS: Tuple[str, ...] = (FOLDED_HALVED_CUBE, FOLDED_HALVED_CUBE, FOLDED_HALVED_CUBE, FOLDED_JOHNSON)


def screen_known(tolerance: float = TOLERANCE, root_tolerance: float = ROOT_TOLERANCE) -> List[ScreeningReport]:
    """Screen the four open arrays {91,66,45;1,6,15}, {66,45,28;1,6,30}, {120,91,66,45;1,6,15,56}, {36,25,16;1,4,18}."""
    reports = []
    for t, x, y, D in KNOWN_OPEN_TUPLES:
        try:
            reports.append(screen(Type2Parameters(t, x, y, D), tolerance, root_tolerance))
        except DRGError as exc:
            rep = ScreeningReport(Type2Parameters(t, x, y, D))
            reports.append(rep._finish(INFEASIBLE, str(exc)))
    return reports
