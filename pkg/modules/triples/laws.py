"""Affine law [i,i+1,i+1] = sigma_i [1,2,2] + rho_{i,delta} for triples (x, y, z) with y, z in Γ(x).

delta = d(y, z) is 1 or 2 and is supplied by the caller.
"""
from dataclasses import dataclass
from typing import Dict, Tuple

from core.algebra import Number, vanishes
from core.drg import DualEigenvalues, IntersectionArray, intersection_numbers
from core.errors import DegenerateDuals
from modules.classical.parameters import ClassicalParameters, classical_array


@dataclass(frozen=True)
class TripleLaw:
    i: int
    delta: int
    sigma: Number
    rho: Number

    def predict(self, count122) -> Number:
        return self.sigma * count122 + self.rho

    def to_dict(self) -> dict:
        return {"i": self.i, "delta": self.delta, "sigma": self.sigma, "rho": self.rho}


def _check_args(ia: IntersectionArray, i: int, delta: int):
    if not 1 <= i <= ia.D - 1:
        raise ValueError(f"i must lie in 1..{ia.D - 1}, got {i}")
    if delta not in (1, 2):
        raise ValueError(f"delta must be 1 or 2, got {delta}")


def triple_law(ia: IntersectionArray, duals: DualEigenvalues, i: int, delta: int) -> TripleLaw:
    _check_args(ia, i, delta)
    t = duals.theta_star
    t0, t1, t2 = t[0], t[1], t[2]
    ti, tn, tp = t[i], t[i + 1], t[i - 1]
    for name, d in (("θ*0-θ*2", t0 - t2), (f"θ*{i + 1}-θ*{i}", tn - ti), ("θ*0-θ*1", t0 - t1)):
        if vanishes(d):
            raise DegenerateDuals(f"{name} vanishes for ordering {duals.ordering}")
    b1, ci = ia.bi(1), ia.ci(i)
    p = intersection_numbers(ia)[1, i, i + 1]

    sigma = p * (t2 - t1) * (t0 + t1 - ti - tn) / (b1 * (t0 - t2) * (tn - ti))
    rho = p * (t1 - ti) / (tn - ti)
    if delta == 2:
        rho += p * ((t0 - t1) * (t1 - t2) * (t2 - tn) - (t1 - t2) ** 2 * (t1 - ti)) / ((t0 - t1) * (t0 - t2) * (tn - ti))
        rho += p / b1 * ((t0 - t1) * (t0 + t1 - ti - tn) - ci * (t0 - t2) * (tp - ti)) / ((t0 - t2) * (tn - ti))
    return TripleLaw(i, delta, sigma, rho)


def triple_laws(ia: IntersectionArray, duals: DualEigenvalues) -> Dict[Tuple[int, int], TripleLaw]:
    return {(i, d): triple_law(ia, duals, i, d) for i in range(1, ia.D) for d in (1, 2)}


def classical_triple_law(cp: ClassicalParameters, i: int, delta: int) -> TripleLaw:
    ia = classical_array(cp)
    _check_args(ia, i, delta)
    b, b1 = cp.b, ia.bi(1)
    p = intersection_numbers(ia)[1, i, i + 1]
    spread = 2 * cp.bracket(i + 1) - (1 + b ** i)
    sigma = p * spread / ((1 + b) * b1)
    rho = -p * b * cp.bracket(i - 1)
    if delta == 2:
        rho += p * b / b1 * (ia.ci(i) - spread / (1 + b))
    return TripleLaw(i, delta, sigma, rho)


def local_122_identity(a1, b1, delta: int, count111):
    if delta not in (1, 2):
        raise ValueError(f"delta must be 1 or 2, got {delta}")
    return count111 + b1 - a1 + (1 if delta == 1 else -1)
