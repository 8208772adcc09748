"""Intersection arrays and the parameters derived from them.

Everything here is a pure function of an ``IntersectionArray``.  Rational
eigenvalues keep the whole chain (multiplicities, dual eigenvalues, Krein
parameters) exact; irrational ones switch that chain to floats.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from core.algebra import (
    ROOT_TOLERANCE,
    Number,
    RationalPolynomial,
    exact_sqrt,
    factor_real_roots,
    fmt,
    is_exact,
    positive,
    to_rational,
    vanishes,
)
from core.errors import DegenerateDuals, InfeasibleArray, KreinConditionViolated

log = logging.getLogger(__name__)

TOLERANCE = 1e-9
MULTIPLICITY_TOLERANCE = 1e-6


@dataclass(frozen=True)
class IntersectionArray:
    b: Tuple[Fraction, ...]
    c: Tuple[Fraction, ...]
    warnings: Tuple[str, ...] = field(default=(), compare=False)

    @property
    def D(self) -> int:
        return len(self.b)

    @property
    def k(self) -> Fraction:
        return self.b[0]

    def bi(self, i: int) -> Fraction:
        return self.b[i] if 0 <= i < self.D else Fraction(0)

    def ci(self, i: int) -> Fraction:
        return self.c[i - 1] if 1 <= i <= self.D else Fraction(0)

    def ai(self, i: int) -> Fraction:
        return self.k - self.bi(i) - self.ci(i)

    @property
    def a(self) -> Tuple[Fraction, ...]:
        return tuple(self.ai(i) for i in range(self.D + 1))

    def __str__(self):
        return "{" + ",".join(fmt(x) for x in self.b) + ";" + ",".join(fmt(x) for x in self.c) + "}"


def validate(raw: Sequence, D: int) -> IntersectionArray:
    values = [to_rational(x) for x in raw]
    if D < 1 or len(values) != 2 * D:
        raise InfeasibleArray([f"expected {2 * D} values for D = {D}, got {len(values)}"])
    b, c = tuple(values[:D]), tuple(values[D:])
    violations: List[str] = []
    for i, x in enumerate(b):
        if x <= 0:
            violations.append(f"b_{i} = {fmt(x)} is not positive")
    for i, x in enumerate(c, start=1):
        if x <= 0:
            violations.append(f"c_{i} = {fmt(x)} is not positive")
    if c[0] != 1:
        violations.append(f"c_1 = {fmt(c[0])}, expected 1")
    ia = IntersectionArray(b, c)
    if not violations:
        for i in range(D + 1):
            if ia.ai(i) < 0:
                violations.append(f"a_{i} = {fmt(ia.ai(i))} is negative")
    if violations:
        raise InfeasibleArray(violations)

    warnings: List[str] = []
    for i in range(1, D):
        if c[i] < c[i - 1]:
            warnings.append(f"c_{i + 1} < c_{i}")
        if b[i] > b[i - 1]:
            warnings.append(f"b_{i} > b_{i - 1}")
    for w in warnings:
        log.warning("%s: monotonicity violated (%s)", ia, w)
    return IntersectionArray(b, c, tuple(warnings))


# --- valencies and intersection numbers ---

@dataclass(frozen=True)
class Valencies:
    k: Tuple[Fraction, ...]
    warnings: Tuple[str, ...] = ()

    @property
    def v(self) -> Fraction:
        return sum(self.k, Fraction(0))

    def __getitem__(self, i: int) -> Fraction:
        return self.k[i]

    def __len__(self) -> int:
        return len(self.k)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.k)


def valencies(ia: IntersectionArray) -> Valencies:
    ks = [Fraction(1)]
    for i in range(1, ia.D + 1):
        ks.append(ks[i - 1] * ia.bi(i - 1) / ia.ci(i))
    warnings = tuple(f"k_{i} = {fmt(x)} is not an integer" for i, x in enumerate(ks) if x.denominator != 1)
    for w in warnings:
        log.warning("%s: %s", ia, w)
    return Valencies(tuple(ks), warnings)


def vertex_count(ia: IntersectionArray) -> Fraction:
    return valencies(ia).v


@dataclass(frozen=True)
class PTensor:
    """p^h_ij, read as ``tensor[h, i, j]``; indices outside 0..D read as 0."""

    D: int
    p: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]
    warnings: Tuple[str, ...] = ()

    def __getitem__(self, key: Tuple[int, int, int]) -> Fraction:
        h, i, j = key
        if min(key) < 0 or max(key) > self.D:
            return Fraction(0)
        return self.p[h][i][j]


def intersection_numbers(ia: IntersectionArray) -> PTensor:
    D = ia.D
    zero = Fraction(0)
    P = [[[zero] * (D + 1) for _ in range(D + 1)] for _ in range(D + 1)]

    def get(h: int, i: int, j: int) -> Fraction:
        if 0 <= h <= D and 0 <= i <= D and 0 <= j <= D:
            return P[h][i][j]
        return zero

    for h in range(D + 1):
        P[h][0][h] = Fraction(1)
        if h >= 1:
            P[h][1][h - 1] = ia.ci(h)
        P[h][1][h] = ia.ai(h)
        if h < D:
            P[h][1][h + 1] = ia.bi(h)

    # A_{i+1} = (A_1 A_i - b_{i-1} A_{i-1} - a_i A_i) / c_{i+1}
    for i in range(1, D):
        for j in range(D + 1):
            for h in range(D + 1):
                val = (ia.bi(h) * get(h + 1, i, j) + ia.ai(h) * get(h, i, j) + ia.ci(h) * get(h - 1, i, j)
                       - ia.bi(i - 1) * get(h, i - 1, j) - ia.ai(i) * get(h, i, j))
                P[h][i + 1][j] = val / ia.ci(i + 1)

    negative = [f"p^{h}_{i},{j} = {fmt(P[h][i][j])} is negative"
                for h in range(D + 1) for i in range(D + 1) for j in range(D + 1) if P[h][i][j] < 0]
    if negative:
        raise InfeasibleArray(negative)
    warnings = tuple(f"p^{h}_{i},{j} = {fmt(P[h][i][j])} is not an integer"
                     for h in range(D + 1) for i in range(D + 1) for j in range(i, D + 1)
                     if P[h][i][j].denominator != 1)
    if warnings:
        log.warning("%s: %d non-integral intersection numbers", ia, len(warnings))
    return PTensor(D, tuple(tuple(tuple(row) for row in plane) for plane in P), warnings)


# --- spectrum ---

@dataclass(frozen=True)
class Eigenvalue:
    theta: Number
    multiplicity: Number

    @property
    def exact(self) -> bool:
        return is_exact(self.theta)


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues sorted descending (natural order), theta_0 = k."""

    entries: Tuple[Eigenvalue, ...]
    v: Fraction
    warnings: Tuple[str, ...] = ()

    def __getitem__(self, j: int) -> Eigenvalue:
        return self.entries[j]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Eigenvalue]:
        return iter(self.entries)

    @property
    def exact(self) -> bool:
        return all(e.exact for e in self.entries)

    @property
    def thetas(self) -> Tuple[Number, ...]:
        return tuple(e.theta for e in self.entries)

    @property
    def multiplicities(self) -> Tuple[Number, ...]:
        return tuple(e.multiplicity for e in self.entries)

    @property
    def integral(self) -> bool:
        return not self.warnings


def characteristic_polynomial(ia: IntersectionArray) -> RationalPolynomial:
    """Polynomial whose roots are the eigenvalues of the tridiagonal matrix with rows (c_i, a_i, b_i)."""
    lam = RationalPolynomial.of(0, 1)
    prev, cur = RationalPolynomial.of(0), RationalPolynomial.of(1)
    for i in range(ia.D):
        prev, cur = cur, ((lam - ia.ai(i)) * cur - prev * ia.ci(i)) * (1 / ia.bi(i))
    return (lam - ia.ai(ia.D)) * cur - prev * ia.ci(ia.D)


def standard_sequence(ia: IntersectionArray, theta: Number) -> Tuple[Number, ...]:
    one = Fraction(1) if is_exact(theta) else 1.0
    u = [one, theta / ia.k]
    for i in range(1, ia.D):
        u.append(((theta - ia.ai(i)) * u[i] - ia.ci(i) * u[i - 1]) / ia.bi(i))
    return tuple(u[: ia.D + 1])


def spectrum(ia: IntersectionArray, root_tolerance: float = ROOT_TOLERANCE) -> Spectrum:
    roots = factor_real_roots(characteristic_polynomial(ia), root_tolerance)
    repeated = [r for r, m in roots.exact_roots if m > 1] + [r.value for r in roots.residual_roots if r.multiplicity > 1]
    if repeated:
        raise InfeasibleArray([f"repeated eigenvalue {fmt(r)}" for r in repeated])
    thetas = roots.distinct()
    if len(thetas) != ia.D + 1:
        raise InfeasibleArray([f"found {len(thetas)} real eigenvalues, expected {ia.D + 1}"])

    vals = valencies(ia)
    entries: List[Eigenvalue] = []
    warnings: List[str] = []
    for theta in sorted(thetas, key=float, reverse=True):
        u = standard_sequence(ia, theta)
        m = vals.v / sum(k * x * x for k, x in zip(vals.k, u))
        entries.append(Eigenvalue(theta, m))
        nearest = round(float(m))
        if nearest <= 0 or abs(float(m) - nearest) > MULTIPLICITY_TOLERANCE:
            warnings.append(f"multiplicity of {fmt(theta)} is {fmt(m)}, not a positive integer")
    for w in warnings:
        log.warning("%s: spectrally infeasible, %s", ia, w)
    return Spectrum(tuple(entries), vals.v, tuple(warnings))


def theta_hat(ia: IntersectionArray, theta: Number) -> Number:
    if vanishes(theta + 1):
        raise ValueError("theta_hat is undefined at theta = -1")
    return -1 - ia.bi(1) / (theta + 1)


# --- Q-polynomial structure ---

@dataclass(frozen=True)
class QPolyOrdering:
    """Natural-spectrum indices listed in Q-polynomial order E_0, E_1, ..."""

    sequence: Tuple[int, ...]

    @property
    def natural(self) -> bool:
        return self.sequence == tuple(range(len(self.sequence)))

    def __str__(self):
        return "(" + ",".join(str(j) for j in self.sequence) + ")"


def eigenvalue_sequence(spec: Spectrum, ordering: QPolyOrdering) -> Tuple[Number, ...]:
    return tuple(spec[j].theta for j in ordering.sequence)


@dataclass(frozen=True)
class DualEigenvalues:
    ordering: QPolyOrdering
    theta_star: Tuple[Number, ...]

    @property
    def exact(self) -> bool:
        return all(is_exact(x) for x in self.theta_star)

    def __getitem__(self, i: int) -> Number:
        return self.theta_star[i]

    def __len__(self) -> int:
        return len(self.theta_star)


def dual_eigenvalues(ia: IntersectionArray, spec: Spectrum, ordering: QPolyOrdering, position: int = 1,
                     tolerance: float = TOLERANCE) -> DualEigenvalues:
    e = spec[ordering.sequence[position]]
    ts = tuple(e.multiplicity * x for x in standard_sequence(ia, e.theta))
    for a in range(len(ts)):
        for b in range(a):
            if vanishes(ts[a] - ts[b], tolerance):
                raise DegenerateDuals(f"theta*_{b} = theta*_{a} = {fmt(ts[a])} for E_1 = E_{ordering.sequence[position]}")
    return DualEigenvalues(ordering, ts)


@dataclass(frozen=True)
class KreinTensor:
    """q^h_ij over natural-spectrum indices, read as ``tensor[h, i, j]``."""

    q: Tuple[Tuple[Tuple[Number, ...], ...], ...]

    def __getitem__(self, key: Tuple[int, int, int]) -> Number:
        h, i, j = key
        return self.q[h][i][j]

    @property
    def size(self) -> int:
        return len(self.q)


def krein_parameters(ia: IntersectionArray, spec: Spectrum, tolerance: float = TOLERANCE) -> KreinTensor:
    vals = valencies(ia)
    n = ia.D + 1
    U = [standard_sequence(ia, e.theta) for e in spec]
    m = spec.multiplicities
    q = [[[None] * n for _ in range(n)] for _ in range(n)]
    for h in range(n):
        for i in range(n):
            for j in range(i, n):
                s = sum(vals.k[l] * U[i][l] * U[j][l] * U[h][l] for l in range(n))
                value = m[i] * m[j] / vals.v * s
                if not is_exact(value) and abs(value) <= tolerance:
                    value = 0.0
                if value < 0 and not vanishes(value, tolerance):
                    raise KreinConditionViolated(h, i, j, fmt(value))
                q[h][i][j] = q[h][j][i] = value
    return KreinTensor(tuple(tuple(tuple(row) for row in plane) for plane in q))


def _tridiagonal(krein: KreinTensor, seq: Sequence[int], tolerance: float) -> bool:
    e1 = seq[1]
    for h in range(len(seq)):
        for j in range(len(seq)):
            val = krein[seq[h], e1, seq[j]]
            if abs(h - j) > 1 and not vanishes(val, tolerance):
                return False
            if abs(h - j) == 1 and not positive(val, tolerance):
                return False
    return True


def q_polynomial_orderings(ia: IntersectionArray, spec: Optional[Spectrum] = None,
                           krein: Optional[KreinTensor] = None, tolerance: float = TOLERANCE) -> List[QPolyOrdering]:
    spec = spec if spec is not None else spectrum(ia)
    krein = krein if krein is not None else krein_parameters(ia, spec, tolerance)
    n = ia.D + 1
    found: List[QPolyOrdering] = []
    for e1 in range(1, n):
        seq = [0, e1]
        while len(seq) < n:
            nxt = [l for l in range(n) if l not in seq and positive(krein[l, e1, seq[-1]], tolerance)]
            if not nxt:
                break
            seq.append(nxt[0])
        if len(seq) == n and _tridiagonal(krein, seq, tolerance):
            found.append(QPolyOrdering(tuple(seq)))
    log.info("%s: %d Q-polynomial ordering(s)", ia, len(found))
    return found


def dual_intersection_numbers(krein: KreinTensor, ordering: QPolyOrdering) -> Tuple[Tuple[Number, ...], Tuple[Number, ...]]:
    """(c*_1..c*_D, b*_0..b*_{D-1}) read off the Krein tensor in Q-order."""
    s = ordering.sequence
    D = len(s) - 1
    c_star = tuple(krein[s[i], s[1], s[i - 1]] for i in range(1, D + 1))
    b_star = tuple(krein[s[i], s[1], s[i + 1]] for i in range(D))
    return c_star, b_star


# --- strongly regular graphs (D = 2) ---

def srg_parameters(ia: IntersectionArray) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    if ia.D != 2:
        raise ValueError(f"{ia} has diameter {ia.D}, not 2")
    return vertex_count(ia), ia.k, ia.ai(1), ia.ci(2)


def srg_array(v, k, lam, mu) -> IntersectionArray:
    k, lam, mu = to_rational(k), to_rational(lam), to_rational(mu)
    return validate([k, k - lam - 1, 1, mu], 2)


def srg_eigenvalues(v, k, lam, mu) -> Tuple[Number, Number]:
    """Non-principal eigenvalues (r, s) with r > s."""
    k, lam, mu = to_rational(k), to_rational(lam), to_rational(mu)
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    root = exact_sqrt(disc)
    if root is None:
        half = float(disc) ** 0.5
        return (float(lam - mu) + half) / 2, (float(lam - mu) - half) / 2
    return (lam - mu + root) / 2, (lam - mu - root) / 2
