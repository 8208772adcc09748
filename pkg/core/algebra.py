"""Exact rational polynomials and their real roots.

Coefficients are kept as ``fractions.Fraction`` so every ring operation is
exact.  Root extraction factors over QQ with sympy: linear factors give exact
rational roots, the remaining irreducible factors are solved numerically and
reported as residual (approximate) roots.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from math import isqrt
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import sympy as sp

from core.errors import UnsupportedDegree

log = logging.getLogger(__name__)

Number = Union[Fraction, float]
ROOT_TOLERANCE = 1e-12
SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
_LAMBDA = sp.Symbol("lambda")


def to_rational(value) -> Fraction:
    """Accept ints, Fractions, floats (exact binary value) and "p/q" / decimal strings."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rational numbers")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, float)):
        return Fraction(value)
    if isinstance(value, sp.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {value!r}") from exc
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def is_exact(value) -> bool:
    return isinstance(value, (Fraction, int)) and not isinstance(value, bool)


def fmt(value: Number) -> str:
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def vanishes(value: Number, tolerance: float = 1e-9) -> bool:
    if is_exact(value):
        return value == 0
    return abs(value) <= tolerance


def positive(value: Number, tolerance: float = 1e-9) -> bool:
    if is_exact(value):
        return value > 0
    return value > tolerance


def exact_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def snap_rational(value: float, tolerance: float = 1e-9, max_denominator: int = 1000) -> Number:
    """Replace a float by a nearby small-height rational when one lies within tolerance."""
    scale = tolerance * max(1.0, abs(value))
    nearest = round(value)
    if abs(value - nearest) <= scale:
        return Fraction(nearest)
    candidate = Fraction(value).limit_denominator(max_denominator)
    if abs(float(candidate) - value) <= scale:
        return candidate
    return value


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense univariate polynomial; ``coefficients[i]`` multiplies λ^i."""

    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        coefs = [to_rational(c) for c in self.coefficients]
        while len(coefs) > 1 and coefs[-1] == 0:
            coefs.pop()
        if not coefs:
            coefs = [Fraction(0)]
        object.__setattr__(self, "coefficients", tuple(coefs))

    @classmethod
    def of(cls, *coefs) -> "RationalPolynomial":
        return cls(tuple(coefs))

    @classmethod
    def from_roots(cls, roots: Iterable, leading=1) -> "RationalPolynomial":
        p = cls.of(leading)
        for r in roots:
            p = p * cls.of(-to_rational(r), 1)
        return p

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1]

    def is_zero(self) -> bool:
        return self.coefficients == (Fraction(0),)

    def __call__(self, x):
        return evaluate(self, x)

    def __add__(self, other):
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial.of(other)
        return RationalPolynomial(tuple(a + b for a, b in zip_longest(self.coefficients, other.coefficients, fillvalue=0)))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial.of(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RationalPolynomial):
            s = to_rational(other)
            return RationalPolynomial(tuple(s * c for c in self.coefficients))
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return RationalPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = RationalPolynomial.of(1)
        for _ in range(n):
            result = result * self
        return result

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple(i * c for i, c in enumerate(self.coefficients))[1:] or (0,))

    def to_sympy(self) -> sp.Poly:
        coefs = [sp.Rational(c.numerator, c.denominator) for c in reversed(self.coefficients)]
        return sp.Poly.from_list(coefs, _LAMBDA, domain="QQ")

    def __str__(self):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = "" if (mag == 1 and i > 0) else fmt(mag)
            if i > 0:
                body += "λ" + (str(i).translate(SUPERSCRIPT) if i > 1 else "")
            terms.append((sign, body))
        if not terms:
            return "0"
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def evaluate(p: RationalPolynomial, x):
    """Horner evaluation; exact for rational x, float arithmetic for float x."""
    acc = 0 if is_exact(x) else 0.0
    for c in reversed(p.coefficients):
        acc = acc * x + (c if is_exact(x) else float(c))
    return acc


@dataclass(frozen=True)
class ResidualRoot:
    value: float
    multiplicity: int
    error: float


@dataclass(frozen=True)
class RealRootSet:
    exact_roots: Tuple[Tuple[Fraction, int], ...]
    residual_roots: Tuple[ResidualRoot, ...]

    @property
    def approximate(self) -> bool:
        return bool(self.residual_roots)

    @property
    def count(self) -> int:
        return sum(m for _, m in self.exact_roots) + sum(r.multiplicity for r in self.residual_roots)

    def values(self) -> List[Number]:
        """All real roots with multiplicity, ascending."""
        out: List[Number] = []
        for r, m in self.exact_roots:
            out += [r] * m
        for r in self.residual_roots:
            out += [r.value] * r.multiplicity
        return sorted(out, key=float)

    def distinct(self) -> List[Number]:
        return sorted([r for r, _ in self.exact_roots] + [r.value for r in self.residual_roots], key=float)


def factor_real_roots(p: RationalPolynomial, tolerance: float = ROOT_TOLERANCE) -> RealRootSet:
    """Real roots of a polynomial of any positive degree (used for characteristic polynomials too)."""
    if p.degree < 1:
        raise UnsupportedDegree(p.degree)
    _, factors = p.to_sympy().factor_list()
    exact = {}
    residual: List[ResidualRoot] = []
    for factor, mult in factors:
        if factor.degree() == 1:
            a, b = factor.all_coeffs()
            root = to_rational(sp.Rational(-b) / sp.Rational(a))
            exact[root] = exact.get(root, 0) + mult
            continue
        for r in factor.nroots(n=30):
            if not r.is_real:
                continue
            value = float(r)
            residual.append(ResidualRoot(value, mult, _relative_residual(p, value)))
    for r in residual:
        if r.error > tolerance:
            log.warning("residual root %.15g of %s has relative residual %.3g above %.3g", r.value, p, r.error, tolerance)
    ordered = tuple(sorted(exact.items()))
    return RealRootSet(ordered, tuple(sorted(residual, key=lambda r: r.value)))


def _relative_residual(p: RationalPolynomial, value: float) -> float:
    x = Fraction(value)
    scale = sum(abs(c) * abs(x) ** i for i, c in enumerate(p.coefficients))
    if scale == 0:
        return 0.0
    return float(abs(evaluate(p, x)) / scale)


def real_roots(p: RationalPolynomial, tolerance: float = ROOT_TOLERANCE) -> RealRootSet:
    if not 1 <= p.degree <= 4:
        raise UnsupportedDegree(p.degree)
    return factor_real_roots(p, tolerance)


def same_multiset(left: Sequence[Number], right: Sequence[Number], tolerance: float = 1e-9) -> bool:
    """Compare root lists; exact pairs compare exactly, mixed pairs at the tolerance."""
    if len(left) != len(right):
        return False
    for a, b in zip(sorted(left, key=float), sorted(right, key=float)):
        if is_exact(a) and is_exact(b):
            if a != b:
                return False
        elif abs(float(a) - float(b)) > tolerance * max(1.0, abs(float(a))):
            return False
    return True
