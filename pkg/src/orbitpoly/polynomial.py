"""Exact univariate polynomials over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError

Number = int | Fraction


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a rational number: {text!r}") from None


@dataclass(frozen=True)
class RationalPolynomial:
    """Coefficients in ascending degree; trailing zeros are stripped so the
    zero polynomial has an empty coefficient tuple."""

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [Fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def constant(cls, c: Number) -> RationalPolynomial:
        return cls((Fraction(c),))

    @classmethod
    def x(cls) -> RationalPolynomial:
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x: Number) -> Fraction:
        return evaluate(self, x)

    def __add__(self, other: RationalPolynomial) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial.constant(other)
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        a = a + (Fraction(0),) * (n - len(a))
        b = b + (Fraction(0),) * (n - len(b))
        return RationalPolynomial(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: RationalPolynomial) -> RationalPolynomial:
        return self + (-other)

    def __mul__(self, other) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            c = Fraction(other)
            return RationalPolynomial(tuple(c * a for a in self.coefficients))
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return RationalPolynomial(tuple(out))

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "coefficients": [_fmt(c) for c in self.coefficients],
        }

    @classmethod
    def from_json(cls, data: dict) -> RationalPolynomial:
        return cls(tuple(parse_rational(c) for c in data["coefficients"]))

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k, c in reversed(list(enumerate(self.coefficients))):
            if c == 0:
                continue
            mono = "" if k == 0 else ("n" if k == 1 else f"n^{k}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = str(c) + ("*" if mono else "")
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ")


def evaluate(p: RationalPolynomial, x: Number) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc


def interpolate(points: Iterable[tuple[int, Number]]) -> RationalPolynomial:
    """Lagrange interpolation through ``points``; degree < number of points."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise InputError(f"duplicate abscissa among {[str(x) for x in xs]}")
    result = RationalPolynomial()
    for i, (xi, yi) in enumerate(pts):
        if yi == 0:
            continue
        basis = RationalPolynomial.constant(1)
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j != i:
                basis = basis * RationalPolynomial((-xj, Fraction(1)))
                denom *= xi - xj
        result = result + basis * (yi / denom)
    return result


def scale_add(terms: Iterable[tuple[Number, RationalPolynomial]]) -> RationalPolynomial:
    """Exact sum of ``weight * polynomial`` over ``terms``."""
    total = RationalPolynomial()
    for w, p in terms:
        total = total + p * Fraction(w)
    return total


def from_values(values: Sequence[Number], start: int = 1) -> RationalPolynomial:
    """Interpolant through ``(start + i, values[i])``."""
    return interpolate((start + i, v) for i, v in enumerate(values))
