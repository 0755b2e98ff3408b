"""Univariate polynomials in k with exact rational coefficients."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    """Coefficients in ascending degree; `threshold` is the least k it is claimed for."""

    coefficients: tuple[Fraction, ...] = ()
    threshold: int | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def k(cls) -> "Polynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1  # -1 for the zero polynomial

    def leading(self, n: int = 1) -> list[Fraction]:
        return list(reversed(self.coefficients))[:n]

    def __call__(self, k) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * k + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return Polynomial([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                           for i in range(n)])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial(out)

    def scale(self, c) -> "Polynomial":
        return Polynomial([x * c for x in self.coefficients])

    def with_threshold(self, t: int | None) -> "Polynomial":
        return Polynomial(self.coefficients, t)

    def to_text(self, var: str = "k") -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for d in range(self.degree, -1, -1):
            c = self.coefficients[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if d == 0:
                body = str(a)
            else:
                mono = var if d == 1 else f"{var}^{d}"
                if a == 1:
                    body = mono
                elif a.denominator == 1:
                    body = f"{a}{mono}"
                else:
                    body = f"({a}){mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_text()

    def to_json(self) -> dict:
        return {"coefficients": [f"{c.numerator}/{c.denominator}" for c in self.coefficients],
                "threshold": self.threshold}

    @classmethod
    def from_json(cls, doc: dict) -> "Polynomial":
        return cls([Fraction(s) for s in doc["coefficients"]], doc.get("threshold"))


def binomial_in_k(shift: int, m: int) -> Polynomial:
    """binomial(k - shift + m - 1, m - 1) as a polynomial in k, for m >= 1."""
    p = Polynomial.constant(1)
    for t in range(1, m):
        p = p * Polynomial((t - shift, 1))
    return p.scale(Fraction(1, factorial(m - 1)))


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> Polynomial:
    """Lagrange interpolation through the points (xs[i], ys[i]), exactly."""
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    total = Polynomial()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = Polynomial.constant(1)
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Polynomial((-xj, 1))
                denom *= xi - xj
        total = total + basis.scale(Fraction(yi) / denom)
    return total
