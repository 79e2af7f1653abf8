"""Exact number helpers shared by every module.

Rationals are plain :class:`fractions.Fraction` values.  Square roots that do
not come out rational are carried as :class:`Surd` so identities involving
them can still be compared with ``==``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Number = Union[int, Fraction]


def frac(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: a float has already lost the exact value.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def fmt(x: Number) -> str | int:
    """Render an exact rational for output: ints stay ints, others "p/q"."""
    x = frac(x)
    if x.denominator == 1:
        return x.numerator
    return f"{x.numerator}/{x.denominator}"


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def rational_sqrt(x: Number) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    x = frac(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    if is_square(p) and is_square(q):
        return Fraction(math.isqrt(p), math.isqrt(q))
    return None


@dataclass(frozen=True, eq=False)
class Surd:
    """The real number ``rational + coef * sqrt(radicand)``.

    ``radicand`` is a positive integer that is not a perfect square, so the
    irrational part never vanishes.  The radicand is not reduced to its
    square-free part; equality compares ``coef**2 * radicand`` instead.
    """

    rational: Fraction
    coef: Fraction
    radicand: int

    def __post_init__(self):
        if self.radicand <= 1 or is_square(self.radicand):
            raise ValueError("radicand must be a positive non-square integer")
        if self.coef == 0:
            raise ValueError("zero coefficient: use a Fraction instead")

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return False
        if not isinstance(other, Surd):
            return NotImplemented
        return (
            self.rational == other.rational
            and (self.coef > 0) == (other.coef > 0)
            and self.coef**2 * self.radicand == other.coef**2 * other.radicand
        )

    def __hash__(self):
        return hash((self.rational, self.coef > 0, self.coef**2 * self.radicand))

    def __float__(self):
        return float(self.rational) + float(self.coef) * math.sqrt(self.radicand)

    def square(self) -> Fraction | Surd:
        """(a + b√d)² = a² + b²d + 2ab√d."""
        a, b, d = self.rational, self.coef, self.radicand
        if a == 0:
            return b * b * d
        return Surd(a * a + b * b * d, 2 * a * b, d)

    def __str__(self):
        sign = "-" if self.coef < 0 else "+"
        c = abs(self.coef)
        body = f"sqrt({self.radicand})" if c == 1 else f"{fmt(c)}*sqrt({self.radicand})"
        if self.rational:
            return f"{fmt(self.rational)} {sign} {body}"
        return body if sign == "+" else f"-{body}"

    def __repr__(self):
        body = f"{fmt(self.coef)}*sqrt({self.radicand})"
        if self.rational:
            return f"Surd({fmt(self.rational)} + {body})"
        return f"Surd({body})"


def sqrt_exact(x: Number, scale: Number = 1, offset: Number = 0) -> Fraction | Surd:
    """Return ``offset + scale * sqrt(x)`` exactly.

    The result is a Fraction whenever ``x`` is the square of a rational and a
    :class:`Surd` otherwise.
    """
    x, scale, offset = frac(x), frac(scale), frac(offset)
    if x < 0:
        raise ValueError("square root of a negative rational")
    root = rational_sqrt(x)
    if root is not None or scale == 0:
        return offset + scale * (root or 0)
    # sqrt(p/q) = sqrt(p*q)/q, then pull small square factors out
    p, q = x.numerator, x.denominator
    outside, inside = _split_square(p * q)
    return Surd(offset, scale * outside / q, inside)


def _split_square(n: int, limit: int = 10**4) -> tuple[int, int]:
    """n = outside² * inside, removing square factors below ``limit``."""
    outside, f = 1, 2
    while f < limit and f * f <= n:
        while n % (f * f) == 0:
            n //= f * f
            outside *= f
        f += 1
    return outside, n
