"""Triangles described by four tangent-circle radii.

Three mutually tangent circles with radii r1, r2, r3 have centers forming a
triangle with sides r1+r2, r1+r3, r2+r3.  The fourth radius r4 = r1+r2+r3 is
the semiperimeter, and the product of all four radii is the squared area.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateTriangleError
from .exact import Number, Surd, frac, sqrt_exact


@dataclass(frozen=True)
class Triangle:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        a, b, c = (frac(v) for v in (self.a, self.b, self.c))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        if min(a, b, c) <= 0 or a + b <= c or a + c <= b or b + c <= a:
            raise DegenerateTriangleError(f"sides {a}, {b}, {c} do not form a triangle")

    def sides(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.a, self.b, self.c

    def scaled(self, k: Number) -> Triangle:
        k = frac(k)
        return Triangle(k * self.a, k * self.b, k * self.c)


@dataclass(frozen=True)
class RadiusQuadruple:
    r1: Fraction
    r2: Fraction
    r3: Fraction
    r4: Fraction

    def __post_init__(self):
        vals = [frac(v) for v in (self.r1, self.r2, self.r3, self.r4)]
        for name, v in zip(("r1", "r2", "r3", "r4"), vals):
            object.__setattr__(self, name, v)
        if min(vals) <= 0:
            raise DegenerateTriangleError(f"radii must be positive: {vals}")
        if vals[3] != vals[0] + vals[1] + vals[2]:
            raise DegenerateTriangleError("r4 must equal r1 + r2 + r3")

    @classmethod
    def from_three(cls, r1: Number, r2: Number, r3: Number) -> RadiusQuadruple:
        r1, r2, r3 = frac(r1), frac(r2), frac(r3)
        return cls(r1, r2, r3, r1 + r2 + r3)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.r1, self.r2, self.r3, self.r4

    def __iter__(self):
        return iter(self.as_tuple())


def radii_from_sides(t: Triangle) -> RadiusQuadruple:
    a, b, c = t.sides()
    half = Fraction(1, 2)
    radii = (half * (a + b - c), half * (a - b + c), half * (-a + b + c))
    if min(radii) <= 0:
        raise DegenerateTriangleError(f"degenerate triangle {a}, {b}, {c}")
    return RadiusQuadruple(*radii, half * (a + b + c))


def sides_from_radii(r: RadiusQuadruple) -> Triangle:
    return Triangle(r.r1 + r.r2, r.r1 + r.r3, r.r2 + r.r3)


def heron_area_sq(r: RadiusQuadruple) -> Fraction:
    """Squared area: the product of the four radii."""
    return r.r1 * r.r2 * r.r3 * r.r4


def heron_classical(t: Triangle) -> Fraction:
    """s(s-a)(s-b)(s-c), computed from the sides alone."""
    a, b, c = t.sides()
    s = (a + b + c) / 2
    return s * (s - a) * (s - b) * (s - c)


def area(r: RadiusQuadruple) -> Fraction | Surd:
    return sqrt_exact(heron_area_sq(r))


def equi_radii(r: RadiusQuadruple) -> list[Fraction | Surd]:
    """Radii [s1, s2, s3, s4] of the three ex-circles and the in-circle.

    Each si = G / ri.  When the area G is rational (always for right
    triangles) the entries are Fractions, otherwise :class:`Surd` values
    whose squares G²/ri² are exact.
    """
    g_sq = heron_area_sq(r)
    return [sqrt_exact(g_sq, scale=1 / ri) for ri in r]
