"""Right triangles with integer sides.

A right triangle is one whose radius quadruple satisfies r2*r3 = r1*r4.  For
a primitive Pythagorean triple the radii are integers and factor as

    r1 = q*q', r2 = p*q', r3 = q*p', r4 = p*p'

where [q', q, p, p'] obeys the Fibonacci rule p = q' + q, p' = q + p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import InvalidSequenceError, NotPythagoreanError, PytriError
from .triangle import RadiusQuadruple, Triangle


@dataclass(frozen=True, order=True)
class PythTriple:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) <= 0:
            raise NotPythagoreanError(f"non-positive side in {self.as_list()}")
        if self.a * self.a + self.b * self.b != self.c * self.c:
            raise NotPythagoreanError(f"{self.as_list()} is not a Pythagorean triple")

    def as_list(self) -> list[int]:
        return [self.a, self.b, self.c]

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    @property
    def primitive(self) -> bool:
        return math.gcd(self.a, self.b, self.c) == 1

    @property
    def normalized(self) -> bool:
        return self.primitive and self.a % 2 == 1

    def radii(self) -> tuple[int, int, int, int]:
        a, b, c = self.a, self.b, self.c
        # integer for every Pythagorean triple: a+b-c is always even
        return (a + b - c) // 2, (a - b + c) // 2, (-a + b + c) // 2, (a + b + c) // 2

    def radius_quadruple(self) -> RadiusQuadruple:
        return RadiusQuadruple(*self.radii())

    def triangle(self) -> Triangle:
        return Triangle(self.a, self.b, self.c)

    def __str__(self):
        return f"[{self.a}, {self.b}, {self.c}]"


@dataclass(frozen=True)
class PSequence:
    """[q', q, p, p'] with p = q' + q and p' = q + p."""

    qp: int
    q: int
    p: int
    pp: int

    def __post_init__(self):
        qp, q, p, pp = self.as_tuple()
        if min(qp, q) <= 0:
            raise InvalidSequenceError(f"entries must be positive: {self.as_list()}")
        if p != qp + q or pp != q + p:
            raise InvalidSequenceError(f"{self.as_list()} breaks the Fibonacci rule")
        if qp % 2 == 0:
            raise InvalidSequenceError(f"first entry must be odd: {self.as_list()}")
        if math.gcd(qp, q) != 1:
            raise InvalidSequenceError(f"first two entries share a factor: {self.as_list()}")

    @classmethod
    def complete(cls, qp: int, q: int) -> PSequence:
        return cls(qp, q, qp + q, qp + 2 * q)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return self.qp, self.q, self.p, self.pp

    def as_list(self) -> list[int]:
        return list(self.as_tuple())

    def __iter__(self):
        return iter(self.as_tuple())

    @property
    def inradius(self) -> int:
        return self.qp * self.q

    @property
    def area(self) -> int:
        return self.qp * self.q * self.p * self.pp


@dataclass(frozen=True)
class DicksonParams:
    m: int
    n: int
    e: int

    def __post_init__(self):
        if min(self.m, self.n, self.e) <= 0:
            raise PytriError("Dickson parameters must be positive")
        if self.e * self.e != 2 * self.m * self.n:
            raise PytriError(f"e^2 != 2mn for m={self.m}, n={self.n}, e={self.e}")


def verify_right(r: RadiusQuadruple) -> bool:
    return r.r2 * r.r3 == r.r1 * r.r4


def dickson_check(a: int, b: int, c: int) -> bool:
    """½(a+b-c)² = (c-b)(c-a); holds exactly when a²+b² = c²."""
    return (a + b - c) ** 2 == 2 * (c - b) * (c - a)


def dickson_build(d: DicksonParams) -> PythTriple:
    return PythTriple(d.m + d.e, d.n + d.e, d.m + d.n + d.e)


def dickson_params_of(t: PythTriple) -> DicksonParams:
    a, b, c = t
    return DicksonParams(c - b, c - a, a + b - c)


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _unitary_splits(n: int):
    """Yield (u, v) with u*v = n and gcd(u, v) = 1, each unordered pair once."""
    powers = [p**k for p, k in sorted(_factor(n).items())]
    if not powers:
        yield 1, n
        return
    # pin the first prime power to v so {u, v} is not produced twice
    for picks in product((False, True), repeat=len(powers) - 1):
        u = math.prod(pw for pw, pick in zip(powers[1:], picks) if pick)
        yield u, n // u


def dickson_enumerate(r1: int) -> list[PythTriple]:
    """All normalized primitive triples whose in-radius is ``r1``.

    2*r1² is split into coprime factors u*v; the radii are then
    [r1, r1+u, r1+v, 2*r1+u+v].
    """
    if r1 < 1:
        raise PytriError("in-radius must be at least 1")
    found = set()
    for u, v in _unitary_splits(2 * r1 * r1):
        rq = (r1, r1 + u, r1 + v)
        a, b, c = rq[0] + rq[1], rq[0] + rq[2], rq[1] + rq[2]
        if math.gcd(a, b, c) != 1:
            continue
        found.add(normalize_primitive(a, b, c))
    return sorted(found, key=lambda t: (t.c, t.a))


def _square_split(n: int) -> tuple[int, int]:
    """n = f²·g with g square-free; returns (f, g)."""
    f = g = 1
    for p, k in _factor(n).items():
        f *= p ** (k // 2)
        if k % 2:
            g *= p
    return f, g


def dickson_param(m: int, h: int) -> tuple[int, int]:
    """Return (e, n) so that (m, n, e) builds a triple with c - b = m."""
    if m < 1 or h < 1:
        raise PytriError("m and h must be positive")
    f, g = _square_split(2 * m)
    return f * g * h, g * h * h


def normalize_primitive(a: int, b: int, c: int) -> PythTriple:
    if min(a, b, c) <= 0 or a * a + b * b != c * c:
        raise NotPythagoreanError(f"[{a}, {b}, {c}] is not a Pythagorean triple")
    g = math.gcd(a, b, c)
    a, b, c = a // g, b // g, c // g
    if a % 2 == 0:
        a, b = b, a
    return PythTriple(a, b, c)


def _require_normalized(t: PythTriple):
    if not t.normalized:
        raise PytriError(f"{t} is not a normalized primitive triple (a odd, gcd 1)")


def half_angle_tangents(t: PythTriple) -> tuple[Fraction, Fraction]:
    """(q/p, q'/p') = (r1/r2, r1/r3) in lowest terms."""
    _require_normalized(t)
    r1, r2, r3, _ = t.radii()
    return Fraction(r1, r2), Fraction(r1, r3)


def p_sequence(t: PythTriple) -> PSequence:
    qp_ratio, qpp_ratio = half_angle_tangents(t)
    q, p = qp_ratio.numerator, qp_ratio.denominator
    qp, pp = qpp_ratio.numerator, qpp_ratio.denominator
    return PSequence(qp, q, p, pp)


def triple_from_pseq(P: PSequence) -> tuple[RadiusQuadruple, PythTriple]:
    qp, q, p, pp = P
    r1, r2, r3, r4 = q * qp, p * qp, q * pp, p * pp
    return RadiusQuadruple(r1, r2, r3, r4), PythTriple(r1 + r2, r1 + r3, r2 + r3)


def standard_forms(P: PSequence) -> dict[str, PythTriple]:
    """The four classical parameterizations of the triple belonging to P.

    ``"q,p"`` uses the even pair alone, ``"q',p'"`` the odd pair alone (its
    legs come out as [b, a] and are swapped back), and the two mixed forms
    ``"sum"`` and ``"difference"`` differ only in how the hypotenuse is built.
    """
    qp, q, p, pp = P
    b19 = (pp * pp - qp * qp) // 2
    a19 = pp * qp
    c19 = (pp * pp + qp * qp) // 2
    return {
        "q,p": PythTriple(p * p - q * q, 2 * p * q, p * p + q * q),
        "q',p'": PythTriple(a19, b19, c19),
        "sum": PythTriple(pp * qp, 2 * p * q, p * qp + q * pp),
        "difference": PythTriple(pp * qp, 2 * p * q, p * pp - q * qp),
    }


def primitive_triples_bruteforce(limit: int) -> set[PythTriple]:
    """Every normalized primitive triple with c <= limit, by direct search."""
    out = set()
    for c in range(5, limit + 1):
        for a in range(1, c):
            b2 = c * c - a * a
            b = math.isqrt(b2)
            if b > 0 and b * b == b2 and a % 2 == 1 and math.gcd(a, b) == 1:
                out.add(PythTriple(a, b, c))
    return out

