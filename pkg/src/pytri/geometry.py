"""Exact coordinate checks of the right-triangle circle configurations.

The right angle sits at the origin C, with B = (a, 0), A = (0, b) and
D = (a, b) completing the rectangle.  All coordinates are Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import NotPythagoreanError
from .exact import Number, frac
from .pythagoras import PythTriple
from .tree import Branch


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)

    def scale(self, k) -> Point:
        return Point(k * self.x, k * self.y)


def pt(x, y) -> Point:
    return Point(frac(x), frac(y))


def dist_sq(p: Point, q: Point) -> Fraction:
    d = p - q
    return d.x * d.x + d.y * d.y


@dataclass(frozen=True)
class NamedCircle:
    center: Point
    radius: Fraction
    label: str = ""

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be positive")


def _right_sides(t) -> tuple[Fraction, Fraction, Fraction]:
    a, b, c = (frac(v) for v in t)
    if min(a, b, c) <= 0 or a * a + b * b != c * c:
        raise NotPythagoreanError(f"[{a}, {b}, {c}] is not a right triangle")
    return a, b, c


def _radii(a, b, c):
    half = Fraction(1, 2)
    return half * (a + b - c), half * (a - b + c), half * (-a + b + c), half * (a + b + c)


def tangency(p: NamedCircle, q: NamedCircle) -> str | None:
    """"external", "internal" or None, decided exactly."""
    d2 = dist_sq(p.center, q.center)
    if d2 == (p.radius + q.radius) ** 2:
        return "external"
    if d2 == (p.radius - q.radius) ** 2 and p.radius != q.radius:
        return "internal"
    return None


def contact_point(p: NamedCircle, q: NamedCircle) -> Point:
    kind = tangency(p, q)
    if kind is None:
        raise ValueError(f"circles {p.label} and {q.label} are not tangent")
    denom = p.radius + q.radius if kind == "external" else p.radius - q.radius
    return p.center + (q.center - p.center).scale(p.radius / denom)


def orthogonal(p: NamedCircle, q: NamedCircle) -> bool:
    return dist_sq(p.center, q.center) == p.radius**2 + q.radius**2


@dataclass
class AlphaSystem:
    a: Fraction
    b: Fraction
    c: Fraction
    radii: tuple[Fraction, Fraction, Fraction, Fraction]
    circles: list[NamedCircle]
    contacts: dict[str, Point]


def alpha_system(t: Sequence[Number]) -> AlphaSystem:
    """Circles of radii r1..r4 about C, B, A, D and their six contact points."""
    a, b, c = _right_sides(t)
    r1, r2, r3, r4 = _radii(a, b, c)
    circles = [
        NamedCircle(pt(0, 0), r1, "K1"),
        NamedCircle(pt(a, 0), r2, "K2"),
        NamedCircle(pt(0, b), r3, "K3"),
        NamedCircle(pt(a, b), r4, "K4"),
    ]
    contacts = {
        "T1": pt(-r3, b),
        "T2": pt(0, r1),
        "T3": pt(r1, 0),
        "T4": pt(a, -r2),
        "T5": pt(-a * r1 / c, -b * r1 / c),
        "T6": pt(a * r3 / c, b * r2 / c),
    }
    return AlphaSystem(a, b, c, (r1, r2, r3, r4), circles, contacts)


# circle pairs meeting at each contact point, as indices into circles
CONTACT_PAIRS = {"T1": (2, 3), "T2": (0, 2), "T3": (0, 1), "T4": (1, 3), "T5": (0, 3), "T6": (1, 2)}


def rho(p: Point, r1: Fraction) -> Point:
    """Reflection in the line x + y = r1."""
    return Point(r1 - p.y, r1 - p.x)


def sigma(p: Point, b: Fraction) -> Point:
    return Point(p.x, b - p.y)


def tau(p: Point, a: Fraction) -> Point:
    return Point(a - p.x, p.y)


@dataclass
class DualSystemReport:
    on_line: bool
    symmetric_pair: bool
    shared_contacts: bool
    orthogonal_triples: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> str | None:
        return self.failures[0] if self.failures else None


def verify_dual_systems(t: Sequence[Number]) -> DualSystemReport:
    """Check the dual tangent systems claims for a right triangle, exactly."""
    sysa = alpha_system(t)
    a, b, c = sysa.a, sysa.b, sysa.c
    r1, r2, r3, _ = sysa.radii
    T = sysa.contacts
    failures = []

    # contact formulas must match the circles they claim to join
    for name, (i, j) in CONTACT_PAIRS.items():
        if contact_point(sysa.circles[i], sysa.circles[j]) != T[name]:
            failures.append(f"contact {name} does not join its circles")

    on_line = all(T[n].x + T[n].y == r1 for n in ("T1", "T2", "T3", "T4"))
    if not on_line:
        failures.append("claim 1: T1..T4 not on x + y = r1")

    symmetric = (
        rho(T["T5"], r1) == T["T6"]
        and rho(T["T6"], r1) == T["T5"]
        and all(rho(T[n], r1) == T[n] for n in ("T1", "T2", "T3", "T4"))
        and r1 / r2 == b / (a + c)
        and r1 / r3 == a / (b + c)
    )
    if not symmetric:
        failures.append("claim 2: T5, T6 not exchanged by the reflection")

    beta = [NamedCircle(rho(k.center, r1), k.radius, "beta" + k.label[1:]) for k in sysa.circles]
    alpha_points = set(T.values())
    beta_points = set()
    shared = True
    for i in range(4):
        for j in range(i + 1, 4):
            if tangency(beta[i], beta[j]) is None:
                shared = False
                continue
            beta_points.add(contact_point(beta[i], beta[j]))
    shared = shared and beta_points == alpha_points
    if not shared:
        failures.append("claim 3: the reflected system has different contact points")

    # the image of K_i cuts every alpha circle at right angles except its
    # diagonal partner (K1-K4, K2-K3)
    ortho = all(
        {j for j in range(4) if orthogonal(beta[i], sysa.circles[j])} == {0, 1, 2, 3} - {3 - i}
        for i in range(4)
    )
    if not ortho:
        failures.append("claim 4: a reflected circle is not orthogonal to the other three")

    return DualSystemReport(on_line, symmetric, shared, ortho, failures)


verify_theorem1 = verify_dual_systems


def equi_circles(t: Sequence[Number]) -> list[NamedCircle]:
    """In-circle and ex-circles of the triangle with vertices C, B, A."""
    a, b, c = _right_sides(t)
    r1, r2, r3, r4 = _radii(a, b, c)
    return [
        NamedCircle(pt(r1, r1), r1, "I1"),
        NamedCircle(pt(r2, -r2), r2, "I2"),
        NamedCircle(pt(-r3, r3), r3, "I3"),
        NamedCircle(pt(r4, r4), r4, "I4"),
    ]


def symmetries_map_alpha_to_equi(t: Sequence[Number]) -> bool:
    """K1..K4 go to the equi-circles under rho, tau.rho, sigma.rho, sigma.tau.rho."""
    sysa = alpha_system(t)
    a, b = sysa.a, sysa.b
    r1 = sysa.radii[0]
    maps = [
        lambda p: rho(p, r1),
        lambda p: tau(rho(p, r1), a),
        lambda p: sigma(rho(p, r1), b),
        lambda p: sigma(tau(rho(p, r1), a), b),
    ]
    targets = equi_circles(t)
    return all(
        f(k.center) == e.center and k.radius == e.radius
        for f, k, e in zip(maps, sysa.circles, targets)
    )


def altitude_foot(t: Sequence[Number]) -> Point:
    a, b, c = _right_sides(t)
    return pt(a * b * b / (c * c), a * a * b / (c * c))


@dataclass
class NinePointFamily:
    triple: PythTriple
    parent: PythTriple | tuple[int, int, int]
    children: dict[Branch, PythTriple]
    certificates: dict[str, tuple[int, int, int]]
    foot_on_circle: bool


def _certificate(f: NamedCircle, other: NamedCircle, kind: str) -> tuple[int, int, int] | None:
    """Four times (|dx|, |dy|, radius sum or difference), if tangent that way."""
    d = other.center - f.center
    rad = f.radius + other.radius if kind == "external" else abs(f.radius - other.radius)
    if d.x * d.x + d.y * d.y != rad * rad:
        return None
    vals = [4 * abs(d.x), 4 * abs(d.y), 4 * rad]
    if any(v.denominator != 1 for v in vals):
        return None
    return tuple(int(v) for v in vals)


def nine_point_family(t: PythTriple) -> NinePointFamily:
    """Parent and children of t read off the nine-point circle's tangencies.

    The nine-point circle has center (a/4, b/4) and radius c/4.  Its offsets
    to the three ex-circle centers, together with the radius sums, are
    quarter-sized copies of the three children; the in-circle gives the
    parent and the circum-circle gives t itself.
    """
    if not t.normalized:
        raise NotPythagoreanError(f"{t} is not a normalized primitive triple")
    a, b, c = (Fraction(v) for v in t)
    nine = NamedCircle(pt(a / 4, b / 4), c / 4, "N")
    i1, i2, i3, i4 = equi_circles(t)
    circum = NamedCircle(pt(a / 2, b / 2), c / 2, "M")
    certs = {
        "I1": _certificate(nine, i1, "internal"),
        "I2": _certificate(nine, i2, "external"),
        "I3": _certificate(nine, i3, "external"),
        "I4": _certificate(nine, i4, "external"),
        "M": _certificate(nine, circum, "internal"),
    }
    missing = [k for k, v in certs.items() if v is None]
    if missing:
        raise AssertionError(f"nine-point circle not tangent to {missing} for {t}")
    children = {
        Branch.L: PythTriple(*certs["I3"]),
        Branch.M: PythTriple(*certs["I4"]),
        Branch.R: PythTriple(*certs["I2"]),
    }
    par = certs["I1"]
    parent = tuple(sorted(par)) if 0 in par else PythTriple(*par)
    foot = altitude_foot(t)
    return NinePointFamily(
        triple=t,
        parent=parent,
        children=children,
        certificates=certs,
        foot_on_circle=dist_sq(foot, nine.center) == nine.radius**2,
    )
