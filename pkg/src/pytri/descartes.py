"""Oriented-curvature quadruples of four mutually tangent circles.

Every function takes and returns plain tuples of four exact curvatures (ints
or Fractions).  A negative curvature marks a circle enclosing the other
three.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DescartesError, PytriError
from .exact import Number, Surd, frac, sqrt_exact
from .pythagoras import PythTriple, half_angle_tangents

Quad = tuple  # four ints or Fractions


def verify_dce(k: Sequence[Number]) -> bool:
    """Sum of squares equals half the square of the sum, exactly."""
    if len(k) != 4:
        raise DescartesError("a Descartes quadruple has four curvatures")
    k = [frac(v) for v in k]
    return 2 * sum(v * v for v in k) == sum(k) ** 2


def verify_dce_float(k: Sequence[float], tol: float = 1e-12) -> bool:
    k = [float(v) for v in k]
    lhs = sum(v * v for v in k)
    rhs = 0.5 * sum(k) ** 2
    return abs(lhs - rhs) <= tol * max(1.0, abs(lhs))


def pt_relations(k: Sequence[Number]) -> bool:
    """k2*k3 + k1*k4 = 0 and k4 + k1 = k2 + k3."""
    k1, k2, k3, k4 = k
    return k2 * k3 + k1 * k4 == 0 and k4 + k1 == k2 + k3


def pt_quadruple(t: PythTriple) -> Quad:
    """[r4, r3, r2, -r1]: curvatures of the four circles of t scaled by 1/area."""
    if not t.primitive:
        raise PytriError(f"{t} is not primitive")
    r1, r2, r3, r4 = t.radii()
    return (r4, r3, r2, -r1)


def reflect(k: Sequence[Number], i: int) -> Quad:
    """Swap circle ``i`` (0-based) for the other circle tangent to the rest."""
    k = tuple(k)
    others = sum(k) - k[i]
    return k[:i] + (2 * others - k[i],) + k[i + 1 :]


def reflect_all(k: Sequence[Number]) -> Quad:
    """The four reflected curvatures at once: 2*sum - 3*k_i."""
    s = sum(k)
    return tuple(2 * s - 3 * v for v in k)


def inner_curvature(t: PythTriple) -> int:
    """Curvature of the small circle nestled among the three positive ones."""
    r1, _, _, r4 = t.radii()
    return 4 * r4 - r1


def solve_fourth(f: Number, g: Number, h: Number) -> tuple[Fraction | Surd, Fraction | Surd]:
    """Both curvatures completing (f, g, h) to a Descartes quadruple.

    The roots are f+g+h ± 2*sqrt(fg+gh+hf); exact Fractions when the radicand
    is a rational square, :class:`Surd` values otherwise.  Smaller root first.
    """
    f, g, h = frac(f), frac(g), frac(h)
    radicand = f * g + g * h + h * f
    if radicand < 0:
        raise DescartesError(f"no real fourth circle for ({f}, {g}, {h})")
    s = f + g + h
    return sqrt_exact(radicand, scale=-2, offset=s), sqrt_exact(radicand, scale=2, offset=s)


def sort_quad(k: Sequence[Number]) -> Quad:
    return tuple(sorted(k))


@dataclass(frozen=True)
class RootQuadruple:
    """Sorted [-a, b, c, d] that no reflection can shrink.

    ``reflects_to`` is None when d reflects to itself (-a+b+c = d), else the
    larger curvature e that d reflects to.
    """

    a: int
    b: int
    c: int
    d: int
    reflects_to: int | None

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (-self.a, self.b, self.c, self.d)

    def as_list(self) -> list[int]:
        return list(self.as_tuple())

    @property
    def self_reflecting(self) -> bool:
        return self.reflects_to is None

    @property
    def tag(self) -> str:
        return "==" if self.reflects_to is None else f"><{self.reflects_to}"

    def __str__(self):
        return f"[{-self.a}, {self.b}, {self.c}, {self.d}{self.tag}]"


def _check_integral(k: Sequence[Number]) -> tuple[int, ...]:
    vals = [frac(v) for v in k]
    if any(v.denominator != 1 for v in vals):
        raise DescartesError(f"quadruple {list(k)} is not integral")
    if not verify_dce(vals):
        raise DescartesError(f"quadruple {list(k)} fails the Descartes equation")
    ints = tuple(int(v) for v in vals)
    if sum(1 for v in ints if v < 0) != 1:
        raise DescartesError(f"quadruple {list(k)} needs exactly one negative entry")
    return ints


def reduction_chain(k: Sequence[Number]) -> list[Quad]:
    """Sorted quadruples visited while reflecting the largest entry down."""
    cur = sort_quad(_check_integral(k))
    chain = [cur]
    while True:
        u, r, s, t = cur
        v = u + r + s
        if t <= v:
            return chain
        nxt = sort_quad((u, r, s, 2 * v - t))
        if nxt[3] >= t:
            raise DescartesError("reduction failed to shrink the largest entry")
        cur = nxt
        chain.append(cur)


def reduce_to_root(k: Sequence[Number]) -> RootQuadruple:
    u, r, s, t = reduction_chain(k)[-1]
    v = u + r + s
    return RootQuadruple(-u, r, s, t, None if t == v else 2 * v - t)


def bilateral_eq24(m: int, n: int) -> Quad:
    """[-mn, m(m+n), n(m+n), m²+mn+n²]; its last entry reflects to itself."""
    if m < 1 or n < 1 or m > n:
        raise DescartesError("need 1 <= m <= n")
    if math.gcd(m, n) != 1:
        raise DescartesError(f"m={m} and n={n} are not coprime")
    return (-m * n, m * (m + n), n * (m + n), m * m + m * n + n * n)


def bilateral_eq25(t: PythTriple) -> tuple[Quad, Quad]:
    """The two bilateral quadruples whose generators are the tangents of t.

    With radii [r1, r2, r3, r4] they are [-b/2, r3, r4, c + b/2] and
    [-a, 2*r2, 2*r4, 2c + a].
    """
    if not t.normalized:
        raise PytriError(f"{t} is not a normalized primitive triple")
    a, b, c = t
    _, r2, r3, r4 = t.radii()
    first = (-(b // 2), r3, r4, c + b // 2)
    second = (-a, 2 * r2, 2 * r4, 2 * c + a)
    tq, tqq = half_angle_tangents(t)
    if first != bilateral_eq24(tq.numerator, tq.denominator) or second != bilateral_eq24(
        tqq.numerator, tqq.denominator
    ):
        raise DescartesError(f"closed forms disagree with the generator form for {t}")
    return first, second


def symmetric_family(t: int, k: int) -> Quad:
    """[-a, b, c, c] with a = 2k(t-k), b = 2k(t+k), c = t², halved for even t."""
    if k < 1 or t <= 2 * k or math.gcd(t, k) != 1:
        raise DescartesError(f"need t/k > 2 in lowest terms, got {t}/{k}")
    a, b, c = 2 * k * (t - k), 2 * k * (t + k), t * t
    if t % 2 == 0:
        a, b, c = a // 2, b // 2, c // 2
    return (-a, b, c, c)


def table_families(k: int) -> list[Quad]:
    """Members of the one-parameter patterns [-m, m+8, n, n+4] and [-m, m+9, n, n+3]."""
    if k < 1:
        raise DescartesError("k must be positive")
    m1, n1 = 2 * (2 * k - 1), 2 * k * k + 2 * k - 1
    m2, n2 = 3 * k, k * k + 3 * k + 1
    return [(-m1, m1 + 8, n1, n1 + 4), (-m2, m2 + 9, n2, n2 + 3)]


def recognize_eq24(k: Sequence[int]) -> tuple[int, int] | None:
    """Generators (m, n) when sorted [-a, b, c, d] has -a+b = d-c = m², b/c = m/n."""
    u, b, c, d = sort_quad(k)
    if u >= 0:
        return None
    diff = u + b
    if diff <= 0 or diff != d - c:
        return None
    m = math.isqrt(diff)
    if m * m != diff:
        return None
    ratio = Fraction(b, c)
    if ratio.numerator != m:
        return None
    n = ratio.denominator
    if math.gcd(m, n) != 1 or bilateral_eq24(m, n) != (u, b, c, d):
        return None
    return m, n


def root_table(max_c: int, include_bilateral: bool = True) -> list[tuple[RootQuadruple, list[PythTriple]]]:
    """Distinct root quadruples reached from primitive triples with c <= max_c.

    Each triple contributes the root of its basic quadruple and, with
    ``include_bilateral``, its two self-reflecting bilateral quadruples.
    Rows are sorted by (a, b, c, d) and carry their source triples.
    """
    from .tree import enumerate_triples

    sources: dict[RootQuadruple, set[PythTriple]] = {}
    for t in enumerate_triples(max_c):
        quads = [pt_quadruple(t)]
        if include_bilateral:
            quads.extend(bilateral_eq25(t))
        for q in quads:
            sources.setdefault(reduce_to_root(q), set()).add(t)
    rows = sorted(sources.items(), key=lambda kv: (kv[0].a, kv[0].b, kv[0].c, kv[0].d))
    return [(root, sorted(ts, key=lambda t: (t.c, t.a))) for root, ts in rows]
