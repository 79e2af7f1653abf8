"""Integral Apollonian packings with exact circle positions.

A circle is stored as (k, k*x, k*y): oriented curvature times center.  Under
Descartes reflection those products transform by the same linear rule as the
curvatures, x' = 2*(sum of the other three) - x, so every reflected circle
keeps an exact rational center.  Each new circle is checked for exact
tangency with its three neighbours before it is accepted.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .descartes import RootQuadruple, reduce_to_root, verify_dce
from .errors import DescartesError, InvariantViolation, PytriError
from .exact import Number, fmt, frac, rational_sqrt
from .pythagoras import PythTriple


class InconsistentSeed(PytriError):
    pass


@dataclass(frozen=True)
class PackedCircle:
    k: Fraction
    kx: Fraction
    ky: Fraction
    depth: int = field(default=0, compare=False)

    @classmethod
    def at(cls, k: Number, x: Number, y: Number, depth: int = 0) -> PackedCircle:
        k = frac(k)
        return cls(k, k * frac(x), k * frac(y), depth)

    @property
    def key(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.k, self.kx, self.ky

    @property
    def center(self) -> tuple[Fraction, Fraction]:
        return self.kx / self.k, self.ky / self.k

    @property
    def radius(self) -> Fraction:
        return abs(1 / self.k)

    def to_json(self) -> dict:
        x, y = self.center
        return {"curvature": fmt(self.k), "x": str(x), "y": str(y), "depth": self.depth}


def tangent(p: PackedCircle, q: PackedCircle) -> bool:
    """|center difference|² = (1/kp + 1/kq)², cleared of denominators."""
    dx = q.k * p.kx - p.k * q.kx
    dy = q.k * p.ky - p.k * q.ky
    return dx * dx + dy * dy == (p.k + q.k) ** 2


def check_quadruple(circles: Sequence[PackedCircle]) -> None:
    if not verify_dce([c.k for c in circles]):
        raise InconsistentSeed(f"curvatures {[fmt(c.k) for c in circles]} fail the Descartes equation")
    for p, q in itertools.combinations(circles, 2):
        if p.key == q.key or not tangent(p, q):
            raise InconsistentSeed(f"circles {p.key} and {q.key} are not tangent")


def seed_packing(t: PythTriple) -> list[PackedCircle]:
    """The four circles of a triple's rectangle, scaled by 1/area.

    Curvatures r4, r3, r2, -r1 sit at C, B, A, D.
    """
    if not t.primitive:
        raise PytriError(f"{t} is not primitive")
    r1, r2, r3, r4 = t.radii()
    g = r1 * r4
    a, b = Fraction(t.a, g), Fraction(t.b, g)
    seed = [
        PackedCircle.at(r4, 0, 0),
        PackedCircle.at(r3, a, 0),
        PackedCircle.at(r2, 0, b),
        PackedCircle.at(-r1, a, b),
    ]
    check_quadruple(seed)
    return seed


def seed_from_quadruple(k: Sequence[Number]) -> list[PackedCircle]:
    """Place a Descartes quadruple of non-zero curvatures at exact positions.

    Three circles whose centers are not collinear are laid out with the
    first at the origin and the second on the positive x-axis; the fourth
    center then follows from a linear solve.  The result is returned in the
    input order.
    """
    ks = [frac(v) for v in k]
    if len(ks) != 4 or 0 in ks:
        raise InconsistentSeed("need four non-zero curvatures")
    if not verify_dce(ks):
        raise InconsistentSeed(f"{[fmt(v) for v in ks]} fails the Descartes equation")
    rho = [1 / v for v in ks]  # oriented radii
    order = sorted(range(4), key=lambda i: (ks[i], i))
    for i, j, l in itertools.permutations(order, 3):
        dij, dil, djl = abs(rho[i] + rho[j]), abs(rho[i] + rho[l]), abs(rho[j] + rho[l])
        x = (dil * dil - djl * djl + dij * dij) / (2 * dij)
        y = rational_sqrt(dil * dil - x * x)
        if y is None:
            raise InconsistentSeed("triad cannot be placed at rational coordinates")
        if y == 0:
            continue
        centers = {i: (Fraction(0), Fraction(0)), j: (dij, Fraction(0)), l: (x, y)}
        (m,) = set(range(4)) - {i, j, l}
        centers[m] = _fourth_center(centers, rho, (i, j, l), m)
        seed = [PackedCircle.at(ks[n], *centers[n]) for n in range(4)]
        check_quadruple(seed)
        return seed
    raise InconsistentSeed("every triad is collinear")


def _fourth_center(centers, rho, triad, m):
    # |z - z_n|² = (rho_m + rho_n)² for the three placed circles, differenced
    (x0, y0), (x1, y1), (x2, y2) = (centers[n] for n in triad)
    s0, s1, s2 = ((rho[m] + rho[n]) ** 2 for n in triad)
    a1, b1 = 2 * (x1 - x0), 2 * (y1 - y0)
    c1 = s0 - s1 + x1 * x1 - x0 * x0 + y1 * y1 - y0 * y0
    a2, b2 = 2 * (x2 - x0), 2 * (y2 - y0)
    c2 = s0 - s2 + x2 * x2 - x0 * x0 + y2 * y2 - y0 * y0
    det = a1 * b2 - a2 * b1
    return (c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det


def reflect_circle(quad: Sequence[PackedCircle], i: int, depth: int = 0) -> PackedCircle:
    others = [c for n, c in enumerate(quad) if n != i]
    old = quad[i]
    return PackedCircle(
        2 * sum(c.k for c in others) - old.k,
        2 * sum(c.kx for c in others) - old.kx,
        2 * sum(c.ky for c in others) - old.ky,
        depth,
    )


@dataclass
class Packing:
    circles: list[PackedCircle]
    bound: int
    root: RootQuadruple | None
    quadruples: list[tuple[int, int, int, int]]  # indices into circles

    def curvatures(self) -> list[Fraction]:
        return sorted(c.k for c in self.circles)

    @property
    def enclosing(self) -> PackedCircle | None:
        neg = [c for c in self.circles if c.k < 0]
        return neg[0] if neg else None

    def to_jsonl(self) -> str:
        return "".join(json.dumps(c.to_json(), sort_keys=True) + "\n" for c in self.circles)


def generate(seed: Sequence[PackedCircle], bound: Number, max_circles: int | None = None) -> Packing:
    """Breadth-first Descartes reflection from ``seed``.

    A reflection is followed when the new curvature is within ``bound`` or
    smaller than the curvature it replaces; only circles within the bound
    (and the seed itself) are kept.  Circles are deduplicated on the exact
    (k, kx, ky) triple.
    """
    seed = list(seed)
    check_quadruple(seed)
    bound = frac(bound)
    index: dict[tuple, int] = {}
    circles: list[PackedCircle] = []
    kept: set[int] = set()

    def intern(c: PackedCircle, keep: bool) -> int:
        n = index.get(c.key)
        if n is None:
            n = index[c.key] = len(circles)
            circles.append(c)
        if keep:
            kept.add(n)
        return n

    start = tuple(intern(c, True) for c in seed)
    seen_quads = {frozenset(start)}
    quads = [start]
    queue = deque([(start, None)])
    while queue:
        quad, last = queue.popleft()
        members = [circles[n] for n in quad]
        for i in range(4):
            if i == last:
                continue
            new = reflect_circle(members, i, depth=max(c.depth for c in members) + 1)
            if new.k > bound and new.k >= members[i].k:
                continue
            for n, c in enumerate(members):
                if n != i and not tangent(new, c):
                    raise InvariantViolation(f"reflected circle {new.key} not tangent to {c.key}")
            curv = [c.k for c in members]
            curv[i] = new.k
            if not verify_dce(curv):
                raise InvariantViolation(f"reflection broke the Descartes equation: {curv}")
            nq = quad[:i] + (intern(new, new.k <= bound),) + quad[i + 1 :]
            fq = frozenset(nq)
            if fq in seen_quads:
                continue
            seen_quads.add(fq)
            quads.append(nq)
            queue.append((nq, i))
            if max_circles is not None and len(kept) > max_circles:
                raise PytriError(f"packing exceeds {max_circles} circles")

    remap = {old: new for new, old in enumerate(sorted(kept))}
    out = [circles[n] for n in sorted(kept)]
    kept_quads = [tuple(remap[n] for n in q) for q in quads if all(n in kept for n in q)]
    root = None
    try:
        root = reduce_to_root([c.k for c in seed])
    except DescartesError:
        pass
    return Packing(out, int(bound) if bound.denominator == 1 else bound, root, kept_quads)


@dataclass(frozen=True)
class Rectangle:
    curvatures: tuple[int, int, int, int]  # sorted [-a, b, c, d]
    circles: tuple[PackedCircle, ...]
    triple: PythTriple


def _is_rectangle(p: Sequence[tuple[Fraction, Fraction]]) -> bool:
    """p[0]-p[3] and p[1]-p[2] are the diagonals."""
    (x0, y0), (x1, y1), (x2, y2), (x3, y3) = p
    if (x0 + x3, y0 + y3) != (x1 + x2, y1 + y2):
        return False
    return (x0 - x3) ** 2 + (y0 - y3) ** 2 == (x1 - x2) ** 2 + (y1 - y2) ** 2


def detect_rectangles(p: Packing) -> list[Rectangle]:
    """Tangent quadruples [-a, b, c, d] with d = a+b+c, bc = ad and centers on a rectangle."""
    found: dict[frozenset, Rectangle] = {}
    for q in p.quadruples:
        members = sorted((p.circles[n] for n in q), key=lambda c: (c.k, c.kx, c.ky))
        ks = [c.k for c in members]
        if any(k.denominator != 1 for k in ks):
            continue
        u, b, c, d = (int(k) for k in ks)
        a = -u
        if a <= 0 or d != a + b + c or b * c != a * d:
            continue
        if not _is_rectangle([m.center for m in members]):
            continue
        key = frozenset(m.key for m in members)
        if key not in found:
            found[key] = Rectangle((u, b, c, d), tuple(members), PythTriple(a + b, a + c, b + c))
    return sorted(found.values(), key=lambda r: (r.curvatures, [m.key for m in r.circles]))


def packing_from_triple(t: PythTriple, bound: Number) -> Packing:
    return generate(seed_packing(t), bound)


def packing_from_quadruple(k: Sequence[Number], bound: Number) -> Packing:
    return generate(seed_from_quadruple(k), bound)


def _num(v: float) -> str:
    s = f"{v:.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(
    p: Packing,
    scale: float = 500.0,
    label_ratio: float = 0.1,
    labels: bool = True,
    margin: float = 10.0,
) -> str:
    """SVG document with one <circle> per packed circle.

    The enclosing circle is drawn with radius ``scale`` pixels and is only
    stroked.  Circles whose radius is at least ``label_ratio`` times the
    enclosing radius carry their curvature as a label.  Output depends only
    on the packing contents.
    """
    outer = p.enclosing
    if outer is not None:
        cx, cy = outer.center
        big = outer.radius
    else:
        xs = [c.center[0] for c in p.circles]
        ys = [c.center[1] for c in p.circles]
        cx, cy = (min(xs) + max(xs)) / 2, (min(ys) + max(ys)) / 2
        big = max(max(abs(c.center[0] - cx), abs(c.center[1] - cy)) + c.radius for c in p.circles)
    px = scale / float(big)
    size = 2 * scale + 2 * margin
    half = size / 2
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_num(size)}" '
        f'height="{_num(size)}" viewBox="0 0 {_num(size)} {_num(size)}">',
        '<g fill="none" stroke="black" stroke-width="1">',
    ]
    text = []
    for c in sorted(p.circles, key=lambda c: (c.k, c.ky, c.kx)):
        x, y = c.center
        sx = half + float(x - cx) * px
        sy = half - float(y - cy) * px  # SVG y grows downward
        r = float(c.radius) * px
        attrs = f'cx="{_num(sx)}" cy="{_num(sy)}" r="{_num(r)}"'
        if c.k < 0:
            out.append(f'<circle {attrs} class="enclosing"/>')
        else:
            out.append(f'<circle {attrs} fill="#dde6f0"/>')
        if labels and c.radius >= label_ratio * big:
            fs = _num(max(8.0, min(r * 0.6, 48.0)))
            ty = sy if c.k > 0 else sy - r * 0.85
            text.append(
                f'<text x="{_num(sx)}" y="{_num(ty)}" font-size="{fs}" text-anchor="middle" '
                f'dominant-baseline="central">{fmt(c.k)}</text>'
            )
    out.append("</g>")
    if text:
        out.append('<g font-family="sans-serif" fill="black">')
        out.extend(text)
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def count_labels(svg: str) -> int:
    return svg.count("<text ")


def curvature_multiset(circles: Iterable[PackedCircle]) -> list[Fraction]:
    return sorted(c.k for c in circles)
