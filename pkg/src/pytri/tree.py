"""The ternary tree of primitive Pythagorean triples rooted at [3, 4, 5].

Three independent constructions are provided and cross-check each other:

* promotion of P-sequences (an ex-circle takes the place of the in-circle),
* the three 3x3 integer matrices acting on [a, b, c],
* Price's signed-perimeter rule.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import InvalidSequenceError, RootError
from .pythagoras import PSequence, PythTriple, p_sequence, triple_from_pseq

ROOT = PythTriple(3, 4, 5)
ROOT_PSEQ = PSequence(1, 1, 2, 3)
DEGENERATE_PARENT = (0, 1, 1)


class Branch(str, enum.Enum):
    L = "L"  # promotes r3
    M = "M"  # promotes r4
    R = "R"  # promotes r2


BRANCHES = (Branch.L, Branch.M, Branch.R)

# column-sign variants of B = [[1,2,2],[2,1,2],[2,2,3]]
MATRICES = {
    Branch.L: ((-1, 2, 2), (-2, 1, 2), (-2, 2, 3)),
    Branch.M: ((1, 2, 2), (2, 1, 2), (2, 2, 3)),
    Branch.R: ((1, -2, 2), (2, -1, 2), (2, -2, 3)),
}

PRICE_SIGNS = {
    Branch.L: (-1, 1, 1),
    Branch.M: (1, 1, 1),
    Branch.R: (1, -1, 1),
}
PARENT_SIGNS = (1, 1, -1)


def _branch(b) -> Branch:
    return b if isinstance(b, Branch) else Branch(str(b).upper())


def promote(P: PSequence, b: Branch | str) -> PSequence:
    qp, q, p, pp = P
    b = _branch(b)
    if b is Branch.R:
        return PSequence.complete(qp, p)
    if b is Branch.L:
        return PSequence.complete(pp, q)
    return PSequence.complete(pp, p)


def demote(P: PSequence) -> tuple[PSequence, Branch] | None:
    """Parent of P and the branch that leads back to P; None at the root."""
    x, y = P.qp, P.q
    if x == y:
        if P != ROOT_PSEQ:
            raise InvalidSequenceError(f"{P.as_list()} is not a valid sequence")
        return None
    if x < y:
        return PSequence(x, y - x, y, 2 * y - x), Branch.R
    if 2 * y - x > 0:
        return PSequence(2 * y - x, x - y, y, x), Branch.M
    return PSequence(x - 2 * y, y, x - y, x), Branch.L


def demote_tangent_steps(t: Fraction) -> list[Fraction]:
    """One demotion of a half-angle tangent, with its intermediate forms.

    x/y goes to x/(y-2x); a negative value is negated, then a value above one
    is inverted.  The list starts with the input and ends with the result.
    """
    t = Fraction(t)
    if t in (Fraction(1, 2), Fraction(1, 3)):
        raise RootError(f"{t} is a tangent of the root triple")
    if not 0 < t < 1:
        raise InvalidSequenceError(f"half-angle tangent must lie in (0, 1): {t}")
    x, y = t.numerator, t.denominator
    cur = Fraction(x, y - 2 * x)
    steps = [t, cur]
    if cur < 0:
        cur = -cur
        steps.append(cur)
    if cur > 1:
        cur = 1 / cur
        steps.append(cur)
    return steps


def demote_tangent(t: Fraction) -> Fraction:
    return demote_tangent_steps(t)[-1]


def _apply(matrix, t: Sequence[int]) -> tuple[int, int, int]:
    return tuple(sum(m * v for m, v in zip(row, t)) for row in matrix)


def promote_triple(t: PythTriple, b: Branch | str) -> PythTriple:
    return PythTriple(*_apply(MATRICES[_branch(b)], t))


def demote_triple(t: PythTriple) -> PythTriple:
    """Parent via [|a-2e|, |b-2e|, c-2e] with e = a+b-c."""
    if t == ROOT:
        raise RootError("[3, 4, 5] has no parent")
    a, b, c = t
    e = a + b - c
    return PythTriple(abs(a - 2 * e), abs(b - 2 * e), c - 2 * e)


def price_step(t: Sequence[int], signs: Sequence[int]) -> tuple[int, int, int]:
    a, b, c = (s * v for s, v in zip(signs, t))
    per2 = 2 * (a + b + c)
    return abs(per2 - a), abs(per2 - b), abs(per2 + c)


def family_price(t: PythTriple) -> tuple[PythTriple | tuple[int, int, int], dict[Branch, PythTriple]]:
    """Parent and the three children of ``t`` by the signed-perimeter rule.

    The parent of the root comes out as the degenerate [1, 0, 1], reported
    sorted as the plain tuple (0, 1, 1).
    """
    children = {b: PythTriple(*price_step(t, PRICE_SIGNS[b])) for b in BRANCHES}
    parent = price_step(t, PARENT_SIGNS)
    if 0 in parent:
        return tuple(sorted(parent)), children
    return PythTriple(*parent), children


def path_of(t: PythTriple) -> str:
    P = p_sequence(t)
    path = []
    while (step := demote(P)) is not None:
        P, b = step
        path.append(b.value)
    return "".join(reversed(path))


def triple_at(path: str) -> PythTriple:
    P = ROOT_PSEQ
    for ch in path:
        P = promote(P, ch)
    return triple_from_pseq(P)[1]


def _children_pseq(P: PSequence):
    for b in BRANCHES:
        yield promote(P, b)


def enumerate_triples(limit: int, method: str = "pseq") -> Iterator[PythTriple]:
    """Depth-first walk emitting every primitive triple with c <= limit once.

    ``method`` picks the child rule: ``"pseq"``, ``"matrix"`` or ``"price"``.
    Children always have a larger hypotenuse, so a branch is cut as soon as
    it passes the limit.  Emission order is L, M, R pre-order.
    """
    if limit < 5:
        return
    if method == "pseq":
        stack = [ROOT_PSEQ]
        while stack:
            P = stack.pop()
            t = triple_from_pseq(P)[1]
            if t.c > limit:
                continue
            yield t
            stack.extend(reversed(list(_children_pseq(P))))
        return
    if method == "matrix":
        step = lambda t: [promote_triple(t, b) for b in BRANCHES]  # noqa: E731
    elif method == "price":
        step = lambda t: list(family_price(t)[1].values())  # noqa: E731
    else:
        raise ValueError(f"unknown method {method!r}")
    stack = [ROOT]
    while stack:
        t = stack.pop()
        if t.c > limit:
            continue
        yield t
        stack.extend(reversed(step(t)))


def children(t: PythTriple) -> dict[Branch, PythTriple]:
    P = p_sequence(t)
    return {b: triple_from_pseq(promote(P, b))[1] for b in BRANCHES}


def parent(t: PythTriple) -> tuple[PythTriple, Branch] | None:
    step = demote(p_sequence(t))
    if step is None:
        return None
    P, b = step
    return triple_from_pseq(P)[1], b
