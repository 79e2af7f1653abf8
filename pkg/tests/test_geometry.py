from fractions import Fraction

import pytest
from hypothesis import given

from pytri.errors import NotPythagoreanError
from pytri.geometry import (
    NamedCircle,
    alpha_system,
    altitude_foot,
    contact_point,
    equi_circles,
    nine_point_family,
    orthogonal,
    pt,
    symmetries_map_alpha_to_equi,
    tangency,
    verify_dual_systems,
)
from pytri.pythagoras import PythTriple
from pytri.tree import BRANCHES, Branch, parent, promote_triple

from conftest import triples


def test_tangency_kinds():
    a = NamedCircle(pt(0, 0), Fraction(1))
    b = NamedCircle(pt(3, 0), Fraction(2))
    c = NamedCircle(pt(1, 0), Fraction(2))
    assert tangency(a, b) == "external"
    assert tangency(a, c) == "internal"
    assert contact_point(a, b) == pt(1, 0)
    assert contact_point(a, c) == pt(-1, 0)
    assert tangency(a, NamedCircle(pt(5, 5), Fraction(1))) is None


def test_orthogonal():
    assert orthogonal(NamedCircle(pt(0, 0), Fraction(3)), NamedCircle(pt(5, 0), Fraction(4)))


def test_alpha_contacts_345():
    T = alpha_system((3, 4, 5)).contacts
    assert T["T2"] == pt(0, 1) and T["T3"] == pt(1, 0)
    assert T["T5"] == pt(Fraction(-3, 5), Fraction(-4, 5))


@pytest.mark.parametrize("sides", [(3, 4, 5), (5, 12, 13), (6, 8, 10), ("3/7", "4/7", "5/7")])
def test_dual_systems(sides):
    rep = verify_dual_systems([Fraction(s) for s in sides])
    assert rep.ok, rep.first_failure
    assert rep.on_line and rep.symmetric_pair and rep.shared_contacts and rep.orthogonal_triples


def test_non_right_rejected():
    with pytest.raises(NotPythagoreanError):
        verify_dual_systems((2, 3, 4))


@given(triples(200))
def test_symmetries_give_equi_circles(t):
    assert symmetries_map_alpha_to_equi(t)


def test_equi_circles_345():
    assert [c.radius for c in equi_circles((3, 4, 5))] == [1, 2, 3, 6]


def test_nine_point_root():
    fam = nine_point_family(PythTriple(3, 4, 5))
    assert fam.parent == (0, 1, 1)
    assert fam.children == {
        Branch.L: PythTriple(15, 8, 17),
        Branch.M: PythTriple(21, 20, 29),
        Branch.R: PythTriple(5, 12, 13),
    }
    assert fam.certificates["M"] == (3, 4, 5)
    assert fam.foot_on_circle


def test_nine_point_parent():
    assert nine_point_family(PythTriple(33, 56, 65)).parent == PythTriple(15, 8, 17)


@given(triples(200))
def test_nine_point_matches_tree(t):
    fam = nine_point_family(t)
    assert fam.children == {b: promote_triple(t, b) for b in BRANCHES}
    par = parent(t)
    if par is not None:
        assert fam.parent == par[0]
    assert fam.foot_on_circle


def test_altitude_foot_345():
    assert altitude_foot((3, 4, 5)) == pt(Fraction(48, 25), Fraction(36, 25))
