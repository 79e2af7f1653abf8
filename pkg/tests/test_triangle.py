from fractions import Fraction

import pytest
from hypothesis import given

from pytri.errors import DegenerateTriangleError
from pytri.exact import Surd
from pytri.triangle import (
    RadiusQuadruple,
    Triangle,
    area,
    equi_radii,
    heron_area_sq,
    heron_classical,
    radii_from_sides,
    sides_from_radii,
)

from conftest import positive_rationals


def test_radii_of_345():
    r = radii_from_sides(Triangle(3, 4, 5))
    assert r.as_tuple() == (1, 2, 3, 6)
    assert heron_area_sq(r) == 36
    assert area(r) == 6


def test_equi_radii_right_triangle_rational():
    r = radii_from_sides(Triangle(3, 4, 5))
    assert equi_radii(r) == [6, 3, 2, 1]


def test_equi_radii_surd():
    r = radii_from_sides(Triangle(2, 3, 4))
    s = equi_radii(r)
    assert all(isinstance(v, Surd) for v in s)
    assert [v.square() for v in s] == [heron_area_sq(r) / ri**2 for ri in r]


def test_degenerate_rejected():
    with pytest.raises(DegenerateTriangleError):
        Triangle(1, 2, 3)
    with pytest.raises(DegenerateTriangleError):
        RadiusQuadruple(1, 2, 3, 7)
    with pytest.raises(DegenerateTriangleError):
        RadiusQuadruple.from_three(0, 1, 1)


def test_scaled():
    assert Triangle(3, 4, 5).scaled(Fraction(1, 2)).sides() == (Fraction(3, 2), 2, Fraction(5, 2))


@given(positive_rationals, positive_rationals, positive_rationals)
def test_round_trip_from_radii(r1, r2, r3):
    r = RadiusQuadruple.from_three(r1, r2, r3)
    assert radii_from_sides(sides_from_radii(r)) == r


@given(positive_rationals, positive_rationals, positive_rationals)
def test_heron_forms_agree(r1, r2, r3):
    r = RadiusQuadruple.from_three(r1, r2, r3)
    t = sides_from_radii(r)
    assert heron_area_sq(r) == heron_classical(t)
